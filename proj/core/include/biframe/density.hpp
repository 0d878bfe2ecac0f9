#ifndef BIFRAME_DENSITY_HPP
#define BIFRAME_DENSITY_HPP

#include <vector>

#include "biframe/biframe.hpp"
#include "biframe/subbilocale.hpp"

namespace biframe {

/// Booleanization of a frame: the regular elements a = a** with
/// beta(a) = a**, an onto dense hom.
struct Booleanization {
  FramePtr frame;
  FramePtr booleanized;
  FrameHom beta;
  std::vector<int> regulars;  // ambient indices of the regular elements
};

Booleanization booleanization_frame(FramePtr l);

/// Dense means the underlying ambient frame hom is dense.
bool is_dense_biframe_hom(const BiframeHom& f);

/// For an onto frame hom f out of the ambient: f is dense iff the
/// extremal-epi part of its factorization is dense. Returns whether the two
/// sides agree.
bool density_factor_check(const Biframe& l, const FrameHom& f);

/// The congruence generated by { (a, a**) : a in L1 ∪ L2 }, pseudocomplements
/// taken in the ambient frame.
Congruence congruence_I(const Biframe& l);

/// The least dense subbilocale, with both the quotient presentation and the
/// right-adjoint embedding of its carrier back into L0.
struct BiframeBooleanization {
  BiframePtr biframe;
  Congruence kernel;          // kernel of the pushout of beta|L1 ⊕ beta|L2 along q_L
  BiframeHom beta;            // projection L -> 𝔅L (dense extremal epi)
  Subbilocale least_dense;
  std::vector<int> embedded;  // the quotient carrier embedded back into L0
};

/// Cross-checked against the generated congruence: B(congruence_I) must equal
/// the kernel, and congruence_I itself must equal it whenever both components
/// are closed under a ↦ a**. Throws RouteMismatch on disagreement.
BiframeBooleanization least_dense_subbilocale(BiframePtr l);

/// f(a**) <= f(a)** for all component elements a of the domain. Sufficient
/// for the induced map below to exist, and equivalent to its existence when
/// both endpoint biframes have components closed under a ↦ a**.
bool skeletal_check(const BiframeHom& f);

/// The unique f^ with f^ ∘ beta_dom = beta_cod ∘ f. Throws NotSkeletal when
/// no such map exists.
BiframeHom induced_booleanization_map(const BiframeHom& f,
                                      const BiframeBooleanization& bdom,
                                      const BiframeBooleanization& bcod);

}  // namespace biframe

#endif
