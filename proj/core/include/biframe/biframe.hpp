#ifndef BIFRAME_BIFRAME_HPP
#define BIFRAME_BIFRAME_HPP

#include <memory>
#include <vector>

#include "biframe/congruence.hpp"
#include "biframe/coproduct.hpp"
#include "biframe/frame.hpp"
#include "biframe/pushout.hpp"

namespace biframe {

class Biframe;
using BiframePtr = std::shared_ptr<const Biframe>;

/// A biframe (L0, L1, L2): an ambient frame with two subframes whose union
/// generates it. Components are stored as ambient element subsets; the
/// component frames, inclusions e_i and the structure quotient
/// q_L: L1 ⊕ L2 -> L0 are derived during validation.
class Biframe {
 public:
  /// Throws NotSubframe, NotSubbasis or QLNotOnto with witnesses.
  static BiframePtr validate(FramePtr ambient, std::vector<int> comp1,
                             std::vector<int> comp2);

  const FramePtr& ambient() const { return ambient_; }
  /// i is 1 or 2.
  const std::vector<int>& component(int i) const { return comp_[i - 1]; }
  const FramePtr& component_frame(int i) const { return comp_frame_[i - 1]; }
  /// e_i : component frame -> ambient.
  const FrameHom& inclusion(int i) const { return incl_[i - 1]; }
  /// L1 ⊕ L2.
  const Coproduct& component_coproduct() const { return *cop_; }
  /// q_L : L1 ⊕ L2 -> L0 (onto).
  const FrameHom& structure_map() const { return ql_; }

  bool in_component(int i, int ambient_elt) const;
  /// Index of an ambient element inside component frame i (must be present).
  int component_index(int i, int ambient_elt) const;

 private:
  Biframe() = default;

  FramePtr ambient_;
  std::vector<int> comp_[2];
  FramePtr comp_frame_[2];
  FrameHom incl_[2];
  std::shared_ptr<const Coproduct> cop_;
  FrameHom ql_;
};

/// A biframe homomorphism is stored as its ambient frame map; component
/// restrictions are derived views.
struct BiframeHom {
  BiframePtr dom;
  BiframePtr cod;
  FrameHom ambient;

  /// f_i : dom component frame i -> cod component frame i.
  FrameHom restriction(int i) const;
};

/// Checks the ambient map sends components into components.
/// Throws ComponentNotPreserved naming the component and a witness element.
BiframeHom validate_biframe_hom(BiframePtr dom, BiframePtr cod, FrameHom ambient);

BiframeHom identity_biframe_hom(BiframePtr l);
BiframeHom compose(const BiframeHom& g, const BiframeHom& f);

/// Monic in BiFrm: both component restrictions are one-one.
bool is_monic(const BiframeHom& f);

/// Extremal-epi/mono factorization f = embed ∘ fbar with mid the biframe
/// (f(L), f[L1], f[L2]) built as the pushout of f1 ⊕ f2 along q_L.
struct Factorization {
  BiframeHom fbar;   // extremal epi onto mid
  BiframePtr mid;
  BiframeHom embed;  // monic into the codomain
};

Factorization factorize(const BiframeHom& f);

/// Kernel of the factorization's extremal-epi leg on the ambient frame of l,
/// for an arbitrary frame hom out of the ambient (the codomain need not be a
/// biframe). This is the B_L closure at the congruence level.
Congruence factor_kernel(const Biframe& l, const FrameHom& f0);

/// The R_f presentation of the image: quotient of f[L1] ⊕ f[L2] by the
/// congruence generated from equal joins of rectangles in L0, plus an
/// isomorphism onto the pushout-route image.
struct RfImage {
  FramePtr image;
  FrameHom iso_to_mid;  // image -> factorize(f).mid ambient
};

RfImage image_via_Rf(const BiframeHom& f);

/// Onto components plus a certified pushout square over q_L.
bool is_extremal_epi(const BiframeHom& f);

}  // namespace biframe

#endif
