#ifndef BIFRAME_SUBBILOCALE_HPP
#define BIFRAME_SUBBILOCALE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "biframe/biframe.hpp"
#include "biframe/congruence.hpp"

namespace biframe {

/// Sublocales of a frame are represented by their kernel congruences, with
/// the reverse refinement order: <f> <= <g> iff kernel(g) ⊆ kernel(f).
/// Top is the diagonal, bottom the all-congruence.
struct SublocaleLattice {
  FramePtr frame;
  std::vector<Congruence> kernels;  // canonical order: top first, bottom last
  std::vector<std::string> labels;

  bool leq(int i, int j) const { return kernels[j].refines(kernels[i]); }
  int find(const Congruence& k) const;
  /// The lattice as a labelled poset (for DOT export and shape analysis).
  FinPoset poset() const;
};

SublocaleLattice sublocale_lattice(FramePtr l, int size_cap = 24);

/// The closure operator B_L at the congruence level: the kernel of the
/// extremal-epi part of the factorization of the quotient by s.
Congruence closure_BL(const Biframe& l, const Congruence& s);

/// Canonical representative of a subbilocale: a B_L-fixed kernel with its
/// quotient biframe and extremal-epi projection.
struct Subbilocale {
  Congruence kernel;
  BiframePtr quotient_biframe;
  BiframeHom projection;
};

/// Quotient biframe of a B_L-fixed kernel. Throws RouteMismatch when the
/// kernel is not fixed under B_L.
Subbilocale make_subbilocale(BiframePtr l, const Congruence& kernel);

struct SubbilocaleLattice {
  BiframePtr biframe;
  std::vector<Congruence> kernels;
  std::vector<std::string> labels;

  bool leq(int i, int j) const { return kernels[j].refines(kernels[i]); }
  int find(const Congruence& k) const;
  FinPoset poset() const;
};

/// Computed two ways and cross-checked: (i) B_L fixed points over S(L0);
/// (ii) meet-closure of the component-induced generators.
/// Throws RouteMismatch if the routes disagree.
SubbilocaleLattice subbilocale_lattice(BiframePtr l, int size_cap = 24);

/// Subbilocale induced by quotients of the two components: the meet in
/// S(L0) of the pushouts of each t_i along e_i.
Subbilocale induced_from_components(BiframePtr l, const Congruence& t1,
                                    const Congruence& t2);

/// <f> = S(e1)<f1> ∧ S(e2)<f2> as kernels on L0, for an extremal epi f.
bool components_identity_check(const BiframeHom& f);

/// S(f): transports a subbilocale kernel along f by pushout. The result is
/// asserted to be a B-fixed kernel of the codomain.
Congruence functor_S_kernel(const BiframeHom& f, const Congruence& q);

struct LatticeAnalysis {
  bool distributive = false;
  bool coframe = false;  // finite case: coincides with distributivity
  std::optional<std::array<int, 5>> pentagon;
};

LatticeAnalysis analyze(const FinPoset& lattice);

}  // namespace biframe

#endif
