#include "biframe/density.hpp"

#include <algorithm>

#include "biframe/error.hpp"

namespace biframe {

Booleanization booleanization_frame(FramePtr l) {
  Booleanization b;
  b.frame = l;
  for (int x = 0; x < l->size(); ++x)
    if (l->double_pseudocomplement(x) == x) b.regulars.push_back(x);
  // Meets of regulars are regular and agree with the ambient ones; the
  // induced order therefore has all bounds and the sub-poset is a frame.
  b.booleanized = FiniteFrame::validate(l->poset().induced(b.regulars));
  std::vector<int> map(l->size());
  for (int x = 0; x < l->size(); ++x) {
    const int r = l->double_pseudocomplement(x);
    const auto it = std::lower_bound(b.regulars.begin(), b.regulars.end(), r);
    map[x] = static_cast<int>(it - b.regulars.begin());
  }
  b.beta = validate_hom(l, b.booleanized, std::move(map));
  return b;
}

bool is_dense_biframe_hom(const BiframeHom& f) { return is_dense_frame_hom(f.ambient); }

bool density_factor_check(const Biframe& l, const FrameHom& f) {
  if (!is_onto(f)) throw Error(ErrorKind::BadInput, "density_factor_check needs an onto hom");
  const Congruence k = factor_kernel(l, f);
  auto [q, fbar] = quotient(k);
  return is_dense_frame_hom(f) == is_dense_frame_hom(fbar);
}

Congruence congruence_I(const Biframe& l) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= 2; ++i)
    for (int a : l.component(i))
      pairs.emplace_back(a, l.ambient()->double_pseudocomplement(a));
  return congruence_closure(l.ambient(), pairs);
}

BiframeBooleanization least_dense_subbilocale(BiframePtr l) {
  // Normative route: the kernel of the pushout of beta|L1 ⊕ beta|L2 along q_L,
  // computed through the factorization machinery applied to beta_{L0}.
  Booleanization amb = booleanization_frame(l->ambient());
  BiframeBooleanization out{l, factor_kernel(*l, amb.beta), {},
                            {Congruence::diagonal(l->ambient()), {}, {}}, {}};

  // Generated-congruence route. The kernel always refines the congruence
  // generated by {(a, a**)}, with B of the latter closing the gap; the two
  // coincide outright when each component is closed under a ↦ a**, since a**
  // then rides along the component injection into the pushout.
  const Congruence gen = congruence_I(*l);
  if (!out.kernel.refines(gen))
    throw Error(ErrorKind::RouteMismatch,
                "pushout kernel does not refine the generated congruence");
  if (!(closure_BL(*l, gen) == out.kernel))
    throw Error(ErrorKind::RouteMismatch,
                "closure of the generated congruence misses the pushout kernel");
  bool star_closed = true;
  for (int i = 1; i <= 2 && star_closed; ++i)
    for (int a : l->component(i)) {
      const auto& comp = l->component(i);
      if (!std::binary_search(comp.begin(), comp.end(),
                              l->ambient()->double_pseudocomplement(a))) {
        star_closed = false;
        break;
      }
    }
  if (star_closed && !(out.kernel == gen))
    throw Error(ErrorKind::RouteMismatch,
                "generated congruence differs from the pushout kernel on "
                "star-closed components");

  out.least_dense = make_subbilocale(l, out.kernel);
  out.beta = out.least_dense.projection;

  // Embedded form q_*[L0/I]: the largest element of each block.
  const auto adj = right_adjoint(out.beta.ambient);
  out.embedded.resize(adj.size());
  for (std::size_t b = 0; b < adj.size(); ++b) out.embedded[b] = adj[b];
  return out;
}

bool skeletal_check(const BiframeHom& f) {
  const FramePtr& dl = f.dom->ambient();
  const FramePtr& cl = f.cod->ambient();
  for (int i = 1; i <= 2; ++i)
    for (int a : f.dom->component(i)) {
      const int lhs = f.ambient.map[dl->double_pseudocomplement(a)];
      const int rhs = cl->double_pseudocomplement(f.ambient.map[a]);
      if (!cl->leq(lhs, rhs)) return false;
    }
  return true;
}

BiframeHom induced_booleanization_map(const BiframeHom& f,
                                      const BiframeBooleanization& bdom,
                                      const BiframeBooleanization& bcod) {
  // beta_dom is onto, so any commuting map is forced:
  // f^(beta_dom(x)) = beta_cod(f(x)).
  const FrameHom& bd = bdom.beta.ambient;
  const FrameHom& bc = bcod.beta.ambient;
  std::vector<int> map(bd.cod->size(), -1);
  for (int x = 0; x < bd.dom->size(); ++x) {
    const int z = bd.map[x];
    const int v = bc.map[f.ambient.map[x]];
    if (map[z] < 0)
      map[z] = v;
    else if (map[z] != v)
      throw Error(ErrorKind::NotSkeletal, "no map commutes with the Booleanizations");
  }
  FrameHom f0;
  try {
    f0 = validate_hom(bd.cod, bc.cod, std::move(map));
  } catch (const Error&) {
    throw Error(ErrorKind::NotSkeletal, "induced map is not a frame homomorphism");
  }
  return validate_biframe_hom(bdom.least_dense.quotient_biframe,
                              bcod.least_dense.quotient_biframe, std::move(f0));
}

}  // namespace biframe
