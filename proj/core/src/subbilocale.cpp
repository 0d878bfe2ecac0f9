#include "biframe/subbilocale.hpp"

#include <algorithm>
#include <set>

#include "biframe/error.hpp"

namespace biframe {

namespace {

// Top (diagonal) first, bottom (single block) last, lexicographic otherwise.
void sort_kernels(std::vector<Congruence>& ks) {
  std::sort(ks.begin(), ks.end(), [](const Congruence& a, const Congruence& b) {
    if (a.num_blocks() != b.num_blocks()) return a.num_blocks() > b.num_blocks();
    return a.blocks() < b.blocks();
  });
}

// Deterministic naming: bounds, then closed/open congruences by element
// index, then meets of already-named pairs, then positional fallbacks.
std::vector<std::string> name_kernels(const FramePtr& frame,
                                      const std::vector<Congruence>& ks) {
  const int m = static_cast<int>(ks.size());
  std::vector<std::string> names(m);
  auto find_unnamed = [&](const Congruence& k) {
    for (int i = 0; i < m; ++i)
      if (names[i].empty() && ks[i] == k) return i;
    return -1;
  };
  const Congruence diag = Congruence::diagonal(frame);
  const Congruence all = Congruence::everything(frame);
  if (int i = find_unnamed(diag); i >= 0) names[i] = "1";
  if (int i = find_unnamed(all); i >= 0) names[i] = "0";
  for (int x = 0; x < frame->size(); ++x) {
    if (int i = find_unnamed(closed_congruence(frame, x)); i >= 0)
      names[i] = "c(" + frame->label(x) + ")";
    if (int i = find_unnamed(open_congruence(frame, x)); i >= 0)
      names[i] = "o(" + frame->label(x) + ")";
  }
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (names[a].empty() || names[b].empty()) continue;
      // meet in S(L0) = join in C(L0)
      if (int i = find_unnamed(congruence_join(ks[a], ks[b])); i >= 0)
        names[i] = names[a] + "^" + names[b];
    }
  for (int i = 0; i < m; ++i)
    if (names[i].empty()) names[i] = "s" + std::to_string(i);
  return names;
}

FinPoset kernels_poset(const std::vector<Congruence>& ks,
                       const std::vector<std::string>& labels) {
  // i <= j in the sublocale order iff kernel j refines kernel i
  std::vector<std::pair<int, int>> pairs;
  const int m = static_cast<int>(ks.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (ks[j].refines(ks[i])) pairs.emplace_back(i, j);
  return FinPoset(labels, pairs);
}

int find_kernel(const std::vector<Congruence>& ks, const Congruence& k) {
  for (std::size_t i = 0; i < ks.size(); ++i)
    if (ks[i] == k) return static_cast<int>(i);
  return -1;
}

}  // namespace

int SublocaleLattice::find(const Congruence& k) const { return find_kernel(kernels, k); }
FinPoset SublocaleLattice::poset() const { return kernels_poset(kernels, labels); }
int SubbilocaleLattice::find(const Congruence& k) const { return find_kernel(kernels, k); }
FinPoset SubbilocaleLattice::poset() const { return kernels_poset(kernels, labels); }

SublocaleLattice sublocale_lattice(FramePtr l, int size_cap) {
  SublocaleLattice s;
  s.frame = l;
  s.kernels = all_congruences(l, size_cap);
  sort_kernels(s.kernels);
  s.labels = name_kernels(l, s.kernels);
  return s;
}

Congruence closure_BL(const Biframe& l, const Congruence& s) {
  auto [q, proj] = quotient(s);
  return factor_kernel(l, proj);
}

Subbilocale make_subbilocale(BiframePtr l, const Congruence& kernel) {
  if (!(closure_BL(*l, kernel) == kernel))
    throw Error(ErrorKind::RouteMismatch, "kernel is not a B_L fixed point");
  auto [q, proj] = quotient(kernel);
  std::vector<int> comps[2];
  for (int i = 1; i <= 2; ++i)
    for (int x : l->component(i)) comps[i - 1].push_back(proj.map[x]);
  BiframePtr qb = Biframe::validate(q, comps[0], comps[1]);
  BiframeHom p = validate_biframe_hom(l, qb, proj);
  return Subbilocale{kernel, std::move(qb), std::move(p)};
}

namespace {

// Pushout of the quotient by t along an inclusion/hom h into the ambient:
// just the transported congruence.
Congruence transported(const FrameHom& h, const Congruence& t) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < h.dom->size(); ++a) pairs.emplace_back(h.map[a], h.map[t.rep(a)]);
  return congruence_closure(h.cod, pairs);
}

}  // namespace

SubbilocaleLattice subbilocale_lattice(BiframePtr l, int size_cap) {
  const FramePtr& l0 = l->ambient();

  // Route (i): fixed points of B_L over all of S(L0).
  std::set<Congruence> fixed;
  for (const Congruence& k : all_congruences(l0, size_cap))
    if (closure_BL(*l, k) == k) fixed.insert(k);

  // Route (ii): meet-closure of the component-induced generators.
  std::set<Congruence> gen;
  for (int i = 1; i <= 2; ++i)
    for (const Congruence& t : all_congruences(l->component_frame(i), size_cap))
      gen.insert(transported(l->inclusion(i), t));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Congruence> cur(gen.begin(), gen.end());
    for (std::size_t a = 0; a < cur.size(); ++a)
      for (std::size_t b = a + 1; b < cur.size(); ++b)
        if (gen.insert(congruence_join(cur[a], cur[b])).second) grew = true;
  }

  if (fixed != gen)
    throw Error(ErrorKind::RouteMismatch,
                "B_L fixed points disagree with meet-closure generation");

  SubbilocaleLattice out;
  out.biframe = l;
  out.kernels.assign(fixed.begin(), fixed.end());
  sort_kernels(out.kernels);
  out.labels = name_kernels(l0, out.kernels);
  return out;
}

Subbilocale induced_from_components(BiframePtr l, const Congruence& t1,
                                    const Congruence& t2) {
  Congruence k = congruence_join(transported(l->inclusion(1), t1),
                                 transported(l->inclusion(2), t2));
  return make_subbilocale(l, k);
}

bool components_identity_check(const BiframeHom& f) {
  const Congruence lhs = kernel(f.ambient);
  const Congruence rhs =
      congruence_join(transported(f.dom->inclusion(1), kernel(f.restriction(1))),
                      transported(f.dom->inclusion(2), kernel(f.restriction(2))));
  return lhs == rhs;
}

Congruence functor_S_kernel(const BiframeHom& f, const Congruence& q) {
  Congruence out = transported(f.ambient, q);
  if (!(closure_BL(*f.cod, out) == out))
    throw Error(ErrorKind::RouteMismatch, "transported kernel is not B-fixed in the codomain");
  return out;
}

LatticeAnalysis analyze(const FinPoset& lattice) {
  LatticeAnalysis a;
  const LatticeTables t = lattice_tables(lattice);
  a.distributive = is_distributive(lattice, t);
  a.coframe = a.distributive;  // finite coframes are finite distributive lattices
  a.pentagon = find_pentagon(lattice, t);
  return a;
}

}  // namespace biframe
