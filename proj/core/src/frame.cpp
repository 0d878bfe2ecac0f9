#include "biframe/frame.hpp"

#include <algorithm>
#include <cmath>

#include "biframe/error.hpp"

namespace biframe {

FramePtr FiniteFrame::validate(FinPoset p) {
  LatticeTables t = lattice_tables(p);
  const int n = p.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t.m(a, t.j(b, c)) != t.j(t.m(a, b), t.m(a, c)))
          throw Error(ErrorKind::NotDistributive,
                      "witness ('" + p.label(a) + "','" + p.label(b) + "','" +
                          p.label(c) + "')");
  return std::shared_ptr<const FiniteFrame>(new FiniteFrame(std::move(p), std::move(t)));
}

int FiniteFrame::heyting(int a, int b) const {
  int best = bottom();
  for (int x = 0; x < size(); ++x)
    if (leq(meet(a, x), b)) best = join(best, x);
  return best;
}

FrameHom validate_hom(FramePtr dom, FramePtr cod, std::vector<int> map) {
  if (static_cast<int>(map.size()) != dom->size())
    throw Error(ErrorKind::NotAHom, "map arity mismatch");
  for (int v : map)
    if (v < 0 || v >= cod->size()) throw Error(ErrorKind::NotAHom, "image out of range");
  if (map[dom->bottom()] != cod->bottom())
    throw Error(ErrorKind::NotAHom, "bottom not preserved");
  if (map[dom->top()] != cod->top())
    throw Error(ErrorKind::NotAHom, "top not preserved");
  for (int x = 0; x < dom->size(); ++x)
    for (int y = 0; y < dom->size(); ++y) {
      if (map[dom->meet(x, y)] != cod->meet(map[x], map[y]))
        throw Error(ErrorKind::NotAHom, "meet of ('" + dom->label(x) + "','" +
                                            dom->label(y) + "') not preserved");
      if (map[dom->join(x, y)] != cod->join(map[x], map[y]))
        throw Error(ErrorKind::NotAHom, "join of ('" + dom->label(x) + "','" +
                                            dom->label(y) + "') not preserved");
    }
  return FrameHom{std::move(dom), std::move(cod), std::move(map)};
}

FrameHom identity_hom(FramePtr l) {
  std::vector<int> map(l->size());
  for (int i = 0; i < l->size(); ++i) map[i] = i;
  return FrameHom{l, l, std::move(map)};
}

bool is_onto(const FrameHom& f) {
  std::vector<bool> hit(f.cod->size(), false);
  for (int v : f.map) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_injective(const FrameHom& f) {
  std::vector<bool> hit(f.cod->size(), false);
  for (int v : f.map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool is_dense_frame_hom(const FrameHom& f) {
  for (int x = 0; x < f.dom->size(); ++x)
    if (f.map[x] == f.cod->bottom() && x != f.dom->bottom()) return false;
  return true;
}

bool is_iso(const FrameHom& f) { return is_onto(f) && is_injective(f); }

FrameHom inverse_iso(const FrameHom& f) {
  if (!is_iso(f)) throw Error(ErrorKind::BadInput, "hom is not an isomorphism");
  std::vector<int> inv(f.cod->size(), -1);
  for (int x = 0; x < f.dom->size(); ++x) inv[f.map[x]] = x;
  return validate_hom(f.cod, f.dom, std::move(inv));
}

FrameHom compose(const FrameHom& g, const FrameHom& f) {
  std::vector<int> map(f.dom->size());
  for (int x = 0; x < f.dom->size(); ++x) map[x] = g.map[f.map[x]];
  return FrameHom{f.dom, g.cod, std::move(map)};
}

bool same_hom(const FrameHom& f, const FrameHom& g) { return f.map == g.map; }

std::vector<int> right_adjoint(const FrameHom& f) {
  std::vector<int> adj(f.cod->size());
  for (int y = 0; y < f.cod->size(); ++y) {
    int best = f.dom->bottom();  // f(0)=0 <= y always
    for (int x = 0; x < f.dom->size(); ++x)
      if (f.cod->leq(f.map[x], y)) best = f.dom->join(best, x);
    adj[y] = best;
  }
  return adj;
}

std::vector<int> subframe_generated(const FiniteFrame& l, std::vector<int> s) {
  std::vector<bool> in(l.size(), false);
  in[l.bottom()] = in[l.top()] = true;
  for (int x : s) in[x] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < l.size(); ++x)
      for (int y = 0; y < l.size(); ++y)
        if (in[x] && in[y]) {
          for (int z : {l.meet(x, y), l.join(x, y)})
            if (!in[z]) {
              in[z] = true;
              changed = true;
            }
        }
  }
  std::vector<int> out;
  for (int x = 0; x < l.size(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<FrameHom> enumerate_homs(FramePtr dom, FramePtr cod, std::size_t candidate_cap) {
  const auto ji = join_irreducible_elements(dom->poset(), dom->tables());
  const std::size_t k = ji.size();
  double cands = std::pow(static_cast<double>(cod->size()), static_cast<double>(k));
  if (cands > static_cast<double>(candidate_cap))
    throw Error(ErrorKind::SizeLimitExceeded,
                "hom search space of ~" + std::to_string(cands) + " candidates");

  std::vector<FrameHom> out;
  std::vector<int> img(k, 0);

  auto build_and_check = [&]() {
    std::vector<int> map(dom->size());
    for (int x = 0; x < dom->size(); ++x) {
      int v = cod->bottom();
      for (std::size_t i = 0; i < k; ++i)
        if (dom->leq(ji[i], x)) v = cod->join(v, img[i]);
      map[x] = v;
    }
    try {
      out.push_back(validate_hom(dom, cod, std::move(map)));
    } catch (const Error&) {
      // candidate is not a hom; skip
    }
  };

  // Backtracking over monotone assignments ji[i] -> cod.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      build_and_check();
      return;
    }
    for (int v = 0; v < cod->size(); ++v) {
      bool ok = true;
      for (std::size_t p = 0; p < i && ok; ++p) {
        if (dom->leq(ji[p], ji[i]) && !cod->leq(img[p], v)) ok = false;
        if (dom->leq(ji[i], ji[p]) && !cod->leq(v, img[p])) ok = false;
      }
      if (!ok) continue;
      img[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace biframe
