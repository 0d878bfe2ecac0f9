#include "biframe/builders.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "biframe/error.hpp"

namespace biframe {

FramePtr chain_frame(int n) {
  if (n < 1 || n > 26) throw Error(ErrorKind::BadInput, "chain length out of range");
  std::vector<std::string> labels(n);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    if (i == 0)
      labels[i] = "0";
    else if (i == n - 1)
      labels[i] = "1";
    else
      labels[i] = std::string(1, static_cast<char>('a' + i - 1));
    if (i) pairs.emplace_back(i - 1, i);
  }
  return FiniteFrame::validate(FinPoset(std::move(labels), pairs));
}

FramePtr diamond_frame() {
  return FiniteFrame::validate(
      FinPoset({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
}

BiframePtr diagonal_biframe(FramePtr l) {
  std::vector<int> all(l->size());
  for (int i = 0; i < l->size(); ++i) all[i] = i;
  return Biframe::validate(std::move(l), all, all);
}

BiframePtr biframe_33() {
  const Coproduct cp = coproduct(chain_frame(3), chain_frame(3));
  std::vector<int> c1(cp.inj_left.map), c2(cp.inj_right.map);
  return Biframe::validate(cp.frame, std::move(c1), std::move(c2));
}

FramePtr build_frame(const std::string& name) {
  std::string body = name;
  if (body.rfind("frame:", 0) == 0) body = body.substr(6);
  if (body == "2x2") return diamond_frame();
  if (!body.empty() && body.find_first_not_of("0123456789") == std::string::npos)
    return chain_frame(std::stoi(body));
  throw Error(ErrorKind::BadInput, "unknown frame builder '" + name + "'");
}

BiframePtr build_biframe(const std::string& name) {
  if (name == "biframe:3.3") return biframe_33();
  if (name.rfind("biframe:diag:", 0) == 0)
    return diagonal_biframe(build_frame(name.substr(13)));
  throw Error(ErrorKind::BadInput, "unknown biframe builder '" + name + "'");
}

namespace {

// Posets on k labelled points with the numeric order as a linear extension:
// subsets of the pairs i < j that are transitively closed. Every isomorphism
// class on k points shows up at least once.
std::vector<FinPoset> posets_on(int k) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) slots.emplace_back(i, j);
  std::vector<FinPoset> out;
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << slots.size()); ++sel) {
    std::vector<std::uint64_t> up(k, 0);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((sel >> s) & 1u) up[slots[s].first] |= std::uint64_t{1} << slots[s].second;
    bool transitive = true;
    for (int i = 0; i < k && transitive; ++i)
      for (int j = i + 1; j < k; ++j)
        if ((up[i] >> j) & 1u) {
          if (up[j] & ~up[i]) {
            transitive = false;
            break;
          }
        }
    if (!transitive) continue;
    std::vector<std::string> labels(k);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i) {
      labels[i] = "p" + std::to_string(i);
      for (int j = i + 1; j < k; ++j)
        if ((up[i] >> j) & 1u) pairs.emplace_back(i, j);
    }
    out.emplace_back(std::move(labels), pairs);
  }
  return out;
}

}  // namespace

std::vector<FramePtr> small_frames(int max_size) {
  std::vector<FramePtr> out;
  for (int k = 0; k < max_size; ++k)
    for (const FinPoset& ground : posets_on(k)) {
      FinPoset lat = downset_lattice(ground);
      if (lat.size() > max_size) continue;
      FramePtr f = FiniteFrame::validate(std::move(lat));
      bool known = false;
      for (const FramePtr& g : out)
        if (g->size() == f->size() &&
            lattices_isomorphic(g->poset(), g->tables(), f->poset(), f->tables())) {
          known = true;
          break;
        }
      if (!known) out.push_back(std::move(f));
    }
  return out;
}

std::vector<BiframePtr> quotient_biframes(FramePtr a, FramePtr b) {
  const Coproduct cp = coproduct(a, b);
  std::vector<BiframePtr> out;
  for (const Congruence& t : all_congruences(cp.frame)) {
    auto [q, proj] = quotient(t);
    std::vector<int> c1(a->size()), c2(b->size());
    for (int x = 0; x < a->size(); ++x) c1[x] = proj.map[cp.inj_left.map[x]];
    for (int y = 0; y < b->size(); ++y) c2[y] = proj.map[cp.inj_right.map[y]];
    out.push_back(Biframe::validate(q, std::move(c1), std::move(c2)));
  }
  return out;
}

namespace {

struct BiframeIso {
  const Biframe& a;
  const Biframe& b;
  std::vector<int> map;
  std::vector<bool> used;
  std::vector<int> ha, hb;
  std::vector<int> ca, cb;  // component membership signature per element

  bool compatible(int x, int y) const {
    for (int u = 0; u < a.ambient()->size(); ++u) {
      const int v = map[u];
      if (v < 0) continue;
      if (a.ambient()->leq(u, x) != b.ambient()->leq(v, y)) return false;
      if (a.ambient()->leq(x, u) != b.ambient()->leq(y, v)) return false;
    }
    return true;
  }

  bool run(int x) {
    if (x == a.ambient()->size()) return true;
    for (int y = 0; y < b.ambient()->size(); ++y) {
      if (used[y] || ha[x] != hb[y] || ca[x] != cb[y]) continue;
      if (!compatible(x, y)) continue;
      map[x] = y;
      used[y] = true;
      if (run(x + 1)) return true;
      map[x] = -1;
      used[y] = false;
    }
    return false;
  }
};

std::vector<int> component_signature(const Biframe& l) {
  std::vector<int> sig(l.ambient()->size(), 0);
  for (int x : l.component(1)) sig[x] |= 1;
  for (int x : l.component(2)) sig[x] |= 2;
  return sig;
}

}  // namespace

bool biframes_isomorphic(const Biframe& a, const Biframe& b) {
  const int n = a.ambient()->size();
  if (n != b.ambient()->size()) return false;
  if (a.component(1).size() != b.component(1).size()) return false;
  if (a.component(2).size() != b.component(2).size()) return false;
  BiframeIso s{a, b, std::vector<int>(n, -1), std::vector<bool>(n, false),
               {},   {}, component_signature(a), component_signature(b)};
  s.ha.resize(n);
  s.hb.resize(n);
  for (int i = 0; i < n; ++i) {
    s.ha[i] = a.ambient()->poset().height(i);
    s.hb[i] = b.ambient()->poset().height(i);
  }
  // An order isomorphism of finite lattices preserves meet and join, and the
  // signature check forces components onto components.
  return s.run(0);
}

std::vector<BiframePtr> acceptance_corpus() {
  std::vector<FramePtr> comps = small_frames(4);
  std::vector<BiframePtr> raw;
  for (const FramePtr& a : comps)
    for (const FramePtr& b : comps) {
      auto qs = quotient_biframes(a, b);
      raw.insert(raw.end(), qs.begin(), qs.end());
    }
  raw.push_back(biframe_33());
  for (const FramePtr& f : small_frames(5)) {
    // the 5-chain is dropped here: its component coproduct has 70 elements,
    // past the 64-element carrier cap
    try {
      raw.push_back(diagonal_biframe(f));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SizeLimitExceeded) throw;
    }
  }

  std::vector<BiframePtr> out;
  for (const BiframePtr& l : raw) {
    bool known = false;
    for (const BiframePtr& m : out)
      if (biframes_isomorphic(*l, *m)) {
        known = true;
        break;
      }
    if (!known) out.push_back(l);
  }
  return out;
}

std::vector<BiframeHom> enumerate_biframe_homs(BiframePtr dom, BiframePtr cod) {
  std::vector<BiframeHom> out;
  for (FrameHom& f0 : enumerate_homs(dom->ambient(), cod->ambient())) {
    bool ok = true;
    for (int i = 1; i <= 2 && ok; ++i)
      for (int x : dom->component(i))
        if (!cod->in_component(i, f0.map[x])) {
          ok = false;
          break;
        }
    if (ok) out.push_back(BiframeHom{dom, cod, std::move(f0)});
  }
  return out;
}

}  // namespace biframe
