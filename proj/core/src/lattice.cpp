#include "biframe/lattice.hpp"

#include <algorithm>
#include <bit>

#include "biframe/error.hpp"

namespace biframe {

namespace {

// Unique maximum of the element set given by mask, or -1.
int max_of(const FinPoset& p, std::uint64_t mask) {
  for (int g = 0; g < p.size(); ++g)
    if ((mask >> g) & 1u) {
      if ((mask & ~p.below_mask(g)) == 0) return g;
    }
  return -1;
}

int min_of(const FinPoset& p, std::uint64_t mask) {
  for (int g = 0; g < p.size(); ++g)
    if ((mask >> g) & 1u) {
      if ((mask & ~p.above_mask(g)) == 0) return g;
    }
  return -1;
}

}  // namespace

LatticeTables lattice_tables(const FinPoset& p) {
  const int n = p.size();
  if (n == 0) throw Error(ErrorKind::NotALattice, "empty carrier");
  LatticeTables t;
  t.n = n;
  t.meet.assign(static_cast<std::size_t>(n) * n, -1);
  t.join.assign(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int glb = max_of(p, p.below_mask(x) & p.below_mask(y));
      if (glb < 0)
        throw Error(ErrorKind::NotALattice,
                    "no meet of '" + p.label(x) + "' and '" + p.label(y) + "'");
      const int lub = min_of(p, p.above_mask(x) & p.above_mask(y));
      if (lub < 0)
        throw Error(ErrorKind::NotALattice,
                    "no join of '" + p.label(x) + "' and '" + p.label(y) + "'");
      t.meet[x * n + y] = glb;
      t.join[x * n + y] = lub;
    }
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  t.bottom = min_of(p, all);
  t.top = max_of(p, all);
  if (t.bottom < 0 || t.top < 0)
    throw Error(ErrorKind::NotALattice, "carrier is not bounded");
  return t;
}

std::vector<int> join_irreducible_elements(const FinPoset& p, const LatticeTables& t) {
  std::vector<int> out;
  for (int j = 0; j < p.size(); ++j) {
    if (j == t.bottom) continue;
    bool irreducible = true;
    for (int a = 0; a < p.size() && irreducible; ++a)
      for (int b = 0; b < p.size(); ++b)
        if (a != j && b != j && t.j(a, b) == j) {
          irreducible = false;
          break;
        }
    if (irreducible) out.push_back(j);
  }
  return out;
}

FinPoset join_irreducibles(const FinPoset& p, const LatticeTables& t) {
  return p.induced(join_irreducible_elements(p, t));
}

std::vector<std::uint64_t> downset_masks(const FinPoset& q, int max_ground) {
  const int n = q.size();
  if (n > max_ground)
    throw Error(ErrorKind::SizeLimitExceeded,
                "downset ground set of size " + std::to_string(n) + " exceeds cap " +
                    std::to_string(max_ground));
  std::vector<std::uint64_t> out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    bool closed = true;
    for (int x = 0; x < n && closed; ++x)
      if ((mask >> x) & 1u) {
        if (q.below_mask(x) & ~mask) closed = false;
      }
    if (closed) out.push_back(mask);
  }
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

FinPoset downset_lattice(const FinPoset& q, int max_ground) {
  const auto masks = downset_masks(q, max_ground);
  if (masks.size() > 64)
    throw Error(ErrorKind::SizeLimitExceeded,
                "lattice of " + std::to_string(masks.size()) + " downsets exceeds 64 elements");
  std::vector<std::string> labels;
  labels.reserve(masks.size());
  for (auto m : masks) {
    std::string l = "{";
    bool first = true;
    for (int x = 0; x < q.size(); ++x)
      if ((m >> x) & 1u) {
        if (!first) l += ",";
        l += q.label(x);
        first = false;
      }
    l += "}";
    labels.push_back(std::move(l));
  }
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t a = 0; a < masks.size(); ++a)
    for (std::size_t b = 0; b < masks.size(); ++b)
      if ((masks[a] & ~masks[b]) == 0)
        pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return FinPoset(std::move(labels), pairs);
}

bool is_distributive(const FinPoset& p, const LatticeTables& t) {
  const int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t.m(x, t.j(y, z)) != t.j(t.m(x, y), t.m(x, z))) return false;
  return true;
}

std::optional<std::array<int, 5>> find_pentagon(const FinPoset& p, const LatticeTables& t) {
  const int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      if (x == z || !p.leq(x, z)) continue;
      for (int y = 0; y < n; ++y) {
        if (p.leq(y, z) || p.leq(x, y)) continue;
        if (t.m(x, y) != t.m(z, y)) continue;
        if (t.j(x, y) != t.j(z, y)) continue;
        return std::array<int, 5>{t.m(x, y), x, z, y, t.j(x, y)};
      }
    }
  return std::nullopt;
}

std::optional<std::array<int, 5>> find_diamond_m3(const FinPoset& p, const LatticeTables& t) {
  const int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (p.leq(x, y) || p.leq(y, x)) continue;
      for (int z = y + 1; z < n; ++z) {
        if (p.leq(x, z) || p.leq(z, x) || p.leq(y, z) || p.leq(z, y)) continue;
        const int m = t.m(x, y);
        if (t.m(x, z) != m || t.m(y, z) != m) continue;
        const int j = t.j(x, y);
        if (t.j(x, z) != j || t.j(y, z) != j) continue;
        return std::array<int, 5>{m, x, y, z, j};
      }
    }
  return std::nullopt;
}

namespace {

struct IsoSearch {
  const FinPoset& a;
  const LatticeTables& ta;
  const FinPoset& b;
  const LatticeTables& tb;
  std::vector<int> map;   // a index -> b index or -1
  std::vector<bool> used;
  std::vector<int> order;
  std::vector<int> ha, hb;  // precomputed heights

  bool compatible(int x, int y) const {
    // y must relate to the images of already-placed elements exactly as x does.
    for (int u = 0; u < a.size(); ++u) {
      const int v = map[u];
      if (v < 0) continue;
      if (a.leq(u, x) != b.leq(v, y)) return false;
      if (a.leq(x, u) != b.leq(y, v)) return false;
    }
    return true;
  }

  bool run(std::size_t k) {
    if (k == order.size()) return true;
    const int x = order[k];
    for (int y = 0; y < b.size(); ++y) {
      if (used[y]) continue;
      if (ha[x] != hb[y]) continue;
      if (std::popcount(a.below_mask(x)) != std::popcount(b.below_mask(y))) continue;
      if (std::popcount(a.above_mask(x)) != std::popcount(b.above_mask(y))) continue;
      if (!compatible(x, y)) continue;
      map[x] = y;
      used[y] = true;
      if (run(k + 1)) return true;
      map[x] = -1;
      used[y] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> lattice_isomorphism(const FinPoset& a, const LatticeTables& ta,
                                                    const FinPoset& b, const LatticeTables& tb) {
  if (a.size() != b.size()) return std::nullopt;
  IsoSearch s{a, ta, b, tb, std::vector<int>(a.size(), -1),
              std::vector<bool>(b.size(), false), {}, {}, {}};
  s.ha.resize(a.size());
  s.hb.resize(b.size());
  for (int i = 0; i < a.size(); ++i) s.ha[i] = a.height(i);
  for (int i = 0; i < b.size(); ++i) s.hb[i] = b.height(i);
  s.order.resize(a.size());
  for (int i = 0; i < a.size(); ++i) s.order[i] = i;
  // Most constrained first: high degree elements early.
  std::sort(s.order.begin(), s.order.end(), [&](int x, int y) {
    return std::popcount(a.below_mask(x)) + std::popcount(a.above_mask(x)) >
           std::popcount(a.below_mask(y)) + std::popcount(a.above_mask(y));
  });
  if (!s.run(0)) return std::nullopt;
  // Order-isomorphisms of finite lattices preserve meet and join, but verify.
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y) {
      if (s.map[ta.m(x, y)] != tb.m(s.map[x], s.map[y])) return std::nullopt;
      if (s.map[ta.j(x, y)] != tb.j(s.map[x], s.map[y])) return std::nullopt;
    }
  return s.map;
}

bool lattices_isomorphic(const FinPoset& a, const LatticeTables& ta,
                         const FinPoset& b, const LatticeTables& tb) {
  return lattice_isomorphism(a, ta, b, tb).has_value();
}

}  // namespace biframe
