#include "biframe/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "biframe/error.hpp"

namespace biframe {

Congruence::Congruence(FramePtr l, std::vector<int> block_of)
    : frame_(std::move(l)), block_(std::move(block_of)) {
  canonicalize();
}

void Congruence::canonicalize() {
  const int n = static_cast<int>(block_.size());
  // incoming block ids are arbitrary (kernel uses codomain indices)
  const int m = n ? *std::max_element(block_.begin(), block_.end()) + 1 : 0;
  std::vector<int> renumber(m, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (renumber[block_[i]] < 0) {
      renumber[block_[i]] = next++;
      reps_.push_back(i);
    }
  }
  for (int i = 0; i < n; ++i) block_[i] = renumber[block_[i]];
  num_blocks_ = next;
}

Congruence Congruence::diagonal(FramePtr l) {
  std::vector<int> b(l->size());
  std::iota(b.begin(), b.end(), 0);
  return Congruence(std::move(l), std::move(b));
}

Congruence Congruence::everything(FramePtr l) {
  std::vector<int> b(l->size(), 0);
  return Congruence(std::move(l), std::move(b));
}

Congruence Congruence::unchecked(FramePtr l, std::vector<int> block_of) {
  return Congruence(std::move(l), std::move(block_of));
}

Congruence Congruence::from_blocks(FramePtr l, std::vector<int> block_of) {
  Congruence c(l, std::move(block_of));
  const int n = l->size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!c.same(a, b)) continue;
      for (int x = 0; x < n; ++x) {
        if (!c.same(l->meet(a, x), l->meet(b, x)))
          throw Error(ErrorKind::BadInput,
                      "partition not compatible with meet at ('" + l->label(a) +
                          "','" + l->label(b) + "','" + l->label(x) + "')");
        if (!c.same(l->join(a, x), l->join(b, x)))
          throw Error(ErrorKind::BadInput,
                      "partition not compatible with join at ('" + l->label(a) +
                          "','" + l->label(b) + "','" + l->label(x) + "')");
      }
    }
  return c;
}

bool Congruence::refines(const Congruence& o) const {
  const int n = static_cast<int>(block_.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (same(a, b) && !o.same(a, b)) return false;
  return true;
}

namespace {

// Minimal union-find for the closure worklist.
struct Uf {
  std::vector<int> parent;
  explicit Uf(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

Congruence close(FramePtr l, Uf uf, std::deque<std::pair<int, int>> work) {
  const int n = l->size();
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    if (!uf.unite(a, b)) continue;
    for (int c = 0; c < n; ++c) {
      const int ma = l->meet(a, c), mb = l->meet(b, c);
      if (uf.find(ma) != uf.find(mb)) work.emplace_back(ma, mb);
      const int ja = l->join(a, c), jb = l->join(b, c);
      if (uf.find(ja) != uf.find(jb)) work.emplace_back(ja, jb);
    }
  }
  std::vector<int> blocks(n);
  for (int i = 0; i < n; ++i) blocks[i] = uf.find(i);
  return Congruence::unchecked(std::move(l), std::move(blocks));
}

}  // namespace

Congruence congruence_closure(FramePtr l, const std::vector<std::pair<int, int>>& pairs) {
  Uf uf(l->size());
  return close(std::move(l), std::move(uf), {pairs.begin(), pairs.end()});
}

Congruence congruence_closure_from(const Congruence& base,
                                   const std::vector<std::pair<int, int>>& pairs) {
  FramePtr l = base.frame();
  Uf uf(l->size());
  for (int i = 0; i < l->size(); ++i) uf.unite(base.rep(i), i);
  return close(std::move(l), std::move(uf), {pairs.begin(), pairs.end()});
}

std::pair<FramePtr, FrameHom> quotient(const Congruence& t) {
  const FramePtr& l = t.frame();
  const int k = t.num_blocks();
  std::vector<std::string> labels(k);
  for (int b = 0; b < k; ++b) labels[b] = l->label(t.block_rep(b));
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      const int x = t.block_rep(a), y = t.block_rep(b);
      if (t.same(l->join(x, y), y)) pairs.emplace_back(a, b);
    }
  FramePtr q = FiniteFrame::validate(FinPoset(std::move(labels), pairs));
  std::vector<int> proj(l->size());
  for (int x = 0; x < l->size(); ++x) proj[x] = t.block_of(x);
  return {q, validate_hom(l, q, std::move(proj))};
}

FrameHom factor_through(const FrameHom& h, const Congruence& t) {
  for (int x = 0; x < h.dom->size(); ++x) {
    const int r = t.rep(x);
    if (h.map[x] != h.map[r])
      throw Error(ErrorKind::NotConstantOnBlocks,
                  "('" + h.dom->label(x) + "','" + h.dom->label(r) + "')");
  }
  auto [q, p] = quotient(t);
  std::vector<int> map(q->size());
  for (int b = 0; b < q->size(); ++b) map[b] = h.map[t.block_rep(b)];
  return validate_hom(q, h.cod, std::move(map));
}

Congruence kernel(const FrameHom& f) {
  // fibers of f
  std::vector<int> blocks(f.dom->size());
  for (int x = 0; x < f.dom->size(); ++x) blocks[x] = f.map[x];
  return Congruence::unchecked(f.dom, std::move(blocks));
}

std::vector<Congruence> all_congruences(FramePtr l, int size_cap) {
  if (l->size() > size_cap)
    throw Error(ErrorKind::SizeLimitExceeded,
                "frame of size " + std::to_string(l->size()) +
                    " exceeds congruence-enumeration cap " + std::to_string(size_cap));
  std::set<Congruence> seen;
  std::deque<Congruence> queue;
  Congruence diag = Congruence::diagonal(l);
  seen.insert(diag);
  queue.push_back(diag);
  while (!queue.empty()) {
    Congruence c = queue.front();
    queue.pop_front();
    for (int a = 0; a < l->size(); ++a)
      for (int b = a + 1; b < l->size(); ++b) {
        if (c.same(a, b)) continue;
        Congruence next = congruence_closure_from(c, {{a, b}});
        if (seen.insert(next).second) queue.push_back(next);
      }
  }
  return {seen.begin(), seen.end()};
}

Congruence closed_congruence(FramePtr l, int a) {
  std::vector<int> blocks(l->size());
  for (int x = 0; x < l->size(); ++x) blocks[x] = l->join(x, a);
  return Congruence::unchecked(std::move(l), std::move(blocks));
}

Congruence open_congruence(FramePtr l, int a) {
  std::vector<int> blocks(l->size());
  for (int x = 0; x < l->size(); ++x) blocks[x] = l->meet(x, a);
  return Congruence::unchecked(std::move(l), std::move(blocks));
}

Congruence congruence_meet(const Congruence& a, const Congruence& b) {
  const int n = a.frame()->size();
  std::vector<int> key(n), out(n);
  for (int x = 0; x < n; ++x) key[x] = a.block_of(x) * n + b.block_of(x);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    out[x] = -1;
    for (int y = 0; y < x; ++y)
      if (key[y] == key[x]) {
        out[x] = out[y];
        break;
      }
    if (out[x] < 0) out[x] = next++;
  }
  return Congruence::unchecked(a.frame(), std::move(out));
}

Congruence congruence_join(const Congruence& a, const Congruence& b) {
  std::vector<std::pair<int, int>> pairs;
  const int n = a.frame()->size();
  for (int x = 0; x < n; ++x) {
    pairs.emplace_back(x, a.rep(x));
    pairs.emplace_back(x, b.rep(x));
  }
  return congruence_closure(a.frame(), pairs);
}

}  // namespace biframe
