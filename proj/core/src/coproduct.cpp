#include "biframe/coproduct.hpp"

#include <algorithm>
#include <map>

#include "biframe/error.hpp"

namespace biframe {

Coproduct coproduct(FramePtr a, FramePtr b, int max_ground) {
  const auto ja = join_irreducible_elements(a->poset(), a->tables());
  const auto jb = join_irreducible_elements(b->poset(), b->tables());
  const int na = static_cast<int>(ja.size());
  const int nb = static_cast<int>(jb.size());
  if (na * nb > max_ground)
    throw Error(ErrorKind::SizeLimitExceeded,
                "coproduct ground set " + std::to_string(na * nb) + " exceeds cap " +
                    std::to_string(max_ground));

  // Product of the join-irreducible posets; ground point (i,j) has index i*nb+j.
  std::vector<std::string> glabels(static_cast<std::size_t>(na) * nb);
  std::vector<std::pair<int, int>> gpairs;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      glabels[i * nb + j] = a->label(ja[i]) + "|" + b->label(jb[j]);
      for (int i2 = 0; i2 < na; ++i2)
        for (int j2 = 0; j2 < nb; ++j2)
          if (a->leq(ja[i], ja[i2]) && b->leq(jb[j], jb[j2]))
            gpairs.emplace_back(i * nb + j, i2 * nb + j2);
    }
  FinPoset ground(std::move(glabels), gpairs);
  const auto masks = downset_masks(ground, max_ground);
  if (masks.size() > 64)
    throw Error(ErrorKind::SizeLimitExceeded, "coproduct carrier exceeds 64 elements");

  std::map<std::uint64_t, int> index_of;
  for (std::size_t i = 0; i < masks.size(); ++i) index_of[masks[i]] = static_cast<int>(i);

  // Rectangle mask of a pair (x,y) of frame elements.
  auto rect_mask = [&](int x, int y) {
    std::uint64_t m = 0;
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < nb; ++j)
        if (a->leq(ja[i], x) && b->leq(jb[j], y)) m |= std::uint64_t{1} << (i * nb + j);
    return m;
  };

  Coproduct cp;
  cp.left = a;
  cp.right = b;
  cp.generator_index.assign(static_cast<std::size_t>(a->size()) * b->size(), -1);
  for (int x = 0; x < a->size(); ++x)
    for (int y = 0; y < b->size(); ++y)
      cp.generator_index[x * b->size() + y] = index_of.at(rect_mask(x, y));

  // Maximal-rectangle decomposition of every downset.
  std::vector<std::uint64_t> all_rects;
  std::vector<std::pair<int, int>> rect_pair;
  for (int x = 0; x < a->size(); ++x)
    for (int y = 0; y < b->size(); ++y) {
      const std::uint64_t m = rect_mask(x, y);
      if (m == 0) continue;
      bool dup = false;
      for (auto r : all_rects)
        if (r == m) dup = true;
      if (!dup) {
        all_rects.push_back(m);
        rect_pair.emplace_back(x, y);
      }
    }
  cp.rects.resize(masks.size());
  std::vector<std::string> labels(masks.size());
  const std::uint64_t full =
      ground.size() == 0 ? 0 : (ground.size() == 64 ? ~std::uint64_t{0}
                                                    : (std::uint64_t{1} << ground.size()) - 1);
  for (std::size_t e = 0; e < masks.size(); ++e) {
    const std::uint64_t d = masks[e];
    std::vector<std::size_t> inside;
    for (std::size_t r = 0; r < all_rects.size(); ++r)
      if ((all_rects[r] & ~d) == 0) inside.push_back(r);
    for (std::size_t r : inside) {
      bool maximal = true;
      for (std::size_t s : inside)
        if (s != r && all_rects[r] != all_rects[s] && (all_rects[r] & ~all_rects[s]) == 0)
          maximal = false;
      if (maximal) cp.rects[e].push_back(rect_pair[r]);
    }
    std::sort(cp.rects[e].begin(), cp.rects[e].end());
    if (masks.size() == 1) {
      labels[e] = "0";
    } else if (d == full) {
      labels[e] = "1";
    } else if (d == 0) {
      labels[e] = "0";
    } else {
      std::string l;
      for (std::size_t k = 0; k < cp.rects[e].size(); ++k) {
        if (k) l += " v ";
        l += a->label(cp.rects[e][k].first) + "+" + b->label(cp.rects[e][k].second);
      }
      labels[e] = l;
    }
  }

  std::vector<std::pair<int, int>> pairs;
  for (std::size_t x = 0; x < masks.size(); ++x)
    for (std::size_t y = 0; y < masks.size(); ++y)
      if ((masks[x] & ~masks[y]) == 0)
        pairs.emplace_back(static_cast<int>(x), static_cast<int>(y));
  cp.frame = FiniteFrame::validate(FinPoset(std::move(labels), pairs));

  std::vector<int> li(a->size()), ri(b->size());
  for (int x = 0; x < a->size(); ++x) li[x] = cp.generator(x, b->top());
  for (int y = 0; y < b->size(); ++y) ri[y] = cp.generator(a->top(), y);
  cp.inj_left = validate_hom(a, cp.frame, std::move(li));
  cp.inj_right = validate_hom(b, cp.frame, std::move(ri));
  return cp;
}

FrameHom hom_coproduct(const FrameHom& f, const FrameHom& g,
                       const Coproduct& dom, const Coproduct& cod) {
  if (f.dom != dom.left || g.dom != dom.right || f.cod != cod.left || g.cod != cod.right)
    throw Error(ErrorKind::BadInput, "hom_coproduct endpoints do not match the coproducts");
  const int n = dom.frame->size();
  std::vector<int> map(n);
  for (int e = 0; e < n; ++e) {
    int v = cod.frame->bottom();
    for (auto [x, y] : dom.rects[e])
      v = cod.frame->join(v, cod.generator(f.map[x], g.map[y]));
    map[e] = v;
  }
  return validate_hom(dom.frame, cod.frame, std::move(map));
}

}  // namespace biframe
