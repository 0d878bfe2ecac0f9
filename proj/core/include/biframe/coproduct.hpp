#ifndef BIFRAME_COPRODUCT_HPP
#define BIFRAME_COPRODUCT_HPP

#include <utility>
#include <vector>

#include "biframe/frame.hpp"

namespace biframe {

/// Binary coproduct of finite frames, computed through Birkhoff duality:
/// the carrier is the lattice of down-sets of J(left) x J(right). The
/// element a⊕b is the down-set of pairs (p,q) with p <= a, q <= b, and
/// every element is the join of its maximal rectangles.
struct Coproduct {
  FramePtr left;
  FramePtr right;
  FramePtr frame;
  FrameHom inj_left;   // x -> x⊕1
  FrameHom inj_right;  // y -> 1⊕y
  std::vector<int> generator_index;  // (x,y) -> element index of x⊕y
  // Canonical decomposition of each element as a join of maximal rectangles,
  // as (left element, right element) pairs sorted lexicographically.
  std::vector<std::vector<std::pair<int, int>>> rects;

  int generator(int x, int y) const {
    return generator_index[x * right->size() + y];
  }
};

/// Throws SizeLimitExceeded when |J(a)|*|J(b)| exceeds the ground cap.
Coproduct coproduct(FramePtr a, FramePtr b, int max_ground = 20);

/// The unique hom f⊕g with (f⊕g) ∘ ι = ι ∘ f (resp. g). Requires the
/// coproducts of the dom pair and cod pair.
FrameHom hom_coproduct(const FrameHom& f, const FrameHom& g,
                       const Coproduct& dom, const Coproduct& cod);

}  // namespace biframe

#endif
