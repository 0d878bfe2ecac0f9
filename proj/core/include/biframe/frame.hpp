#ifndef BIFRAME_FRAME_HPP
#define BIFRAME_FRAME_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "biframe/lattice.hpp"
#include "biframe/poset.hpp"

namespace biframe {

/// A validated finite frame: a bounded distributive lattice. In the finite
/// case arbitrary joins reduce to finite ones, so no extra completeness
/// structure is carried.
class FiniteFrame {
 public:
  /// Validates distributivity on top of the lattice laws.
  /// Throws NotDistributive with a witness triple.
  static std::shared_ptr<const FiniteFrame> validate(FinPoset p);

  const FinPoset& poset() const { return poset_; }
  const LatticeTables& tables() const { return tab_; }

  int size() const { return poset_.size(); }
  bool leq(int x, int y) const { return poset_.leq(x, y); }
  int meet(int x, int y) const { return tab_.m(x, y); }
  int join(int x, int y) const { return tab_.j(x, y); }
  int bottom() const { return tab_.bottom; }
  int top() const { return tab_.top; }
  const std::string& label(int x) const { return poset_.label(x); }

  /// a -> b, the largest x with a ∧ x <= b.
  int heyting(int a, int b) const;
  /// a* = a -> 0.
  int pseudocomplement(int a) const { return heyting(a, bottom()); }
  int double_pseudocomplement(int a) const {
    return pseudocomplement(pseudocomplement(a));
  }

 private:
  FiniteFrame(FinPoset p, LatticeTables t) : poset_(std::move(p)), tab_(std::move(t)) {}

  FinPoset poset_;
  LatticeTables tab_;
};

using FramePtr = std::shared_ptr<const FiniteFrame>;

/// Element map between finite frames preserving 0, 1, binary meet and join.
struct FrameHom {
  FramePtr dom;
  FramePtr cod;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
};

/// Throws NotAHom with the violated operation and a witness pair.
FrameHom validate_hom(FramePtr dom, FramePtr cod, std::vector<int> map);

FrameHom identity_hom(FramePtr l);
bool is_onto(const FrameHom& f);
bool is_injective(const FrameHom& f);
/// f(a) = 0 implies a = 0.
bool is_dense_frame_hom(const FrameHom& f);
bool is_iso(const FrameHom& f);
/// Inverse of a bijective hom.
FrameHom inverse_iso(const FrameHom& f);
FrameHom compose(const FrameHom& g, const FrameHom& f);
bool same_hom(const FrameHom& f, const FrameHom& g);

/// f_*(y) = max { x : f(x) <= y }, as a map on element indices.
std::vector<int> right_adjoint(const FrameHom& f);

/// Smallest subset containing s plus bounds, closed under binary meet/join.
std::vector<int> subframe_generated(const FiniteFrame& l, std::vector<int> s);

/// All frame homomorphisms dom -> cod, deterministically ordered.
/// Search is over monotone images of join-irreducibles; every candidate is
/// validated in full. Throws SizeLimitExceeded past the candidate cap.
std::vector<FrameHom> enumerate_homs(FramePtr dom, FramePtr cod,
                                     std::size_t candidate_cap = 4'000'000);

}  // namespace biframe

#endif
