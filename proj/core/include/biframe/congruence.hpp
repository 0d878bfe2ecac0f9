#ifndef BIFRAME_CONGRUENCE_HPP
#define BIFRAME_CONGRUENCE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "biframe/frame.hpp"

namespace biframe {

/// A frame congruence stored as a partition of the carrier. Blocks are
/// numbered in order of their minimal element, so equal congruences compare
/// equal as block vectors.
class Congruence {
 public:
  static Congruence diagonal(FramePtr l);
  static Congruence everything(FramePtr l);
  /// Builds from an arbitrary block assignment and verifies the congruence
  /// law a~b, c~d => a∧c ~ b∧d and a∨c ~ b∨d.
  static Congruence from_blocks(FramePtr l, std::vector<int> block_of);
  /// Partition without the law check (internal fixpoints are closed already).
  static Congruence unchecked(FramePtr l, std::vector<int> block_of);

  const FramePtr& frame() const { return frame_; }
  int block_of(int x) const { return block_[x]; }
  bool same(int x, int y) const { return block_[x] == block_[y]; }
  int num_blocks() const { return num_blocks_; }
  /// Minimal-index representative of the block containing x.
  int rep(int x) const { return reps_[block_[x]]; }
  int block_rep(int b) const { return reps_[b]; }
  const std::vector<int>& blocks() const { return block_; }

  /// Relation containment: every pair related here is related in o.
  bool refines(const Congruence& o) const;
  bool operator==(const Congruence& o) const { return block_ == o.block_; }
  bool operator<(const Congruence& o) const { return block_ < o.block_; }

 private:
  Congruence(FramePtr l, std::vector<int> block_of);
  void canonicalize();

  FramePtr frame_;
  std::vector<int> block_;
  std::vector<int> reps_;
  int num_blocks_ = 0;
};

/// Least congruence containing the given pairs (worklist closure: merging
/// a,b forces merging a∧c,b∧c and a∨c,b∨c for every c).
Congruence congruence_closure(FramePtr l, const std::vector<std::pair<int, int>>& pairs);

/// Closure starting from an existing congruence plus extra pairs.
Congruence congruence_closure_from(const Congruence& base,
                                   const std::vector<std::pair<int, int>>& pairs);

/// Quotient frame on blocks with its onto projection. Block order:
/// <a> <= <b> iff a ∨ b ~ b.
std::pair<FramePtr, FrameHom> quotient(const Congruence& t);

/// Unique h~ with h~ ∘ p = h; requires h constant on blocks of t.
FrameHom factor_through(const FrameHom& h, const Congruence& t);

Congruence kernel(const FrameHom& f);

/// All congruences of l, ordered canonically. BFS from the diagonal over
/// single-pair merges. Throws SizeLimitExceeded when |l| > cap.
std::vector<Congruence> all_congruences(FramePtr l, int size_cap = 24);

/// c(a): x ~ y iff x ∨ a = y ∨ a.
Congruence closed_congruence(FramePtr l, int a);
/// o(a): x ~ y iff x ∧ a = y ∧ a.
Congruence open_congruence(FramePtr l, int a);

/// Meet in C(L): intersection of partitions.
Congruence congruence_meet(const Congruence& a, const Congruence& b);
/// Join in C(L): closure of the union.
Congruence congruence_join(const Congruence& a, const Congruence& b);

}  // namespace biframe

#endif
