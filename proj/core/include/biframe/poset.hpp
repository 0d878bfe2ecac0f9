#ifndef BIFRAME_POSET_HPP
#define BIFRAME_POSET_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace biframe {

/// Finite partially ordered set. Elements are indices 0..n-1 with unique
/// string labels; the order relation is stored as one bitmask per element
/// (bit j of below(i) set iff j <= i), which caps the size at 64 elements.
class FinPoset {
 public:
  /// Builds and validates a poset from a list of leq index pairs.
  /// Reflexive pairs may be omitted and the transitive closure is taken
  /// before validation, so listing cover pairs is enough.
  FinPoset(std::vector<std::string> labels,
           const std::vector<std::pair<int, int>>& leq_pairs);

  /// Builds from precomputed down-masks. Validates the partial order laws.
  FinPoset(std::vector<std::string> labels, std::vector<std::uint64_t> below);

  int size() const { return static_cast<int>(labels_.size()); }
  bool leq(int x, int y) const { return (below_[y] >> x) & 1u; }
  std::uint64_t below_mask(int x) const { return below_[x]; }
  std::uint64_t above_mask(int x) const { return above_[x]; }
  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool covers(int x, int y) const;  // y covers x: x < y with nothing between
  int height(int x) const;          // length of a longest chain below x

  /// Restriction to a subset of elements (indices into this poset, sorted).
  FinPoset induced(const std::vector<int>& subset) const;

  bool operator==(const FinPoset& o) const {
    return labels_ == o.labels_ && below_ == o.below_;
  }

 private:
  void validate() const;
  void fill_above();

  std::vector<std::string> labels_;
  std::vector<std::uint64_t> below_;
  std::vector<std::uint64_t> above_;
};

}  // namespace biframe

#endif
