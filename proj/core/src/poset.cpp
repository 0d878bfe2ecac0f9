#include "biframe/poset.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "biframe/error.hpp"

namespace biframe {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotReflexive: return "NotReflexive";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NotAHom: return "NotAHom";
    case ErrorKind::NotConstantOnBlocks: return "NotConstantOnBlocks";
    case ErrorKind::NotSubframe: return "NotSubframe";
    case ErrorKind::NotSubbasis: return "NotSubbasis";
    case ErrorKind::QLNotOnto: return "QLNotOnto";
    case ErrorKind::ComponentNotPreserved: return "ComponentNotPreserved";
    case ErrorKind::SquareDoesNotCommute: return "SquareDoesNotCommute";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::NotSkeletal: return "NotSkeletal";
    case ErrorKind::RouteMismatch: return "RouteMismatch";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "Unknown";
}

FinPoset::FinPoset(std::vector<std::string> labels,
                   const std::vector<std::pair<int, int>>& leq_pairs)
    : labels_(std::move(labels)) {
  const int n = size();
  if (n > 64)
    throw Error(ErrorKind::SizeLimitExceeded, "poset has more than 64 elements");
  below_.assign(n, 0);
  for (int i = 0; i < n; ++i) below_[i] |= std::uint64_t{1} << i;
  for (auto [x, y] : leq_pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw Error(ErrorKind::BadInput, "leq pair index out of range");
    below_[y] |= std::uint64_t{1} << x;
  }
  // transitive closure; cycles then surface as antisymmetry failures
  bool changed = true;
  while (changed) {
    changed = false;
    for (int y = 0; y < n; ++y)
      for (int k = 0; k < n; ++k)
        if (leq(k, y)) {
          const std::uint64_t nb = below_[y] | below_[k];
          if (nb != below_[y]) {
            below_[y] = nb;
            changed = true;
          }
        }
  }
  validate();
  fill_above();
}

FinPoset::FinPoset(std::vector<std::string> labels, std::vector<std::uint64_t> below)
    : labels_(std::move(labels)), below_(std::move(below)) {
  if (size() > 64)
    throw Error(ErrorKind::SizeLimitExceeded, "poset has more than 64 elements");
  validate();
  fill_above();
}

void FinPoset::validate() const {
  const int n = size();
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second)
      throw Error(ErrorKind::DuplicateLabel, "label '" + l + "' repeated");
  for (int i = 0; i < n; ++i)
    if (!leq(i, i))
      throw Error(ErrorKind::NotReflexive, "element '" + labels_[i] + "'");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && leq(x, y) && leq(y, x))
        throw Error(ErrorKind::NotAntisymmetric,
                    "'" + labels_[x] + "' and '" + labels_[y] + "'");
  for (int y = 0; y < n; ++y) {
    // x <= y and y <= z must give x <= z, i.e. below(y) subset of below(z)
    for (int z = 0; z < n; ++z)
      if (leq(y, z) && (below_[y] & ~below_[z]))
        throw Error(ErrorKind::NotTransitive,
                    "via '" + labels_[y] + "' <= '" + labels_[z] + "'");
  }
}

void FinPoset::fill_above() {
  const int n = size();
  above_.assign(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (leq(x, y)) above_[x] |= std::uint64_t{1} << y;
}

bool FinPoset::covers(int x, int y) const {
  if (x == y || !leq(x, y)) return false;
  for (int z = 0; z < size(); ++z)
    if (z != x && z != y && leq(x, z) && leq(z, y)) return false;
  return true;
}

int FinPoset::height(int x) const {
  // DP in order of increasing down-set size (a linear extension).
  const int n = size();
  std::vector<int> order(n), h(n, 0);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(below_[a]) < std::popcount(below_[b]);
  });
  for (int i : order)
    for (int y = 0; y < n; ++y)
      if (y != i && leq(y, i)) h[i] = std::max(h[i], h[y] + 1);
  return h[x];
}

FinPoset FinPoset::induced(const std::vector<int>& subset) const {
  std::vector<std::string> labels;
  labels.reserve(subset.size());
  for (int i : subset) labels.push_back(labels_[i]);
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = 0; b < subset.size(); ++b)
      if (leq(subset[a], subset[b])) pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return FinPoset(std::move(labels), pairs);
}

}  // namespace biframe
