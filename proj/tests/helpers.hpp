#ifndef TESTS_HELPERS_HPP
#define TESTS_HELPERS_HPP

#include <string>
#include <utility>
#include <vector>

#include "biframe/builders.hpp"
#include "biframe/error.hpp"
#include "biframe/frame.hpp"

namespace th {

inline biframe::FinPoset poset(std::vector<std::string> labels,
                               std::vector<std::pair<int, int>> pairs) {
  return biframe::FinPoset(std::move(labels), pairs);
}

inline int elt(const biframe::FramePtr& f, const std::string& label) {
  for (int x = 0; x < f->size(); ++x)
    if (f->label(x) == label) return x;
  throw std::runtime_error("no element labelled " + label);
}

// Runs f and reports the error kind thrown, if any.
template <class F>
bool throws_kind(biframe::ErrorKind k, F&& f) {
  try {
    f();
  } catch (const biframe::Error& e) {
    return e.kind() == k;
  }
  return false;
}

inline biframe::FinPoset pentagon_poset() {
  // 0 < x < z < 1, y incomparable to both x and z
  return poset({"0", "x", "z", "y", "1"}, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

}  // namespace th

#endif
