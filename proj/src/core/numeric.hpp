#pragma once

#include <algorithm>
#include <span>
#include <vector>

namespace sekwl {

/// Sums a multiset of doubles in ascending order. The result depends only on
/// the multiset, never on the order the terms were produced in, which keeps
/// every reduction bit-identical under node relabeling.
inline double multiset_sum(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end());
  double s = 0.0;
  for (double t : terms) s += t;
  return s;
}

inline double multiset_sum(std::span<const double> terms) {
  std::vector<double> copy(terms.begin(), terms.end());
  return multiset_sum(copy);
}

}  // namespace sekwl
