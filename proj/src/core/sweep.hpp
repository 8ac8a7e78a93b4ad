#pragma once

#include "core/report.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hompois {

// Evaluates `residual(tuple)` on every tuple of the box ranges[0] x ranges[1]
// x ..., in lexicographic order, recording each result under `identity`.
template <class F>
void sweep(CheckReport& report, const std::string& identity, const std::vector<std::size_t>& ranges, F&& residual) {
  for (auto r : ranges) {
    if (r == 0) return;
  }
  std::vector<std::size_t> t(ranges.size(), 0);
  while (true) {
    report.record(identity, t, residual(t));
    std::size_t pos = t.size();
    while (pos > 0) {
      --pos;
      if (++t[pos] < ranges[pos]) break;
      t[pos] = 0;
      if (pos == 0) return;
    }
    if (t.empty()) return;
  }
}

}  // namespace hompois
