#pragma once

#include <cstddef>
#include <vector>

namespace orlicz {

// Shared stability heuristic for finite-horizon probes.  A residual series
// r_1..r_n counts as "bounded" when the maximum over its last quarter does
// not exceed the maximum over the first three quarters by more than a
// relative tolerance; residuals that are still climbing at the end of the
// window fail the test.
struct PlateauResult {
  bool enough_points = false;  // n >= 8
  bool bounded = false;
  double sup = 0.0;       // max over the whole series
  double tail_sup = 0.0;  // max over the last quarter
  std::size_t argmax_tail = 0;  // 0-based index into the series
};

PlateauResult plateau(const std::vector<double>& r, double rel_tol = 1e-6);

}  // namespace orlicz
