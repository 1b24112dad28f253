#include "orlicz/plateau.hpp"

#include <algorithm>
#include <cmath>

namespace orlicz {

PlateauResult plateau(const std::vector<double>& r, double rel_tol) {
  PlateauResult out;
  const std::size_t n = r.size();
  if (n < 8) return out;
  out.enough_points = true;

  const std::size_t cut = n - n / 4;  // tail = last quarter
  double early = -HUGE_VAL, tail = -HUGE_VAL;
  std::size_t tail_arg = cut;
  for (std::size_t i = 0; i < cut; ++i) early = std::max(early, r[i]);
  for (std::size_t i = cut; i < n; ++i) {
    if (r[i] > tail) {
      tail = r[i];
      tail_arg = i;
    }
  }
  out.sup = std::max(early, tail);
  out.tail_sup = tail;
  out.argmax_tail = tail_arg;
  out.bounded = tail <= early + rel_tol * std::max(1.0, std::fabs(early));
  return out;
}

}  // namespace orlicz
