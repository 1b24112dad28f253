#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orlicz/errors.hpp"

namespace orlicz {

// Convex piecewise-linear function on [breaks.front(), domain_max], given
// by breakpoints, the value at each breakpoint, and the slope to the right
// of each breakpoint (right-continuous slope).  Slopes must be strictly
// increasing across breakpoints; evaluation, integration and the Legendre
// transform are all exact segment arithmetic, never grid interpolation.
class PiecewiseConvex {
 public:
  PiecewiseConvex(std::vector<double> breaks, std::vector<double> values,
                  std::vector<double> slopes, double domain_max);

  const std::vector<double>& breaks() const { return breaks_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& slopes() const { return slopes_; }
  double domain_max() const { return domain_max_; }
  double domain_min() const { return breaks_.front(); }
  double max_slope() const { return slopes_.back(); }

  // Q(x) for domain_min <= x <= domain_max (DomainExceeded otherwise).
  double value_at(double x) const;
  // Right-continuous slope at x.
  double slope_at(double x) const;
  // Integral of Q from domain_min to x, exact per-segment quadratures.
  double integral_to(double x) const;
  // sup_{x in domain} (s x - Q(x)), attained where the slope crosses s.
  // SlopeExceeded when s exceeds the largest materialized slope.
  double conjugate_at(double s) const;

 private:
  std::size_t segment_of(double x) const;

  std::vector<double> breaks_, values_, slopes_, cumint_;
  double domain_max_;
};

}  // namespace orlicz
