#include "orlicz/piecewise_convex.hpp"

#include <algorithm>
#include <cmath>

namespace orlicz {

PiecewiseConvex::PiecewiseConvex(std::vector<double> breaks,
                                 std::vector<double> values,
                                 std::vector<double> slopes,
                                 double domain_max)
    : breaks_(std::move(breaks)),
      values_(std::move(values)),
      slopes_(std::move(slopes)),
      domain_max_(domain_max) {
  if (breaks_.empty() || breaks_.size() != values_.size() ||
      breaks_.size() != slopes_.size())
    throw InvalidParameter("piecewise function needs matching arrays");
  for (std::size_t i = 1; i < breaks_.size(); ++i) {
    if (!(breaks_[i] > breaks_[i - 1]))
      throw InvalidParameter("breakpoints must be strictly ascending");
    if (slopes_[i] < slopes_[i - 1])
      throw NotConvex("slopes decrease across breakpoints");
  }
  if (domain_max_ < breaks_.back())
    throw InvalidParameter("domain ends before the last breakpoint");
  cumint_.resize(breaks_.size());
  cumint_[0] = 0.0;
  for (std::size_t i = 1; i < breaks_.size(); ++i) {
    const double h = breaks_[i] - breaks_[i - 1];
    cumint_[i] = cumint_[i - 1] + 0.5 * (values_[i - 1] + values_[i]) * h;
  }
}

std::size_t PiecewiseConvex::segment_of(double x) const {
  // Largest i with breaks_[i] <= x.
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  return static_cast<std::size_t>(it - breaks_.begin()) - 1;
}

double PiecewiseConvex::value_at(double x) const {
  if (x < breaks_.front() || x > domain_max_)
    throw DomainExceeded("piecewise evaluation outside stored domain");
  const std::size_t i = segment_of(x);
  return values_[i] + slopes_[i] * (x - breaks_[i]);
}

double PiecewiseConvex::slope_at(double x) const {
  if (x < breaks_.front() || x > domain_max_)
    throw DomainExceeded("piecewise slope outside stored domain");
  return slopes_[segment_of(x)];
}

double PiecewiseConvex::integral_to(double x) const {
  if (x < breaks_.front() || x > domain_max_)
    throw DomainExceeded("piecewise integral outside stored domain");
  const std::size_t i = segment_of(x);
  const double h = x - breaks_[i];
  return cumint_[i] + values_[i] * h + 0.5 * slopes_[i] * h * h;
}

double PiecewiseConvex::conjugate_at(double s) const {
  s = std::fabs(s);
  if (s > slopes_.back())
    throw SlopeExceeded("conjugate needs slopes beyond the stored domain");
  // First breakpoint whose outgoing slope reaches s; the difference
  // s x - Q(x) increases while the slope stays below s and decreases after,
  // so that breakpoint is a global maximizer.
  auto it = std::lower_bound(slopes_.begin(), slopes_.end(), s);
  const std::size_t i = static_cast<std::size_t>(it - slopes_.begin());
  // values_[i] = Q at the breakpoint; expand Q piecewise to keep the
  // cancellation in s*x - Q(x) benign: Q(b_i) is stored, not recomputed.
  return s * breaks_[i] - values_[i];
}

}  // namespace orlicz
