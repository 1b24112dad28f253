#include "orlicz/n_function.hpp"

#include <algorithm>
#include <cmath>

namespace orlicz {

void StepDensity::validate() const {
  if (breaks.size() != values.size() || breaks.empty())
    throw InvalidDensity("density needs matching break/value arrays");
  if (!(ramp_slope >= 0) || !(ramp_end >= 0))
    throw InvalidDensity("ramp must be non-negative");
  if (breaks.front() != ramp_end)
    throw InvalidDensity("first break must sit at the ramp end");
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    if (!std::isfinite(breaks[i]) || !std::isfinite(values[i]))
      throw InvalidDensity("non-finite density data");
    if (values[i] < 0) throw InvalidDensity("density must be non-negative");
    if (i > 0 && !(breaks[i] > breaks[i - 1]))
      throw InvalidDensity("breaks must be strictly ascending");
    if (i > 0 && values[i] < values[i - 1])
      throw InvalidDensity("density must be non-decreasing");
  }
  // Monotone across the ramp junction, with a little room for the rounding
  // in ramp_slope * ramp_end.
  const double ramp_top = ramp_slope * ramp_end;
  if (values.front() < ramp_top - 1e-12 * std::max(1.0, ramp_top))
    throw InvalidDensity("density drops across the ramp junction");
  if (domain_max < breaks.back())
    throw InvalidDensity("domain ends before the last break");
}

std::vector<std::string> StepDensity::issues() const {
  std::vector<std::string> out;
  if (ramp_end == 0.0 && !values.empty() && values.front() > 0.0 &&
      breaks.front() == 0.0)
    out.push_back("density positive at 0");
  if ((ramp_slope == 0.0 && ramp_end > 0.0))
    out.push_back("density vanishes on an interval right of 0");
  return out;
}

NFunction::NFunction(StepDensity density, std::string label)
    : f_(std::move(density)), label_(std::move(label)) {
  f_.validate();
  cumF_.resize(f_.breaks.size());
  cumF_[0] = 0.5 * f_.ramp_slope * f_.ramp_end * f_.ramp_end;
  for (std::size_t i = 1; i < f_.breaks.size(); ++i)
    cumF_[i] = cumF_[i - 1] + f_.values[i - 1] * (f_.breaks[i] - f_.breaks[i - 1]);
}

double NFunction::value(double t) const {
  if (!std::isfinite(t)) throw InvalidParameter("argument must be finite");
  const double x = std::fabs(t);
  if (x > f_.domain_max)
    throw DomainExceeded("N-function argument beyond stored domain of '" +
                         label_ + "'");
  if (x < f_.ramp_end) return 0.5 * f_.ramp_slope * x * x;
  auto it = std::upper_bound(f_.breaks.begin(), f_.breaks.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - f_.breaks.begin()) - 1;
  return cumF_[i] + f_.values[i] * (x - f_.breaks[i]);
}

double NFunction::density_at(double t) const {
  if (!std::isfinite(t)) throw InvalidParameter("argument must be finite");
  const double x = std::fabs(t);
  if (x > f_.domain_max)
    throw DomainExceeded("density argument beyond stored domain of '" +
                         label_ + "'");
  if (x == 0.0) return 0.0;
  if (x < f_.ramp_end) return f_.ramp_slope * x;
  auto it = std::upper_bound(f_.breaks.begin(), f_.breaks.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - f_.breaks.begin()) - 1;
  return f_.values[i];
}

double NFunction::conjugate_value(double s) const {
  if (!std::isfinite(s)) throw InvalidParameter("argument must be finite");
  s = std::fabs(s);
  const double ramp_top = f_.ramp_slope * f_.ramp_end;
  if (f_.ramp_slope > 0 && s < ramp_top)
    return 0.5 * s * s / f_.ramp_slope;  // maximizer t = s / ramp_slope
  if (s > f_.values.back())
    throw SlopeExceeded("conjugate needs density beyond the stored domain");
  auto it = std::lower_bound(f_.values.begin(), f_.values.end(), s);
  const std::size_t i = static_cast<std::size_t>(it - f_.values.begin());
  return s * f_.breaks[i] - cumF_[i];
}

PrincipalPart principalize(const PiecewiseConvex& Q, const std::string& label) {
  if (Q.domain_min() != 0.0 || Q.values().front() != 0.0)
    throw InvalidParameter("principal part needs Q anchored at Q(0) = 0");
  if (!(Q.max_slope() > 1.0))
    throw SlopeBounded("slope does not exceed 1 within the stored domain");

  const auto& bs = Q.breaks();
  const auto& vs = Q.values();
  const auto& qs = Q.slopes();
  // First breakpoint whose outgoing slope reaches 1.
  std::size_t i0 = 0;
  while (qs[i0] < 1.0) ++i0;

  StepDensity f;
  f.domain_max = Q.domain_max();
  f.breaks.assign(bs.begin() + static_cast<std::ptrdiff_t>(i0), bs.end());
  f.values.assign(qs.begin() + static_cast<std::ptrdiff_t>(i0), qs.end());
  const double t0 = bs[i0];
  if (t0 == 0.0) {
    // Slopes already start at >= 1: the completion is Q itself.
    return PrincipalPart{NFunction(std::move(f), label), t0, 0.0, 0.0};
  }

  f.ramp_end = t0;
  f.ramp_slope = qs[i0] / t0;
  const double rho = f.ramp_slope;
  NFunction F(std::move(f), label);

  // F - Q is the constant shift = F(t0) - Q(t0) from t0 on; below t0 it is
  // the convex difference ramp-integral minus Q, extremal at segment
  // endpoints (max) and at the slope-crossing vertex (min).
  const double shift = F.value(t0) - vs[i0];
  double Dmax = std::max(0.0, shift);
  double Cmax = std::max(0.0, -shift);
  for (std::size_t i = 0; i < i0; ++i) {
    const double a = bs[i];
    const double b = bs[i + 1];
    auto diff = [&](double t) { return 0.5 * rho * t * t - (vs[i] + qs[i] * (t - a)); };
    Dmax = std::max({Dmax, diff(a), diff(b)});
    const double vertex = qs[i] / rho;
    if (vertex > a && vertex < b) Cmax = std::max(Cmax, -diff(vertex));
    Cmax = std::max({Cmax, -diff(a), -diff(b)});
  }
  return PrincipalPart{std::move(F), t0, Cmax, Dmax};
}

}  // namespace orlicz
