#include "orlicz/dual_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "orlicz/associated.hpp"
#include "orlicz/conjugation.hpp"
#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

// #{ i >= 1 : i - 1 < mu } for mu >= 0, with exp/log noise around exact
// integers snapped away first.  For integer mu the strict inequality gives
// exactly mu; otherwise ceil(mu).
long snapped_ceil(double mu) {
  const double r = std::round(mu);
  if (std::fabs(mu - r) <= 1e-9 * std::max(1.0, std::fabs(r))) mu = r;
  return static_cast<long>(std::ceil(mu));
}

}  // namespace

DualSequence dual(const WeightSequence& m) {
  if (m.horizon() < 8)
    throw InvalidParameter("dual: base horizon below 8 leaves no usable dual prefix");
  const double T = m.valid_bound();  // may be +inf for huge quotients
  std::vector<double> lq;
  lq.reserve(m.horizon());
  for (std::size_t i = 1; i <= m.horizon(); ++i) {
    if (!(static_cast<double>(i) <= T)) break;  // Sigma_M(i-1) undetermined
    const long c = i == 1 ? 0 : counting(m, static_cast<double>(i - 1));
    lq.push_back(std::log(static_cast<double>(std::max(1L, c))));
  }
  if (lq.size() < 8)
    throw InvalidParameter("dual: fewer than 8 entries are determined by '" + m.label() + "'");

  // First integer abscissa with a positive base count: one past the first
  // quotient, snapped so integer mu_1 does not straddle the ceiling.
  const long j_star = snapped_ceil(std::exp(m.log_mu(1)) + 1.0) ;
  const long d = std::max(1L, counting(m, static_cast<double>(j_star - 1)));

  WeightSequence dseq(std::move(lq), m.label() + "^dual");
  return DualSequence{m, std::move(dseq), d};
}

long sigma_dual(const DualSequence& ds, double t) {
  if (!std::isfinite(t) || t < 0.0) throw InvalidParameter("sigma_dual: t must be finite and nonnegative");
  if (t < 1.0) return 0;
  if (!(std::log(t) < ds.dual.log_valid_bound()))
    throw DomainExceeded("sigma_dual: t at or beyond the dual validity bound");
  const long n = static_cast<long>(std::floor(t));
  if (n < ds.d_threshold) return ds.dual.count_le_log(std::log(t));
  if (n + 1 > static_cast<long>(ds.base.horizon()))
    throw IndexExceeded("sigma_dual: closed form needs a quotient beyond the base horizon");
  return snapped_ceil(std::exp(ds.base.log_mu(static_cast<std::size_t>(n + 1))));
}

double gamma_tilde(const DualSequence& ds, double t) {
  if (!std::isfinite(t) || t < 1.0)
    throw InvalidParameter("gamma_tilde: t must be finite and >= 1");
  const long n = static_cast<long>(std::floor(t));
  if (n + 1 > static_cast<long>(ds.base.horizon()))
    throw IndexExceeded("gamma_tilde: t needs a quotient beyond the base horizon");
  const double lm = ds.base.log_mu(static_cast<std::size_t>(n + 1));
  // Past exp overflow the ceiling correction log(ceil(mu)/mu) < 1/mu is far
  // below one ulp of lm, so the quotient itself is the exact answer.
  if (lm > 700.0) return lm;
  return std::log(static_cast<double>(snapped_ceil(std::exp(lm))));
}

double F_gamma_tilde(const DualSequence& ds, double x) {
  if (!std::isfinite(x)) throw InvalidParameter("F_gamma_tilde: argument must be finite");
  const double ax = std::fabs(x);
  if (ax > static_cast<double>(ds.base.horizon()))
    throw IndexExceeded("F_gamma_tilde: argument passes the base horizon");
  const long n = static_cast<long>(std::floor(ax));
  const double frac = ax - static_cast<double>(n);
  double acc = 0.0;
  for (long i = 1; i < n; ++i) acc += gamma_tilde(ds, static_cast<double>(i));
  if (frac > 0.0 && n >= 1) acc += frac * gamma_tilde(ds, static_cast<double>(n));
  return acc;
}

SandwichReport sandwich_check(const DualSequence& ds, std::size_t points) {
  SandwichReport rep;
  const double lo = static_cast<double>(std::max(1L, ds.d_threshold));
  double hi = static_cast<double>(ds.base.horizon() - 1);
  const double lvb = ds.base.log_valid_bound();
  if (lvb < std::log(hi)) hi = std::exp(lvb);
  hi *= 1.0 - 1e-12;
  if (!(hi > lo) || points < 8) return rep;

  const double step = std::log(hi / lo) / static_cast<double>(points - 1);
  rep.lower_ok = true;
  rep.upper_ok = true;
  rep.min_gap = std::numeric_limits<double>::infinity();
  rep.max_gap = -rep.min_gap;
  const double upper_slack = std::log(2.0) + 1e-9;
  for (std::size_t i = 0; i < points; ++i) {
    const double t = lo * std::exp(step * static_cast<double>(i));
    const double g = gamma(ds.base, t);
    const double gt = gamma_tilde(ds, t);
    const double gap = gt - g;
    rep.min_gap = std::min(rep.min_gap, gap);
    rep.max_gap = std::max(rep.max_gap, gap);
    if (gap < -1e-12 * (1.0 + std::fabs(g))) rep.lower_ok = false;
    if (gap > upper_slack) rep.upper_ok = false;
    if (4 * i >= 3 * points && g > 0.0)
      rep.tail_ratio_dev = std::max(rep.tail_ratio_dev, std::fabs(gt / g - 1.0));
  }
  rep.points = points;
  return rep;
}

}  // namespace orlicz
