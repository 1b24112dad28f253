#include "orlicz/associated.hpp"

#include <cmath>

namespace orlicz {

namespace {

void check_t(const WeightSequence& m, double t) {
  if (!(t >= 0) || !std::isfinite(t))
    throw InvalidParameter("argument must be finite and >= 0");
  if (std::log(t) >= m.log_valid_bound())
    throw DomainExceeded("argument " + std::to_string(t) +
                         " at or beyond the validity bound of '" + m.label() +
                         "'");
}

// k x - log M_k with k = #{ log mu_j <= x }, computed as
// log M_k - (k - j) x only where cancellation matters (see recover below).
double phi_at_log(const WeightSequence& m, double x) {
  const long k = m.count_le_log(x);
  return static_cast<double>(k) * x - m.log_M(static_cast<std::size_t>(k));
}

}  // namespace

long counting(const WeightSequence& m, double t) {
  check_t(m, t);
  if (t == 0.0) return 0;
  return m.count_le_log(std::log(t));
}

double omega(const WeightSequence& m, double t) {
  check_t(m, t);
  if (t == 0.0) return 0.0;
  const double x = std::log(t);
  if (x <= m.log_mu(1)) return 0.0;
  return phi_at_log(m, x);
}

double phi(const WeightSequence& m, double x) {
  if (!std::isfinite(x)) throw InvalidParameter("argument must be finite");
  x = std::fabs(x);
  if (x >= m.log_valid_bound())
    throw DomainExceeded("phi argument at or beyond the validity bound of '" +
                         m.label() + "'");
  if (x <= m.log_mu(1)) return 0.0;
  return phi_at_log(m, x);
}

PiecewiseConvex phi_structure(const WeightSequence& m) {
  const double bound = m.log_valid_bound();
  std::vector<double> breaks{0.0}, values{0.0}, slopes;
  slopes.push_back(static_cast<double>(m.count_le_log(0.0)));
  for (std::size_t j = 1; j <= m.horizon(); ++j) {
    const double b = m.log_mu(j);
    if (b <= breaks.back() || b > bound) continue;
    breaks.push_back(b);
    values.push_back(phi_at_log(m, b));
    slopes.push_back(static_cast<double>(m.count_le_log(b)));
  }
  return PiecewiseConvex(std::move(breaks), std::move(values),
                         std::move(slopes), bound);
}

double omega_tilde(const WeightSequence& m, double s) {
  check_t(m, s);
  if (s <= 1.0) return 0.0;
  const double X = std::log(s);
  // Accumulate the integral of phi over [0, X] segment by segment; phi is
  // linear between consecutive distinct quotient values.
  double acc = 0.0;
  double x_prev = 0.0, v_prev = 0.0;
  for (std::size_t j = 1; j <= m.horizon(); ++j) {
    const double b = m.log_mu(j);
    if (b <= x_prev) continue;
    if (b >= X) break;
    const double v = phi_at_log(m, b);
    acc += 0.5 * (v_prev + v) * (b - x_prev);
    x_prev = b;
    v_prev = v;
  }
  const double vX = phi_at_log(m, X);
  acc += 0.5 * (v_prev + vX) * (X - x_prev);
  return acc;
}

double recover_log_M(const WeightSequence& m, std::size_t j) {
  if (j + 1 > m.horizon())
    throw IndexExceeded("recovery needs j <= horizon - 1");
  if (j == 0) return 0.0;
  // Evaluate j x - phi(x) at the maximizing breakpoint x = log mu_j.  With
  // k = Sigma_M(mu_j) >= j this is log M_k - (k - j) x; the subtraction is
  // exact across flat quotient runs because the stored quotients there are
  // bitwise equal to x.
  const double x = m.log_mu(j);
  const long k = m.count_le_log(x);
  return m.log_M(static_cast<std::size_t>(k)) -
         static_cast<double>(k - static_cast<long>(j)) * x;
}

YoungClass classify_young(const WeightSequence& m) {
  return m.log_mu(1) == 0.0 ? YoungClass::StrongYoung : YoungClass::YoungOnly;
}

}  // namespace orlicz
