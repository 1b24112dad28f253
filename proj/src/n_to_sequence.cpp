#include "orlicz/n_to_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orlicz/associated.hpp"
#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

constexpr double kArgCap = 1e15;  // search never leaves [0, min(domain, cap)]

double upper_end(const AbstractNFunction& g) {
  double hi = g.domain_max;
  if (!(hi > 0.0)) throw InvalidParameter("associated_sequence: empty domain");
  if (!std::isfinite(hi) || hi > kArgCap) hi = kArgCap;
  return hi * (1.0 - 1e-12);
}

// -inf-safe evaluation of h(s) = j s - G(s); overflowing G just pushes the
// search back toward finite territory.
double h_val(const AbstractNFunction& g, double j, double s) {
  const double v = g.value(s);
  if (std::isnan(v)) throw NotNFunction("associated_sequence: G returned NaN at s = " + std::to_string(s));
  return j * s - v;
}

void spot_check(const AbstractNFunction& g, double hi) {
  const double tol = 1e-9;
  const double v0 = g.value(0.0);
  if (!(std::fabs(v0) <= tol)) throw NotNFunction("associated_sequence: G(0) != 0");
  const double window = std::min(hi, 8.0);
  double prev = v0;
  for (int i = 1; i <= 8; ++i) {
    const double x = window * static_cast<double>(i) / 8.0;
    const double v = g.value(x);
    if (std::isnan(v)) throw NotNFunction("associated_sequence: G returned NaN");
    if (v < prev - tol * (1.0 + std::fabs(prev)))
      throw NotNFunction("associated_sequence: G decreases on its domain");
    prev = v;
  }
  for (int i = 1; i + 1 <= 8; ++i) {
    const double a = window * static_cast<double>(i - 1) / 8.0;
    const double b = window * static_cast<double>(i + 1) / 8.0;
    const double mid = 0.5 * (a + b);
    const double lhs = g.value(mid);
    const double rhs = 0.5 * (g.value(a) + g.value(b));
    if (lhs > rhs + 1e-9 * (1.0 + std::fabs(rhs)))
      throw NotNFunction("associated_sequence: G fails midpoint convexity");
  }
}

// Concave maximization of h(s) = j s - G(s) on [0, hi] by golden section;
// ties keep the left subinterval so flat stretches resolve to their left
// edge.  Returns the final interval midpoint.
double golden_argmax(const AbstractNFunction& g, double j, double hi) {
  const double invphi = 0.6180339887498949;
  double a = 0.0, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = h_val(g, j, x1);
  double f2 = h_val(g, j, x2);
  for (int it = 0; it < 400 && b - a > 1e-10; ++it) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = h_val(g, j, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = h_val(g, j, x2);
    }
  }
  return 0.5 * (a + b);
}

// Smallest s in [0, hi] with G'(s) >= j (right derivative nondecreasing).
double bisect_slope(const AbstractNFunction& g, double j, double hi) {
  if (!(g.derivative(hi) >= j))
    throw DomainExceeded("associated_sequence: slope " + std::to_string(j) +
                         " is never reached inside the domain of '" + g.label + "'");
  double lo = 0.0, up = hi;
  if (g.derivative(0.0) >= j) return 0.0;
  for (int it = 0; it < 200 && up - lo > 1e-14 * (1.0 + up); ++it) {
    const double mid = 0.5 * (lo + up);
    (g.derivative(mid) >= j ? up : lo) = mid;
  }
  return up;
}

struct Extraction {
  std::vector<double> log_M;  // index 0..horizon
  std::vector<double> s;      // maximizers, index 0..horizon (s[0] = 0)
};

Extraction extract(const AbstractNFunction& g, std::size_t horizon, ExtractRoute route) {
  if (horizon < 2) throw InvalidParameter("associated_sequence: horizon below 2");
  const bool has_d = static_cast<bool>(g.derivative);
  if (route == ExtractRoute::DensityBisection && !has_d)
    throw InvalidParameter("associated_sequence: bisection route needs a derivative");
  const bool bisect = route == ExtractRoute::DensityBisection ||
                      (route == ExtractRoute::Auto && has_d);
  const double hi = upper_end(g);
  spot_check(g, hi);

  Extraction ex;
  ex.log_M.assign(horizon + 1, 0.0);
  ex.s.assign(horizon + 1, 0.0);
  for (std::size_t j = 1; j <= horizon; ++j) {
    const double dj = static_cast<double>(j);
    const double sj = bisect ? bisect_slope(g, dj, hi) : golden_argmax(g, dj, hi);
    if (sj > hi * (1.0 - 1e-9) && !bisect)
      throw DomainExceeded("associated_sequence: the supremum for j = " + std::to_string(j) +
                           " escapes the domain of '" + g.label + "'");
    ex.s[j] = sj;
    ex.log_M[j] = h_val(g, dj, sj);
  }
  return ex;
}

WeightSequence seq_of(const Extraction& ex, const std::string& label) {
  const std::size_t J = ex.log_M.size() - 1;
  std::vector<double> lq(J);
  for (std::size_t j = 1; j <= J; ++j) lq[j - 1] = ex.log_M[j] - ex.log_M[j - 1];
  if (lq[0] < 0.0) {
    if (lq[0] < -1e-9) throw NotNFunction("associated_sequence: negative log M_1");
    lq[0] = 0.0;
  }
  // The suprema are convex in j, so any downward step is solver noise.
  for (std::size_t i = 1; i < J; ++i)
    if (lq[i] < lq[i - 1]) {
      if (lq[i - 1] - lq[i] > 1e-9 * (1.0 + std::fabs(lq[i - 1])))
        throw NotNFunction("associated_sequence: quotients drop beyond solver noise at j = " +
                           std::to_string(i + 1));
      lq[i] = lq[i - 1];
    }
  return WeightSequence(std::move(lq), "M^{" + label + "}");
}

}  // namespace

AbstractNFunction from_nfunction(const NFunction& f) {
  AbstractNFunction g;
  g.value = [f](double x) { return f.value(x); };
  g.derivative = [f](double x) { return f.density_at(x); };
  g.domain_max = f.domain_max();
  g.label = f.label();
  return g;
}

AbstractNFunction from_structure(const PiecewiseConvex& q, std::string label) {
  AbstractNFunction g;
  g.value = [q](double x) { return q.value_at(x); };
  g.derivative = [q](double x) { return q.slope_at(x); };
  g.domain_max = q.domain_max();
  g.label = std::move(label);
  return g;
}

WeightSequence associated_sequence(const AbstractNFunction& g, std::size_t horizon,
                                   ExtractRoute route) {
  return seq_of(extract(g, horizon, route), g.label);
}

MaximizerTrace maximizer_points(const AbstractNFunction& g, std::size_t horizon,
                                ExtractRoute route) {
  const Extraction ex = extract(g, horizon, route);
  MaximizerTrace tr;
  tr.label = g.label;
  tr.t_points.reserve(horizon + 1);
  for (double s : ex.s) tr.t_points.push_back(std::exp(s));
  return tr;
}

long sigma_g(const MaximizerTrace& tr, double t) {
  if (!std::isfinite(t) || t < 0.0) throw InvalidParameter("sigma_g: t must be finite and nonnegative");
  if (tr.t_points.size() < 2) throw InvalidParameter("sigma_g: empty trace");
  if (!(t < tr.t_points.back()))
    throw DomainExceeded("sigma_g: t at or beyond the last materialized maximizer");
  const auto it = std::upper_bound(tr.t_points.begin() + 1, tr.t_points.end(), t);
  return static_cast<long>(it - (tr.t_points.begin() + 1));
}

double phi_g(const MaximizerTrace& tr, double x) {
  if (!std::isfinite(x)) throw InvalidParameter("phi_g: argument must be finite");
  if (tr.t_points.size() < 2) throw InvalidParameter("phi_g: empty trace");
  const double ax = std::fabs(x);
  if (!(ax <= std::log(tr.t_points.back())))
    throw DomainExceeded("phi_g: argument beyond the last materialized maximizer");
  double acc = 0.0;
  for (std::size_t j = 1; j < tr.t_points.size(); ++j) {
    const double s = std::log(tr.t_points[j]);
    if (ax > s) acc += ax - s;
  }
  return acc;
}

SandwichSuite sandwich_suite(const AbstractNFunction& g, std::size_t horizon,
                             ExtractRoute route) {
  const Extraction ex = extract(g, horizon, route);
  WeightSequence seq = seq_of(ex, g.label);
  const PrincipalPart pp = principalize(phi_structure(seq), seq.label());
  const NFunction& F = pp.F;

  const double X = 0.5 * std::min(F.domain_max(), g.domain_max);
  const std::size_t n = 512;
  auto fit = [&](double offset, double& A, double& B) {
    A = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      const double x = X * (static_cast<double>(i) - offset) / static_cast<double>(n);
      if (!(x > 0.0)) continue;
      A = std::max(A, F.value(x) - g.value(x));
    }
    B = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      const double x = X * (static_cast<double>(i) - offset) / static_cast<double>(n);
      if (!(x > 0.0)) continue;
      B = std::max(B, g.value(x) + A - 2.0 * F.value(x));
    }
  };

  SandwichSuite suite{std::move(seq), 0.0, 0.0, true, true, true, true, true, n};
  fit(0.0, suite.A, suite.B);
  // The half-step-shifted grid interleaves the base grid, so its refit must
  // reproduce the fitted constants up to one cell of drift; anything larger
  // means the base grid under-sampled the gap between F and G.  The exact
  // pointwise laws (doubling, phi <= G) keep the tight tolerance.
  double a_shift = 0.0, b_shift = 0.0;
  fit(0.5, a_shift, b_shift);
  suite.chain1 = a_shift <= suite.A * 1.05 + 1e-6;
  suite.chain2 = b_shift <= suite.B * 1.05 + 1e-6;
  const double tol = 1e-9;
  for (std::size_t i = 1; i <= n; ++i) {
    const double x = X * (static_cast<double>(i) - 0.5) / static_cast<double>(n);
    const double fx = F.value(x);
    const double gx = g.value(x);
    if (2.0 * fx > F.value(2.0 * x) + tol * (1.0 + fx)) suite.chain3 = false;
    if (phi(suite.sequence, x) > gx + tol * (1.0 + std::fabs(gx))) suite.phi_bounded = false;
  }

  // Count sandwich on the t-axis, kept below both validity bounds.
  MaximizerTrace tr;
  tr.label = g.label;
  for (double s : ex.s) tr.t_points.push_back(std::exp(s));
  const double t_hi = std::min(std::exp(suite.sequence.log_valid_bound()),
                               tr.t_points.back()) *
                      (1.0 - 1e-9);
  for (std::size_t i = 1; i <= n; ++i) {
    const double t = 1.0 + (t_hi - 1.0) * static_cast<double>(i) / static_cast<double>(n);
    if (!(t > 1.0) || !(t < t_hi)) continue;
    const long cg = sigma_g(tr, t);
    const long cm = counting(suite.sequence, t);
    if (!(cg <= cm && cm <= cg + 1)) suite.count_ok = false;
  }
  return suite;
}

}  // namespace orlicz
