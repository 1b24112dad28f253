#pragma once

#include "orlicz/piecewise_convex.hpp"
#include "orlicz/weight_sequence.hpp"

namespace orlicz {

// Counting function Sigma_M(t) = #{ j >= 1 : mu_j <= t }, right-continuous.
// Exact for 0 <= t < valid_bound(); DomainExceeded past that.
long counting(const WeightSequence& m, double t);

// Associated function
//   omega_M(t) = sup_j log(t^j / M_j) = sum over mu_j <= t of (log t - log mu_j),
// evaluated by the exact finite sum k log t - log M_k with k = Sigma_M(t).
// Vanishes on [0, mu_1].
double omega(const WeightSequence& m, double t);

// phi(x) = omega_M(e^{|x|}) evaluated natively in the log domain (the
// counting weights compare against |x| directly, no exp/log round trip).
double phi(const WeightSequence& m, double x);

// phi as an explicit piecewise-linear convex structure: breakpoints at the
// distinct values of log mu_j, integer slopes equal to the counting
// function, domain up to log valid_bound().
PiecewiseConvex phi_structure(const WeightSequence& m);

// omega-tilde(s) = integral_0^s omega_M(u)/u du = integral_0^{log s} phi,
// exact per-segment quadratics.
double omega_tilde(const WeightSequence& m, double s);

// sup_t (j log t - omega_M(t)), attained at t = mu_j; reproduces log M_j.
// j <= horizon - 1.
double recover_log_M(const WeightSequence& m, std::size_t j);

// phi is always a Young function; it is a strong Young function exactly
// when mu_1 = 1, and in that case its density is >= 1 at 0, so it never
// satisfies the full N-function axioms on the nose (the principal-part
// completion handles the origin instead).
enum class YoungClass { NFunctionCoincident, StrongYoung, YoungOnly };

YoungClass classify_young(const WeightSequence& m);

}  // namespace orlicz
