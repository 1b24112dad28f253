#pragma once

#include <string>

#include "orlicz/n_function.hpp"
#include "orlicz/weight_sequence.hpp"

namespace orlicz {

// A completed function together with its Young conjugate, both materialized
// as step-density functions so either side can be evaluated or re-inverted
// exactly.  `construction_route` records which construction produced the
// conjugate ("right_inverse" here; callers may tag alternatives).
struct ConjugatePair {
  NFunction primal;
  NFunction conjugate;
  std::string construction_route = "right_inverse";
};

// Generalized right inverse g(s) = sup{ t : f(t) <= s } of a step density.
// The inverse of a step density is again a step density: plateaus of f turn
// into jumps of g and vice versa.  Throws InvalidDensity when f vanishes
// identically (nothing to invert).
StepDensity right_inverse_density(const StepDensity& f);

// Conjugate N-function built by integrating the right inverse of the
// density of F.  Exact: both integrals are sums of rectangles/triangles.
ConjugatePair complementary(const NFunction& f);

// gamma(s) = sup over j of (M_j / M_{j+1} style) quotient threshold:
// the largest quotient log mu_j that stays <= the slope budget floor(s)+1.
// Closed form log mu_{floor(s)+1}; InvalidParameter for s < 0,
// IndexExceeded once floor(s)+1 passes the stored horizon.
double gamma(const WeightSequence& m, double s);

// phi^c(x): the convex conjugate-of-conjugate completion evaluated by
// rectangle sums of the quotient staircase, phi^c(x) = log M_n +
// (x - n) log mu_{n+1} with n = floor(x).  IndexExceeded when |x| needs a
// quotient beyond the horizon.
double phi_c(const WeightSequence& m, double x);

// Legendre transform of the piecewise-linear phi at slope s:
// phi*(s) = sup_x (s x - phi(x)) = log M_k - (k - |s|) log mu_k with
// k = ceil(|s|).  SlopeExceeded when |s| exceeds the largest stored slope.
double legendre_phi_star(const WeightSequence& m, double s);

}  // namespace orlicz
