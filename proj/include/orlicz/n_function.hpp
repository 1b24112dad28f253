#pragma once

#include <string>
#include <vector>

#include "orlicz/piecewise_convex.hpp"

namespace orlicz {

// Right-continuous non-decreasing density with an optional linear ramp
// head:
//
//   f(t) = ramp_slope * t   on [0, ramp_end)
//   f(t) = values[i]        on [breaks[i], breaks[i+1])
//
// breaks.front() == ramp_end and the last plateau extends to domain_max.
// A density with ramp_slope > 0 satisfies the N-function density axioms
// exactly; the degenerate completions that arise from quotient sequences
// with mu_1 = 1 (no ramp, positive value at 0) or from right-inverses of
// such densities (zero head) violate them at the origin only, and
// `issues()` reports which axiom is affected instead of refusing to
// represent the function.
struct StepDensity {
  double ramp_slope = 0.0;
  double ramp_end = 0.0;
  std::vector<double> breaks;
  std::vector<double> values;
  double domain_max = 0.0;

  // Structural validation (ordering, monotonicity, finiteness); throws
  // InvalidDensity.  The soft origin axioms are reported by issues().
  void validate() const;
  std::vector<std::string> issues() const;
};

// N-function F(x) = integral_0^{|x|} f with a StepDensity f.  Values,
// densities and the Young conjugate sup_t (s t - F(t)) are all evaluated
// in closed form.
class NFunction {
 public:
  NFunction(StepDensity density, std::string label);

  const StepDensity& density() const { return f_; }
  const std::string& label() const { return label_; }
  double domain_max() const { return f_.domain_max; }

  double value(double t) const;       // F(|t|); DomainExceeded past domain
  double density_at(double t) const;  // f(|t|) with f(0) = 0 by convention
  // Exact Young conjugate sup over the stored domain; SlopeExceeded when s
  // is beyond the largest materialized density value.
  double conjugate_value(double s) const;
  // F at the i-th step breakpoint (cached integral).
  double value_at_break(std::size_t i) const { return cumF_[i]; }

 private:
  StepDensity f_;
  std::vector<double> cumF_;  // F(breaks[i])
  std::string label_;
};

// Principal-part completion of a convex piecewise-linear Q anchored at
// Q(0) = 0 with unbounded-looking slopes: keep Q's slope function from the
// first breakpoint t0 whose slope reaches 1, and replace everything below
// t0 by the linear ramp of slope q(t0)/t0 (continuous at t0).  When the
// very first slope already reaches 1 the completion is Q itself.
// The returned constants bound the completion error:
//   Q(t) - C <= F(t) <= Q(t) + D for every t in the domain.
struct PrincipalPart {
  NFunction F;
  double t0 = 0.0;
  double C = 0.0;
  double D = 0.0;
};

PrincipalPart principalize(const PiecewiseConvex& Q, const std::string& label);

}  // namespace orlicz
