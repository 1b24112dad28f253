#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "orlicz/n_function.hpp"
#include "orlicz/piecewise_convex.hpp"
#include "orlicz/weight_sequence.hpp"

namespace orlicz {

// Evaluation handle on a convex candidate G with G(0) = 0, used to read a
// weight sequence back out of a function.  `derivative` (the right
// derivative) may be empty; it enables the exact bisection route below.
// `domain_max` may be +infinity for closed-form expressions.
struct AbstractNFunction {
  std::function<double(double)> value;
  std::function<double(double)> derivative;  // optional
  double domain_max = 0.0;
  std::string label;
};

AbstractNFunction from_nfunction(const NFunction& f);
AbstractNFunction from_structure(const PiecewiseConvex& q, std::string label);

// How to solve sup_s (j s - G(s)) per index j.
//   GoldenSection    derivative-free concave search, 1e-10 argument width
//   DensityBisection smallest s with G'(s) >= j (exact on step derivatives)
//   Auto             bisection when a derivative is present, else golden
enum class ExtractRoute { Auto, GoldenSection, DensityBisection };

// log M_j = sup_s (j s - G(s)), j = 1..horizon.  The sup over a convex G is
// attained at a unique point (or a flat run, resolved exactly by the
// bisection route); when the maximizer is pushed against the domain end the
// sup is not determined by the stored data and DomainExceeded is thrown.
// Cheap axiom spot-checks (G(0) = 0, monotone, midpoint convex on samples)
// reject non-candidates with NotNFunction.  Tiny downward noise in the
// resulting quotients is snapped up to keep log-convexity exact.
WeightSequence associated_sequence(const AbstractNFunction& g, std::size_t horizon,
                                   ExtractRoute route = ExtractRoute::Auto);

// Maximizing abscissae of the same suprema, reported as t_j = exp(s_j) with
// the fixed anchor t_0 = 1.  The points are nondecreasing and interleave
// with the extracted quotients: log t_j <= lq_{j+1} <= log t_{j+1}.
struct MaximizerTrace {
  std::vector<double> t_points;
  std::string label;
};

MaximizerTrace maximizer_points(const AbstractNFunction& g, std::size_t horizon,
                                ExtractRoute route = ExtractRoute::Auto);

// #{ j >= 1 : t_j <= t }; exact while t is below the last materialized
// point (DomainExceeded beyond).
long sigma_g(const MaximizerTrace& tr, double t);

// phi built from the maximizer points: sum_j (|x| - log t_j)^+, the
// piecewise-linear function whose slope counts maximizers below e^x.
double phi_g(const MaximizerTrace& tr, double x);

// Round-trip evidence that the extracted sequence reproduces G up to the
// usual additive-constant-plus-doubling equivalence.  F is the principal
// completion of the extracted sequence's phi; on a grid over
// (0, min(domain_F, domain_G)/2] the suite fits
//   A = sup (F - G)^+        (chain1:  F <= G + A)
//   B = sup (G + A - 2F)^+   (chain2:  G + A <= 2F + B)
// and re-fits both constants on a half-step-shifted grid: chain1/chain2
// hold when the shifted refit reproduces them (a drifting refit means the
// base grid under-sampled the gap).  The suite also verifies the exact
// pointwise laws: the doubling chain 2F(x) <= F(2x), the count sandwich
// sigma_g <= Sigma_M <= sigma_g + 1, and phi_M <= G.
struct SandwichSuite {
  WeightSequence sequence;
  double A = 0.0;
  double B = 0.0;
  bool chain1 = false;
  bool chain2 = false;
  bool chain3 = false;
  bool count_ok = false;
  bool phi_bounded = false;
  std::size_t grid_points = 0;
};

SandwichSuite sandwich_suite(const AbstractNFunction& g, std::size_t horizon,
                             ExtractRoute route = ExtractRoute::Auto);

}  // namespace orlicz
