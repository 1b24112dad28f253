#pragma once

#include <functional>
#include <string>

#include "orlicz/n_function.hpp"
#include "orlicz/piecewise_convex.hpp"
#include "orlicz/report.hpp"
#include "orlicz/weight_sequence.hpp"

namespace orlicz {

// Evaluation-only handle on a non-decreasing convex function over
// [0, domain_max]. `density` (the right-derivative) may be left empty when
// unavailable; relation probes then skip the density-level cross-check.
struct FunctionView {
  std::function<double(double)> value;
  std::function<double(double)> density;
  double domain_max = 0.0;
  std::string label;
};

FunctionView view(const NFunction& f);
FunctionView view(const PiecewiseConvex& q, std::string label);

// Binary comparison relations between growth functions F1, F2:
//   PreceqC      F1(t) <= F2(K t) for all large t, some K
//   SimC         PreceqC both ways
//   Preceq       F2(t) <= K1 F1(t) for all large t, some K1 (class inclusion)
//   Sim          Preceq both ways
//   EssStronger  for every K > 0: F1(t) <= F2(K t) for all large t
//   LittleO      F2(t) = o(F1(t)) as t grows
enum class FnRelation { PreceqC, SimC, Preceq, Sim, EssStronger, LittleO };

const char* to_string(FnRelation rel);

struct RelateOptions {
  double t_min = 0.0625;   // probe grids start here; small-t behaviour never
                           // decides any of the relations above
  std::size_t points = 96; // log-spaced probe points per scale
  int max_scale_pow = 16;  // scale grid K = 2^0 .. 2^max_scale_pow
  int min_scale_pow = -8;  // EssStronger descends to K = 2^min_scale_pow
  double rel_tol = 1e-9;   // slack relative to the compared magnitudes
};

// Grid evidence for `rel` between f1 and f2. A scale K is usable only while
// K*t stays inside f2's stored domain; Holds requires violations to die out
// before the final quartile of the probe grid, Fails requires them to persist
// there with growing margin, anything else is Inconclusive.
RelationEvidence relate_nfunctions(const FunctionView& f1, const FunctionView& f2,
                                   FnRelation rel, const RelateOptions& opt = {});

// Sequence-level criteria, each a finite-horizon probe of a statement
// equivalent to an N-function relation between the completions of phi.
//
// counting:  Sigma_M(t) <= A Sigma_L(t^k) for large t       (fits A)
// quotient:  lambda_{ceil(j/k)} <= mu_j^k for large j       (no constant)
// density:   Sigma_M(t) <= k Sigma_L(t^k) for large t       (constant tied to k)
// all three probe F_M preceq_c F_L over the scale grid k in {1,2,4,8,16,...}.
RelationEvidence counting_criterion(const WeightSequence& m, const WeightSequence& l,
                                    int max_scale = 16);
RelationEvidence quotient_criterion(const WeightSequence& m, const WeightSequence& l,
                                    int max_scale = 16);
RelationEvidence density_criterion(const WeightSequence& m, const WeightSequence& l,
                                   int max_scale = 16);

// M_j <= A (L_{cj})^{1/c} for all j (probes F_M preceq F_L); witness log_A.
RelationEvidence seq_criterion_root(const WeightSequence& m, const WeightSequence& l,
                                    int max_factor = 16);

// L_j <= A M_{cj} for all j: necessary for F_M preceq_c F_L, and equivalent
// to it when M or L has moderate growth; witness log_A.
RelationEvidence seq_criterion_weak(const WeightSequence& m, const WeightSequence& l,
                                    int max_factor = 16);

struct CountingRatio {
  double tail_min = 0.0;
  double tail_max = 0.0;
  double tail_mean = 0.0;
  bool finite_limit = false;  // tail of Sigma_M/Sigma_L settled on a positive value
  double limit = 0.0;         // meaningful only when finite_limit
  bool interleave_checked = false;
  bool interleave_ok = false; // lambda_{ceil(j/c2)-d} <= mu_j < lambda_{ceil(j/c1)+d}
  double c1 = 0.0, c2 = 0.0;  // bracket around the fitted limit
  std::size_t shift = 0;      // index slack d used by the bracket test
  std::string note;
};

// Tail statistics of Sigma_M(t)/Sigma_L(t) over a log-spaced grid in
// [t_lo, t_hi]. With `characterize` set, both quotient sequences must be
// strictly increasing (else NotStrictlyIncreasing) and the quotient
// interleaving bracket is fitted around the detected limit.
CountingRatio counting_ratio(const WeightSequence& m, const WeightSequence& l,
                             double t_lo, double t_hi, std::size_t points = 400,
                             bool characterize = false);

}  // namespace orlicz
