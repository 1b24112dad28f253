#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orlicz/report.hpp"
#include "orlicz/weight_sequence.hpp"

namespace orlicz {

// Growth-condition checkers.  Each runs two independent finite-horizon
// routes — a quotient/prefix-sum criterion on the sequence and a probe of
// the completed function — and reports Holds only when a route is decisive
// and the other does not contradict it.  "Decisive" always includes a
// trend gate on the last quartile of the probe window: a verdict whose
// margin is still drifting toward the boundary at the window edge is
// reported Inconclusive rather than extrapolated.
//
// Verdict conventions (witness keys in parentheses):
//   delta_2       M_j^{2k} <= A B^j M_{kj}            (k, A, B, C)
//   nabla_2       M_{2j}   <= A M_j^{2 ell}           (ell, A, C)
//   delta_square  mu_{j^2} <= mu_j^A                  (A, j0 | A, B)
//   delta_3       integral of phi over [0, 2x] stays below phi(k x)  (k, H)
//   delta_prime   phi(a b) <= k phi(a) phi(b) on a square window     (k)
//   delta_prime_f counting-quotient u -> Sigma(u^t)/Sigma(u) never rises
//
// Index-squared probes only see j <= sqrt(horizon), so delta_square wants
// the largest horizon the caller can afford; a verdict at horizon 256 can
// legitimately differ from the verdict at 1024 (the report says which
// indices it saw).

ConditionReport check_delta2(const WeightSequence& m);
ConditionReport check_nabla2(const WeightSequence& m);
ConditionReport check_delta_square(const WeightSequence& m);
ConditionReport check_delta3(const WeightSequence& m);

// delta_prime has two inequivalent probes, reported side by side: the
// function-level rectangle probe and the strictly stronger density
// monotonicity statement (whose failure does not refute delta_prime).
struct DeltaPrimeReport {
  ConditionReport function_probe;        // condition "delta_prime"
  ConditionReport density_monotonicity;  // condition "delta_prime_f"
};

DeltaPrimeReport check_delta_prime(const WeightSequence& m);

// Cross-checks one sequence's verdict set against the implication chain
//   delta_prime => delta_2,  delta_square => delta_3,  delta_3 => nabla_2.
// Requires the five reports delta_2, nabla_2, delta_square, delta_3,
// delta_prime, all decisive; throws IncompleteReports otherwise (callers
// exclude undecided sequences and count them separately).
struct ImplicationAudit {
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool consistent() const { return violations.empty(); }
};

ImplicationAudit implication_audit(const std::vector<ConditionReport>& reports);

}  // namespace orlicz
