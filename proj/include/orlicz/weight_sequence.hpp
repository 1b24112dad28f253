#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "orlicz/errors.hpp"
#include "orlicz/report.hpp"

namespace orlicz {

// Normalized log-convex weight sequence M = (M_j), stored in the log
// domain.  The canonical data are the log quotients
//
//     lq[j] = log(M_j / M_{j-1}),  1 <= j <= horizon,   lq[0] = 0,
//
// which must be non-negative at j = 1 (normalization 1 = M_0 <= M_1) and
// non-decreasing (log convexity).  log M_j is materialized once as a prefix
// sum.  Everything downstream (counting function, associated function,
// conjugates, dual sequence) is evaluated exactly from this array.
//
// Queries in the variable t are answered only for t strictly below
// valid_bound() = mu_{J-1}: below that point the materialized quotients
// determine the counting function of the full (infinite) sequence no matter
// how it continues, so answers are exact rather than truncated.
class WeightSequence {
 public:
  // `log_quotients` holds lq[1..J] (no slot for j = 0).  Throws
  // NotNormalized / NotLogConvex when the invariants fail; InvalidParameter
  // on an empty list or non-finite entries.
  WeightSequence(std::vector<double> log_quotients, std::string label);

  std::size_t horizon() const { return horizon_; }
  const std::string& label() const { return label_; }

  // log mu_j, 0 <= j <= horizon (j = 0 gives 0).
  double log_mu(std::size_t j) const;
  double mu(std::size_t j) const;
  // log M_j, 0 <= j <= horizon.
  double log_M(std::size_t j) const;

  // Quotients including the fixed slot lq[0] = 0; size horizon + 1.
  const std::vector<double>& log_quotients() const { return lq_; }
  // Prefix sums log M_0 .. log M_J; size horizon + 1.
  const std::vector<double>& log_prefix() const { return lM_; }

  // Conservative validity bound mu_{J-1} (see class comment).
  double valid_bound() const;
  double log_valid_bound() const;

  // #{ j >= 1 : log mu_j <= x }.  Exact for x < log mu_J; the public
  // counting function additionally enforces the conservative bound.
  long count_le_log(double x) const;

  bool strictly_increasing_quotients() const;

 private:
  std::vector<double> lq_;  // index 0 unused (0.0), 1..J real
  std::vector<double> lM_;  // prefix sums, 0..J
  std::size_t horizon_;
  std::string label_;
};

// Construction recipe for a weight sequence.  `family` is one of
// "gevrey"   params: s > 0           log mu_j = s log j
// "qgevrey"  params: q > 1, n > 1    log mu_j = (j^n - (j-1)^n) log q
// "explicit" log_quotients given verbatim (horizon = list size)
struct SequenceSpec {
  std::string family;
  std::map<std::string, double> params;
  std::size_t horizon = 256;
  std::vector<double> log_quotients;  // "explicit" only
};

struct LcOptions {
  // Divergence evidence demands log(M_J)/J above this floor as a finite
  // proxy for (M_j)^{1/j} -> infinity.
  double growth_floor = 1e-3;
};

struct LcReport {
  bool normalized = false;
  bool log_convex = false;
  bool divergence_evidence = false;
  // 1-based index of the first quotient that breaks monotonicity (0 = none).
  std::size_t first_violation = 0;
  double growth_rate = 0.0;  // log(M_J) / J
  bool ok() const { return normalized && log_convex && divergence_evidence; }
};

// Validates a raw quotient list (lq[1..J]) without constructing anything.
LcReport validate_lc(const std::vector<double>& log_quotients,
                     const LcOptions& opts = {});

// Builds a sequence from a spec and rejects it unless the LC report is
// clean.  Horizons below 8 are refused: the plateau heuristics downstream
// are meaningless on shorter prefixes.
WeightSequence make_sequence(const SequenceSpec& spec,
                             const LcOptions& opts = {});

// (M . L)_j = M_j L_j; quotients add in the log domain.
WeightSequence pointwise_product(const WeightSequence& a,
                                 const WeightSequence& b);

// (M * L)_j = min_k M_k L_{j-k}.  For log-convex factors this equals the
// product of the j smallest quotients of the merged quotient multiset, so
// the result is built by merging the two sorted quotient arrays: exact,
// and it makes counting additivity hold bit-for-bit.
WeightSequence convolve(const WeightSequence& a, const WeightSequence& b);

// M^ell, quotients scaled by ell > 0.
WeightSequence power(const WeightSequence& a, double ell);

// Perturbs flat quotient runs upward by a relative epsilon ramp so the
// result has strictly increasing quotients while staying within a factor
// exp(eps) of the input everywhere (so the two are equivalent in the
// bounded-quotient-ratio sense).  Increments are capped at half the gap to
// the next distinct quotient, so global monotonicity survives.
WeightSequence regularize_strictly_increasing(const WeightSequence& a,
                                              double eps = 0x1p-20);

enum class SeqRelation {
  Preceq,  // sup_j (M_j / L_j)^{1/j} < inf
  Approx,  // Preceq both ways
  Cong,    // 0 < inf mu_j/lambda_j <= sup mu_j/lambda_j < inf
};

// Finite-horizon probe of the relation, using the plateau rule: the last
// quarter of the residuals must not exceed the earlier maximum.  Witness
// key "bound" is the sup of the defining residual.
RelationEvidence relate_sequences(const WeightSequence& a,
                                  const WeightSequence& b, SeqRelation rel);

// Moderate growth: M_{2j} <= A B^j M_j^2 for fitted A, B.  Witness keys
// "A", "B"; counterexample is the index where the residual keeps growing.
ConditionReport has_mg(const WeightSequence& a);

}  // namespace orlicz
