#pragma once

#include <cstddef>

#include "orlicz/weight_sequence.hpp"

namespace orlicz {

// Dual of a weight sequence: the quotients of the dual are the counting
// function of the base read at integer abscissae,
//
//     delta_i = max(1, Sigma_M(i - 1)),  i >= 1,
//
// so the dual's counting function recovers the base quotients (up to the
// integer ceiling) and vice versa.  Entries are materialized only while
// i - 1 < valid_bound(base) — beyond that the base data no longer pins
// Sigma_M, and fabricating entries would poison every downstream check —
// and never beyond the base horizon.
struct DualSequence {
  WeightSequence base;
  WeightSequence dual;
  // Smallest integer abscissa from which the closed-form counting formula
  // below applies (the base counting function is positive from here on).
  long d_threshold = 1;
};

// Throws InvalidParameter when fewer than 8 dual entries can be
// materialized honestly.
DualSequence dual(const WeightSequence& m);

// Counting function of the dual.  For n = floor(t) >= d_threshold it
// collapses to a closed form: #{ i : delta_i <= t } = #{ i : i - 1 <
// mu_{n+1} } = ceil(mu_{n+1}) (exact integers snapped first so quotient
// noise from exp/log cannot shift the count).  Must agree with
// counting(dual, t) everywhere both are defined; DomainExceeded past the
// dual validity bound.
long sigma_dual(const DualSequence& ds, double t);

// log Sigma_D(t) evaluated through the closed form in the log domain, so it
// stays finite even where exp(log mu_{n+1}) would overflow (there the
// integer ceiling is below one ulp and log mu_{n+1} is returned directly).
// Defined for 1 <= t, floor(t) + 1 <= base horizon; InvalidParameter /
// IndexExceeded otherwise.
double gamma_tilde(const DualSequence& ds, double t);

// Completion of gamma_tilde by unit-cell rectangles:
//   F(x) = sum_{i=1}^{n-1} gamma_tilde(i) + (|x| - n) gamma_tilde(n),
// n = floor(|x|).  Even in x; IndexExceeded when |x| passes the base
// horizon.
double F_gamma_tilde(const DualSequence& ds, double x);

// Pointwise comparison of gamma_tilde against the quotient envelope
// gamma(t) = log mu_{floor(t)+1} over a log-spaced grid in
// [d_threshold, min(valid_bound, horizon - 1)).  The two differ only by
// the integer ceiling, so gamma <= gamma_tilde <= gamma + log 2 and the
// ratio drifts to 1 as the counts grow.
struct SandwichReport {
  bool lower_ok = false;   // gamma_tilde >= gamma everywhere on the grid
  bool upper_ok = false;   // gamma_tilde <= gamma + log 2 (+ tolerance)
  double min_gap = 0.0;    // min gamma_tilde - gamma
  double max_gap = 0.0;    // max gamma_tilde - gamma
  double tail_ratio_dev = 0.0;  // max |gamma_tilde/gamma - 1|, last quartile
  std::size_t points = 0;
};

SandwichReport sandwich_check(const DualSequence& ds, std::size_t points = 10000);

}  // namespace orlicz
