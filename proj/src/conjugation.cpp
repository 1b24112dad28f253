#include "orlicz/conjugation.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "orlicz/errors.hpp"

namespace orlicz {

// The right inverse swaps the roles of abscissa and value: a constancy
// interval [b_i, b_{i+1}) of f at value v_i becomes a jump of g at s = v_i,
// and a jump of f at b (value v- to v+) becomes the plateau g = b on
// [v-, v+).  The quadratic ramp of slope rho inverts to a ramp of slope
// 1/rho.  All breakpoint bookkeeping below is that one sentence.
StepDensity right_inverse_density(const StepDensity& f) {
  StepDensity g;
  const std::size_t m = f.breaks.size();

  // Strip leading zero plateaus: f == 0 on [ramp_end, breaks[lead]) extends
  // the vanishing head, so the inverse ramp collapses to zero slope there.
  std::size_t lead = 0;
  while (lead < m && !(f.values[lead] > 0.0)) ++lead;
  const bool has_pos_value = lead < m;
  const bool has_ramp = f.ramp_slope > 0.0 && f.ramp_end > 0.0;
  if (!has_pos_value && !has_ramp) throw InvalidDensity("right_inverse_density: density vanishes identically");

  double rho = f.ramp_slope;
  double head_t = f.ramp_end;  // abscissa where the staircase part starts
  if (lead > 0 || (f.ramp_slope == 0.0 && f.ramp_end > 0.0)) {
    // Zero density up to the first positive value; the ramp is degenerate.
    rho = 0.0;
    head_t = has_pos_value ? f.breaks[lead] : f.ramp_end;
  }

  std::vector<double> gb, gv;
  auto push_cell = [&](double brk, double val) {
    // Equal breakpoints merge; the later value wins (flat runs of f produce
    // coincident jump abscissae in g).
    if (!gb.empty() && brk <= gb.back()) {
      gv.back() = val;
      return;
    }
    gb.push_back(brk);
    gv.push_back(val);
  };

  if (rho > 0.0) {
    // Ramp f(t) = rho t on [0, ramp_end] inverts to g(s) = s / rho up to
    // s = rho * ramp_end, then g jumps/stays per the staircase.
    g.ramp_slope = 1.0 / rho;
    g.ramp_end = rho * f.ramp_end;
    if (has_pos_value) push_cell(g.ramp_end, f.breaks[lead]);
  } else {
    g.ramp_slope = 0.0;
    g.ramp_end = 0.0;
    if (head_t > 0.0) {
      // f vanishes on [0, head_t): the inverse holds the value head_t from
      // s = 0 onward (a density positive at the origin).
      if (has_pos_value) {
        push_cell(0.0, head_t);
      }
    } else if (has_pos_value) {
      // f jumps at 0 straight to values[lead]: the inverse vanishes on
      // [0, values[lead]) instead.
      g.ramp_end = f.values[lead];
      if (lead + 1 < m) push_cell(f.values[lead], f.breaks[lead + 1]);
    }
  }

  // Interior cells: f holds value v_i on [b_i, b_{i+1}), so g jumps to
  // b_{i+1} at s = v_i.
  for (std::size_t i = lead; i + 1 < m; ++i) push_cell(f.values[i], f.breaks[i + 1]);
  // Final plateau: f holds values.back() on [breaks.back(), domain_max].
  if (has_pos_value) push_cell(f.values.back(), f.domain_max);

  if (gb.empty()) {
    // Single-cell density positive at the origin: the inverse is the
    // constant head_t over the whole value range.
    push_cell(has_pos_value ? f.values[lead] : 0.0, f.domain_max);
  }
  g.breaks = std::move(gb);
  g.values = std::move(gv);
  g.domain_max = has_pos_value ? f.values.back() : g.ramp_end;
  if (!(g.domain_max >= g.breaks.back())) g.domain_max = g.breaks.back();
  return g;
}

ConjugatePair complementary(const NFunction& f) {
  const StepDensity inv = right_inverse_density(f.density());
  return ConjugatePair{f, NFunction(inv, f.label() + "^c"), "right_inverse"};
}

double gamma(const WeightSequence& m, double s) {
  if (!(s >= 0.0)) throw InvalidParameter("gamma: s must be nonnegative");
  const double idx = std::floor(s) + 1.0;
  if (idx > double(m.horizon())) throw IndexExceeded("gamma: slope budget passes the stored horizon");
  return m.log_mu(std::size_t(idx));
}

double phi_c(const WeightSequence& m, double x) {
  const double ax = std::fabs(x);
  if (ax > double(m.horizon())) throw IndexExceeded("phi_c: abscissa needs quotients beyond the horizon");
  const std::size_t n = std::size_t(std::floor(ax));
  const double frac = ax - double(n);
  double v = m.log_M(n);
  if (frac > 0.0) v += frac * m.log_mu(n + 1);
  return v;
}

double legendre_phi_star(const WeightSequence& m, double s) {
  const double as = std::fabs(s);
  if (as > double(m.horizon() - 1)) throw SlopeExceeded("legendre_phi_star: slope exceeds the materialized supremum");
  const std::size_t k = std::size_t(std::ceil(as));
  if (k == 0) return 0.0;
  return m.log_M(k) - (double(k) - as) * m.log_mu(k);
}

}  // namespace orlicz
