#include "orlicz/relations.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "orlicz/errors.hpp"
#include "orlicz/plateau.hpp"

namespace orlicz {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
  std::vector<double> g(n);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = std::exp(a + (b - a) * double(i) / double(n - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

// One sweep of the scaled domination probe v1(t) <= v2(K t). A scale is
// usable only while the probe window keeps at least three quarters of the
// shared range min(dom1, dom2): a window truncated much further by K*t
// hitting the end of v2's stored domain would let "eventually" hide in the
// truncation and produce vacuous verdicts.
struct DomProbe {
  bool usable = false;
  bool holds = false;           // violations die out before the last quartile
  bool tail_violation = false;  // a violation sits inside the last quartile
  double t0 = 0.0;              // no violations at or beyond this grid point
  double cap = 0.0;             // sup of v1(t) - v2(K t) over the grid, >= 0
  std::vector<double> grid;
  std::vector<double> ratio;    // v1(t) / v2(K t)
};

DomProbe scaled_domination(const std::function<double(double)>& v1,
                           const std::function<double(double)>& v2,
                           double dom1, double dom2, double K,
                           const RelateOptions& opt) {
  DomProbe p;
  const double shared = std::min(dom1, dom2);
  const double hi = std::min(dom1, dom2 / K) * (1.0 - 1e-12);
  if (!(hi >= shared * 0.75) || !(hi > opt.t_min * 8.0)) return p;
  p.usable = true;
  p.grid = log_spaced(opt.t_min, hi, opt.points);
  p.ratio.resize(p.grid.size());
  const std::size_t n = p.grid.size();
  const std::size_t cut = n - n / 4;
  std::size_t last_bad = kNone;
  double cap = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = p.grid[i];
    const double a = v1(t);
    const double b = v2(K * t);
    cap = std::max(cap, a - b);
    p.ratio[i] = a / std::max(b, 1e-300);
    if (a > b + opt.rel_tol * std::max(1.0, std::abs(a))) last_bad = i;
  }
  p.holds = (last_bad == kNone) || (last_bad < cut);
  p.tail_violation = (last_bad != kNone) && (last_bad >= cut);
  p.t0 = (last_bad == kNone) ? p.grid.front() : p.grid[std::min(last_bad + 1, n - 1)];
  p.cap = std::max(0.0, cap);
  return p;
}

RelationEvidence preceq_c_once(const FunctionView& f1, const FunctionView& f2,
                               const RelateOptions& opt) {
  RelationEvidence ev;
  ev.relation = f1.label + " preceq_c " + f2.label;
  DomProbe last;
  double last_K = 0.0;
  bool any = false;
  for (int pw = 0; pw <= opt.max_scale_pow; ++pw) {
    const double K = std::ldexp(1.0, pw);
    DomProbe p = scaled_domination(f1.value, f2.value, f1.domain_max, f2.domain_max, K, opt);
    if (!p.usable) break;  // windows only shrink as K grows
    any = true;
    if (p.holds) {
      ev.verdict = Verdict::Holds;
      ev.witnesses["K"] = K;
      ev.witnesses["C"] = p.cap;
      ev.witnesses["t0"] = p.t0;
      // Exhibit the outside-constant form v1 <= 2 v2(K t) on a grid tail.
      std::size_t start = p.grid.size();
      while (start > 0 && p.ratio[start - 1] <= 2.0 * (1.0 + opt.rel_tol)) --start;
      if (start < p.grid.size()) {
        ev.witnesses["K1"] = 2.0;
        ev.witnesses["t0_outer"] = p.grid[start];
      }
      return ev;
    }
    last = std::move(p);
    last_K = K;
  }
  if (!any) {
    ev.verdict = Verdict::Inconclusive;
    ev.note = "stored domains leave no usable probe window";
    return ev;
  }
  const PlateauResult pl = plateau(last.ratio);
  if (pl.enough_points && !pl.bounded && last.tail_violation) {
    ev.verdict = Verdict::Fails;
    ev.counterexample = last.grid[pl.argmax_tail];
    ev.witnesses["K"] = last_K;
    ev.witnesses["tail_ratio"] = pl.tail_sup;
  } else {
    ev.verdict = Verdict::Inconclusive;
    ev.note = "violations persist without decisive growth at the largest usable scale";
  }
  return ev;
}

// Right-derivative form f1(t) <= k f2(k t), k > 1: must agree with the
// value-level verdict; on disagreement the combined verdict is withheld.
void density_crosscheck(const FunctionView& f1, const FunctionView& f2,
                        const RelateOptions& opt, RelationEvidence& ev) {
  if (!f1.density || !f2.density) return;
  Verdict dv = Verdict::Inconclusive;
  double k_hold = 0.0;
  DomProbe last;
  bool any = false;
  for (int pw = 1; pw <= opt.max_scale_pow; ++pw) {
    const double k = std::ldexp(1.0, pw);
    const std::function<double(double)> scaled = [k, &f2](double t) {
      return k * f2.density(t);
    };
    DomProbe p = scaled_domination(f1.density, scaled, f1.domain_max, f2.domain_max, k, opt);
    if (!p.usable) break;
    any = true;
    if (p.holds) {
      dv = Verdict::Holds;
      k_hold = k;
      break;
    }
    last = std::move(p);
  }
  if (dv != Verdict::Holds && any) {
    const PlateauResult pl = plateau(last.ratio);
    if (pl.enough_points && !pl.bounded && last.tail_violation) dv = Verdict::Fails;
  }
  if (dv == Verdict::Holds) ev.witnesses["k_density"] = k_hold;
  if (dv != Verdict::Inconclusive && ev.verdict != Verdict::Inconclusive &&
      dv != ev.verdict) {
    ev.verdict = Verdict::Inconclusive;
    ev.note = "function-level and density-level probes disagree";
  }
}

// Shared grid for the unscaled relations: ratio v2/v1 on points where v1 > 0.
struct RatioTrace {
  std::vector<double> ts;
  std::vector<double> rs;
};

RatioTrace unscaled_ratio(const FunctionView& f1, const FunctionView& f2,
                          const RelateOptions& opt) {
  RatioTrace tr;
  const double hi = std::min(f1.domain_max, f2.domain_max) * (1.0 - 1e-12);
  if (!(hi > opt.t_min * 8.0)) return tr;
  for (double t : log_spaced(opt.t_min, hi, opt.points)) {
    const double a = f1.value(t);
    if (!(a > 0.0)) continue;
    tr.ts.push_back(t);
    tr.rs.push_back(f2.value(t) / a);
  }
  return tr;
}

RelationEvidence preceq_once(const FunctionView& f1, const FunctionView& f2,
                             const RelateOptions& opt) {
  RelationEvidence ev;
  ev.relation = f1.label + " preceq " + f2.label;
  const RatioTrace tr = unscaled_ratio(f1, f2, opt);
  if (tr.rs.size() < 16) {
    ev.verdict = Verdict::Inconclusive;
    ev.note = "lhs vanishes on most of the probe window";
    return ev;
  }
  const PlateauResult pl = plateau(tr.rs);
  if (!pl.enough_points) {
    ev.verdict = Verdict::Inconclusive;
    ev.note = "probe grid too short";
  } else if (pl.bounded) {
    ev.verdict = Verdict::Holds;
    ev.witnesses["K"] = 1.1 * std::max(1.0, pl.sup);
    ev.witnesses["t0"] = tr.ts.front();
  } else {
    ev.verdict = Verdict::Fails;
    ev.counterexample = tr.ts[pl.argmax_tail];
    ev.witnesses["tail_ratio"] = pl.tail_sup;
  }
  return ev;
}

RelationEvidence little_o_once(const FunctionView& f1, const FunctionView& f2,
                               const RelateOptions& opt) {
  RelationEvidence ev;
  ev.relation = f1.label + " ess_smaller_rhs (" + f2.label + " = o(" + f1.label + "))";
  // Quartiles are taken over the sub-grid where both functions are positive:
  // the rhs of a completed function vanishes identically below its first
  // breakpoint, and those structural zeros say nothing about decay.
  RatioTrace tr = unscaled_ratio(f1, f2, opt);
  {
    std::size_t w = 0;
    for (std::size_t i = 0; i < tr.rs.size(); ++i)
      if (tr.rs[i] > 0.0) {
        tr.ts[w] = tr.ts[i];
        tr.rs[w] = tr.rs[i];
        ++w;
      }
    tr.ts.resize(w);
    tr.rs.resize(w);
  }
  if (tr.rs.size() < 16) {
    ev.verdict = Verdict::Inconclusive;
    ev.note = "one side vanishes on most of the probe window";
    return ev;
  }
  const std::size_t n = tr.rs.size();
  double m[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i)
    m[std::min<std::size_t>(4 * i / n, 3)] = std::max(m[std::min<std::size_t>(4 * i / n, 3)], tr.rs[i]);
  ev.witnesses["head_max"] = m[0];
  ev.witnesses["tail_max"] = m[3];
  const double slack = 1.0 + opt.rel_tol;
  if (m[3] <= m[2] * slack && m[2] <= m[1] * slack && m[3] <= 0.5 * m[0]) {
    ev.verdict = Verdict::Holds;
  } else if (m[3] >= 0.75 * m[0]) {
    ev.verdict = Verdict::Fails;
    std::size_t worst = n - 1;
    for (std::size_t i = 3 * n / 4; i < n; ++i)
      if (tr.rs[i] >= tr.rs[worst]) worst = i;
    ev.counterexample = tr.ts[worst];
  } else {
    ev.verdict = Verdict::Inconclusive;
    ev.note = "ratio decays too slowly to call at this horizon";
  }
  return ev;
}

RelationEvidence ess_stronger_once(const FunctionView& f1, const FunctionView& f2,
                                   const RelateOptions& opt) {
  RelationEvidence ev;
  ev.relation = f1.label + " ess_stronger " + f2.label;
  bool any = false;
  double t0 = 0.0;
  double k_min = 1.0;
  for (int pw = 0; pw >= opt.min_scale_pow; --pw) {
    const double K = std::ldexp(1.0, pw);
    DomProbe p = scaled_domination(f1.value, f2.value, f1.domain_max, f2.domain_max, K, opt);
    if (!p.usable) continue;
    any = true;
    if (p.holds) {
      t0 = std::max(t0, p.t0);
      k_min = K;
      continue;
    }
    const PlateauResult pl = plateau(p.ratio);
    if (pl.enough_points && !pl.bounded && p.tail_violation) {
      ev.verdict = Verdict::Fails;
      ev.counterexample = p.grid[pl.argmax_tail];
      ev.witnesses["K"] = K;
      ev.witnesses["tail_ratio"] = pl.tail_sup;
    } else {
      ev.verdict = Verdict::Inconclusive;
      ev.note = "no eventual domination at the smallest probed scale";
      ev.witnesses["K"] = K;
    }
    return ev;
  }
  if (!any) {
    ev.verdict = Verdict::Inconclusive;
    ev.note = "stored domains leave no usable probe window";
    return ev;
  }
  ev.verdict = Verdict::Holds;
  ev.witnesses["K_min"] = k_min;
  ev.witnesses["t0"] = t0;
  return ev;
}

RelationEvidence combine_sym(std::string relation, RelationEvidence fwd,
                             RelationEvidence rev) {
  RelationEvidence ev;
  ev.relation = std::move(relation);
  if (fwd.verdict == Verdict::Holds && rev.verdict == Verdict::Holds) {
    ev.verdict = Verdict::Holds;
  } else if (fwd.verdict == Verdict::Fails || rev.verdict == Verdict::Fails) {
    ev.verdict = Verdict::Fails;
    ev.counterexample = fwd.verdict == Verdict::Fails ? fwd.counterexample : rev.counterexample;
  } else {
    ev.verdict = Verdict::Inconclusive;
  }
  for (const auto& [k, v] : fwd.witnesses) ev.witnesses["fwd_" + k] = v;
  for (const auto& [k, v] : rev.witnesses) ev.witnesses["rev_" + k] = v;
  if (!fwd.note.empty()) ev.note = "fwd: " + fwd.note;
  if (!rev.note.empty()) ev.note += (ev.note.empty() ? "" : "; ") + ("rev: " + rev.note);
  return ev;
}

std::vector<int> scale_grid(int max_scale) {
  std::vector<int> ks{1};
  while (ks.back() * 2 <= max_scale) ks.push_back(ks.back() * 2);
  return ks;
}

}  // namespace

FunctionView view(const NFunction& f) {
  FunctionView v;
  v.value = [p = &f](double t) { return p->value(t); };
  v.density = [p = &f](double t) { return p->density_at(t); };
  v.domain_max = f.domain_max();
  v.label = f.label();
  return v;
}

FunctionView view(const PiecewiseConvex& q, std::string label) {
  FunctionView v;
  v.value = [p = &q](double t) { return p->value_at(t); };
  v.density = [p = &q](double t) { return p->slope_at(t); };
  v.domain_max = q.domain_max();
  v.label = std::move(label);
  return v;
}

const char* to_string(FnRelation rel) {
  switch (rel) {
    case FnRelation::PreceqC: return "preceq_c";
    case FnRelation::SimC: return "sim_c";
    case FnRelation::Preceq: return "preceq";
    case FnRelation::Sim: return "sim";
    case FnRelation::EssStronger: return "ess_stronger";
    case FnRelation::LittleO: return "little_o";
  }
  return "?";
}

RelationEvidence relate_nfunctions(const FunctionView& f1, const FunctionView& f2,
                                   FnRelation rel, const RelateOptions& opt) {
  switch (rel) {
    case FnRelation::PreceqC: {
      RelationEvidence ev = preceq_c_once(f1, f2, opt);
      density_crosscheck(f1, f2, opt, ev);
      return ev;
    }
    case FnRelation::SimC:
      return combine_sym(f1.label + " sim_c " + f2.label,
                         relate_nfunctions(f1, f2, FnRelation::PreceqC, opt),
                         relate_nfunctions(f2, f1, FnRelation::PreceqC, opt));
    case FnRelation::Preceq:
      return preceq_once(f1, f2, opt);
    case FnRelation::Sim:
      return combine_sym(f1.label + " sim " + f2.label,
                         preceq_once(f1, f2, opt), preceq_once(f2, f1, opt));
    case FnRelation::EssStronger:
      return ess_stronger_once(f1, f2, opt);
    case FnRelation::LittleO:
      return little_o_once(f1, f2, opt);
  }
  throw InvalidParameter("relate_nfunctions: unknown relation");
}

RelationEvidence quotient_criterion(const WeightSequence& m, const WeightSequence& l,
                                    int max_scale) {
  RelationEvidence ev;
  ev.relation = m.label() + " preceq_c " + l.label() + " [quotient]";
  const std::size_t J = std::min(m.horizon(), l.horizon());
  const std::size_t cut = J - J / 4;  // violations at j > cut sit in the tail
  std::vector<double> resid;
  int last_scale = 1;
  for (int k : scale_grid(max_scale)) {
    resid.clear();
    resid.reserve(J);
    std::size_t last_bad = 0;
    for (std::size_t j = 1; j <= J; ++j) {
      const std::size_t i = (j + std::size_t(k) - 1) / std::size_t(k);
      const double r = l.log_mu(i) - double(k) * m.log_mu(j);
      resid.push_back(r);
      if (r > 0.0) last_bad = j;
    }
    if (last_bad <= cut) {
      ev.verdict = Verdict::Holds;
      ev.witnesses["k"] = double(k);
      ev.witnesses["j0"] = double(last_bad + 1);
      return ev;
    }
    last_scale = k;
  }
  const PlateauResult pl = plateau(resid);
  if (pl.enough_points && !pl.bounded && pl.tail_sup > 0.0) {
    ev.verdict = Verdict::Fails;
    ev.counterexample = double(pl.argmax_tail + 1);
    ev.witnesses["k"] = double(last_scale);
    ev.witnesses["tail_margin"] = pl.tail_sup;
  } else {
    ev.verdict = Verdict::Inconclusive;
    ev.note = "quotient residual undecided at this horizon";
  }
  return ev;
}

RelationEvidence counting_criterion(const WeightSequence& m, const WeightSequence& l,
                                    int max_scale) {
  RelationEvidence ev;
  ev.relation = m.label() + " preceq_c " + l.label() + " [counting]";
  const double X1 = m.log_valid_bound();
  const double X2 = l.log_valid_bound();
  const double shared = std::min(X1, X2);
  const std::size_t n = 256;
  const std::size_t cut = n - n / 4;
  if (!(shared > 0.0)) {
    ev.verdict = Verdict::Inconclusive;
    ev.note = "degenerate validity bounds";
    return ev;
  }
  std::vector<double> ratio, xs;
  int last_scale = 0;
  bool tail_violation = false;
  for (int k : scale_grid(max_scale)) {
    if (X2 / double(k) < shared * 0.75) break;  // truncated window
    const double X = std::min(X1, X2 / double(k)) * (1.0 - 1e-12);
    ratio.clear();
    xs.clear();
    std::size_t last_bad = kNone;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = X * double(i + 1) / double(n);
      const double cm = double(m.count_le_log(x));
      const double cl = double(l.count_le_log(double(k) * x));
      xs.push_back(x);
      ratio.push_back(cm / std::max(1.0, double(k) * cl));
      if (cm > double(k) * cl) last_bad = i;
    }
    if (last_bad == kNone || last_bad < cut) {
      ev.verdict = Verdict::Holds;
      ev.witnesses["k"] = double(k);
      ev.witnesses["A"] = double(k);
      ev.witnesses["t0_log"] = (last_bad == kNone) ? xs.front() : xs[std::min(last_bad + 1, n - 1)];
      return ev;
    }
    last_scale = k;
    tail_violation = last_bad >= cut;
  }
  if (last_scale == 0) {
    ev.verdict = Verdict::Inconclusive;
    ev.note = "no usable probe window";
    return ev;
  }
  const PlateauResult pl = plateau(ratio);
  if (pl.enough_points && !pl.bounded && tail_violation) {
    ev.verdict = Verdict::Fails;
    ev.counterexample = xs[pl.argmax_tail];
    ev.note = "counterexample stored as log t";
    ev.witnesses["k"] = double(last_scale);
    ev.witnesses["tail_ratio"] = pl.tail_sup;
  } else {
    ev.verdict = Verdict::Inconclusive;
    ev.note = "counting residual undecided at this horizon";
  }
  return ev;
}

RelationEvidence density_criterion(const WeightSequence& m, const WeightSequence& l,
                                   int max_scale) {
  RelationEvidence ev;
  ev.relation = m.label() + " preceq_c " + l.label() + " [density]";
  const double X1 = m.log_valid_bound();
  const double X2 = l.log_valid_bound();
  const double shared = std::min(X1, X2);
  if (!(shared > 0.0)) {
    ev.verdict = Verdict::Inconclusive;
    ev.note = "degenerate validity bounds";
    return ev;
  }
  // The lhs step density is constant between its own breakpoints while the
  // rhs is nondecreasing, so the breakpoints of m inside the shared window
  // decide the pointwise inequality there exactly, however few they are.
  std::vector<double> breaks;
  for (std::size_t j = 1; j <= m.horizon(); ++j) {
    const double x = m.log_mu(j);
    if (!(x < shared * (1.0 - 1e-12))) break;
    if (breaks.empty() || x > breaks.back()) breaks.push_back(x);
  }
  if (breaks.empty()) {
    ev.verdict = Verdict::Holds;
    ev.witnesses["k"] = 2.0;
    ev.note = "lhs density vanishes on the shared window";
    return ev;
  }
  const std::size_t n = breaks.size();
  const double value_cut = shared * 0.75;  // violations past this are tail
  // The right-derivative form requires k > 1, but not an integer; the
  // near-1 entry keeps a usable scale when the stored domains are tight.
  std::vector<double> ks{1.25};
  for (int k = 2; k <= max_scale; k *= 2) ks.push_back(double(k));
  std::vector<double> ratio;
  double last_scale = 0.0;
  bool tail_violation = false;
  double worst_x = 0.0;
  for (double k : ks) {
    if (X2 / k < shared * 0.75) break;
    ratio.clear();
    double last_bad = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = breaks[i];
      const double cm = double(m.count_le_log(x));
      const double cl = double(l.count_le_log(std::min(k * x, X2 * (1.0 - 1e-12))));
      ratio.push_back(cm / std::max(1.0, k * cl));
      if (k * x < X2 && cm > k * cl) last_bad = x;
    }
    if (last_bad < value_cut) {
      ev.verdict = Verdict::Holds;
      ev.witnesses["k"] = k;
      ev.witnesses["t1_log"] = (last_bad < 0.0) ? breaks.front() : last_bad;
      return ev;
    }
    last_scale = k;
    tail_violation = true;
    worst_x = last_bad;
  }
  if (last_scale == 0.0) {
    ev.verdict = Verdict::Inconclusive;
    ev.note = "no usable probe window";
    return ev;
  }
  const PlateauResult pl = plateau(ratio);
  if (pl.enough_points && !pl.bounded && tail_violation) {
    ev.verdict = Verdict::Fails;
    ev.counterexample = worst_x;
    ev.note = "counterexample stored as log t";
    ev.witnesses["k"] = last_scale;
    ev.witnesses["tail_ratio"] = pl.tail_sup;
  } else {
    ev.verdict = Verdict::Inconclusive;
    ev.note = "density residual undecided at this horizon";
  }
  return ev;
}

namespace {

// Residual r_j must stay bounded above for some factor c; Holds fits the
// additive constant, Fails requires decisive growth at the largest factor.
RelationEvidence factor_bounded(const WeightSequence& m, const WeightSequence& l,
                                int max_factor, bool root_form, const char* tag) {
  RelationEvidence ev;
  ev.relation = root_form ? m.label() + " preceq " + l.label() + std::string(tag)
                          : m.label() + " preceq_c " + l.label() + std::string(tag);
  const std::size_t J = std::min(m.horizon(), l.horizon());
  std::vector<double> resid;
  int last_factor = 0;
  for (int c = 1; c <= max_factor; ++c) {
    const std::size_t jmax = J / std::size_t(c);
    if (jmax < 8) break;
    resid.clear();
    resid.reserve(jmax);
    for (std::size_t j = 1; j <= jmax; ++j) {
      const double r = root_form
                           ? m.log_M(j) - l.log_M(std::size_t(c) * j) / double(c)
                           : l.log_M(j) - m.log_M(std::size_t(c) * j);
      resid.push_back(r);
    }
    const PlateauResult pl = plateau(resid);
    if (pl.enough_points && pl.bounded) {
      ev.verdict = Verdict::Holds;
      ev.witnesses["c"] = double(c);
      ev.witnesses["log_A"] = 1.1 * std::max(0.0, pl.sup);
      return ev;
    }
    last_factor = c;
  }
  if (last_factor == 0) {
    ev.verdict = Verdict::Inconclusive;
    ev.note = "horizon too short for the factor grid";
    return ev;
  }
  const PlateauResult pl = plateau(resid);
  if (pl.enough_points && !pl.bounded) {
    ev.verdict = Verdict::Fails;
    ev.counterexample = double(pl.argmax_tail + 1);
    ev.witnesses["c"] = double(last_factor);
    ev.witnesses["tail_residual"] = pl.tail_sup;
  } else {
    ev.verdict = Verdict::Inconclusive;
    ev.note = "residual undecided at this horizon";
  }
  return ev;
}

}  // namespace

RelationEvidence seq_criterion_root(const WeightSequence& m, const WeightSequence& l,
                                    int max_factor) {
  return factor_bounded(m, l, max_factor, true, " [root]");
}

RelationEvidence seq_criterion_weak(const WeightSequence& m, const WeightSequence& l,
                                    int max_factor) {
  return factor_bounded(m, l, max_factor, false, " [weak]");
}

CountingRatio counting_ratio(const WeightSequence& m, const WeightSequence& l,
                             double t_lo, double t_hi, std::size_t points,
                             bool characterize) {
  if (!(t_lo > 0.0) || !(t_hi > t_lo))
    throw InvalidParameter("counting_ratio: need 0 < t_lo < t_hi");
  const double x_lo = std::log(t_lo);
  const double x_hi = std::log(t_hi);
  if (!(x_hi < std::min(m.log_valid_bound(), l.log_valid_bound())))
    throw DomainExceeded("counting_ratio: probe range beyond stored validity");
  points = std::max<std::size_t>(points, 32);

  std::vector<double> rs;
  rs.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double x = x_lo + (x_hi - x_lo) * double(i) / double(points - 1);
    const double cl = double(l.count_le_log(x));
    if (!(cl > 0.0)) continue;
    rs.push_back(double(m.count_le_log(x)) / cl);
  }
  CountingRatio out;
  if (rs.size() < 16) {
    out.note = "denominator vanishes on most of the probe range";
    return out;
  }
  const std::size_t tail = rs.size() - rs.size() / 4;
  out.tail_min = rs[tail];
  out.tail_max = rs[tail];
  double sum = 0.0;
  for (std::size_t i = tail; i < rs.size(); ++i) {
    out.tail_min = std::min(out.tail_min, rs[i]);
    out.tail_max = std::max(out.tail_max, rs[i]);
    sum += rs[i];
  }
  out.tail_mean = sum / double(rs.size() - tail);
  const PlateauResult pl = plateau(rs);
  out.finite_limit = pl.enough_points && pl.bounded && out.tail_min > 0.0 &&
                     (out.tail_max - out.tail_min) <= 0.2 * std::max(out.tail_mean, 1e-12);
  if (out.finite_limit) {
    out.limit = out.tail_mean;
  } else if (!pl.bounded) {
    out.note = "ratio still growing at the end of the probe range";
  } else {
    out.note = "ratio did not settle on a positive value";
  }

  if (characterize) {
    if (!m.strictly_increasing_quotients())
      throw NotStrictlyIncreasing("counting_ratio: left quotients contain flat runs");
    if (!l.strictly_increasing_quotients())
      throw NotStrictlyIncreasing("counting_ratio: right quotients contain flat runs");
    out.interleave_checked = true;
    if (out.finite_limit) {
      const double b = out.limit;
      out.c1 = 0.8 * b;
      out.c2 = 1.25 * b;
      const std::size_t J = std::min(m.horizon(), l.horizon());
      for (std::size_t d : {0, 1, 2, 4, 8, 16}) {
        bool ok = true;
        std::size_t checked = 0;
        for (std::size_t j = 8; j <= J; ++j) {
          const std::size_t up = std::size_t(std::ceil(double(j) / out.c1)) + d;
          if (up > l.horizon()) break;
          const double low_idx = std::ceil(double(j) / out.c2) - double(d);
          ++checked;
          if (low_idx >= 1.0 && !(l.log_mu(std::size_t(low_idx)) <= m.log_mu(j))) {
            ok = false;
            break;
          }
          if (!(m.log_mu(j) < l.log_mu(up))) {
            ok = false;
            break;
          }
        }
        if (ok && checked >= 8) {
          out.interleave_ok = true;
          out.shift = d;
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace orlicz
