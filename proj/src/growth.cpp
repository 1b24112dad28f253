#include "orlicz/growth.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <vector>

#include "orlicz/associated.hpp"
#include "orlicz/conjugation.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/n_function.hpp"
#include "orlicz/piecewise_convex.hpp"
#include "orlicz/plateau.hpp"

namespace orlicz {

namespace {

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  std::vector<double> xs;
  if (!(hi > lo) || !(lo > 0.0) || n < 2) return xs;
  const double step = std::log(hi / lo) / static_cast<double>(n - 1);
  xs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) xs.push_back(lo * std::exp(step * static_cast<double>(i)));
  return xs;
}

void append_note(std::string& dst, const std::string& extra) {
  if (extra.empty()) return;
  if (!dst.empty()) dst += "; ";
  dst += extra;
}

// The sequence criterion is primary; the function probe may rescue an
// undecided sequence window but a decisive disagreement between the two
// downgrades both to Inconclusive.
ConditionReport combine_routes(ConditionReport seq, const ConditionReport& probe) {
  if (seq.verdict == Verdict::Holds && probe.verdict != Verdict::Fails) {
    if (probe.verdict == Verdict::Holds) {
      for (const auto& [key, val] : probe.witnesses) seq.witnesses.emplace(key, val);
      append_note(seq.note, "function probe agrees");
    } else {
      append_note(seq.note, probe.note);
    }
    return seq;
  }
  if (seq.verdict == Verdict::Fails && probe.verdict != Verdict::Holds) {
    if (probe.verdict == Verdict::Fails) append_note(seq.note, "function probe agrees");
    return seq;
  }
  if (seq.verdict == Verdict::Inconclusive && probe.verdict != Verdict::Inconclusive) {
    ConditionReport out = probe;
    append_note(out.note, "sequence residuals undecided at this horizon");
    return out;
  }
  ConditionReport out;
  out.condition = seq.condition;
  out.verdict = Verdict::Inconclusive;
  if (seq.verdict != Verdict::Inconclusive)
    out.note = "sequence and function routes disagree at this horizon";
  else {
    out.note = seq.note;
    append_note(out.note, probe.note);
  }
  return out;
}

}  // namespace

ConditionReport check_delta2(const WeightSequence& m) {
  ConditionReport seq;
  seq.condition = "delta_2";
  seq.route = "sequence_criterion";
  const std::size_t J = m.horizon();

  std::vector<double> r2;
  for (int k = 2; k <= 16; ++k) {
    const std::size_t jl = J / static_cast<std::size_t>(k);
    if (jl < 8) break;
    std::vector<double> r(jl);
    for (std::size_t j = 1; j <= jl; ++j)
      r[j - 1] = (2.0 * k * m.log_M(j) - m.log_M(j * static_cast<std::size_t>(k))) /
                 static_cast<double>(j);
    if (k == 2) r2 = r;
    const PlateauResult pl = plateau(r);
    if (pl.enough_points && pl.bounded) {
      seq.verdict = Verdict::Holds;
      seq.witnesses["k"] = static_cast<double>(k);
      const double ab = std::exp(1.1 * std::max(0.0, pl.sup));
      seq.witnesses["A"] = ab;
      seq.witnesses["B"] = ab;
      break;
    }
  }
  if (seq.verdict != Verdict::Holds && !r2.empty()) {
    const PlateauResult pl = plateau(r2);
    if (pl.enough_points && !pl.bounded) {
      seq.verdict = Verdict::Fails;
      seq.counterexample = static_cast<double>(pl.argmax_tail + 1);
      seq.note = "prefix-sum residual climbs at every scale up to 16";
    } else {
      seq.note = "prefix-sum residual undecided at this horizon";
    }
  }

  ConditionReport probe;
  probe.condition = "delta_2";
  probe.route = "function_probe";
  std::vector<double> ratios, kept;
  if (m.horizon() >= 16) {
    const PiecewiseConvex Q = phi_structure(m);
    const double lvb = Q.domain_max();
    for (double x : log_grid(lvb / 4096.0, 0.5 * lvb * (1.0 - 1e-12), 96)) {
      const double a = Q.value_at(x);
      if (!(a > 0.0)) continue;
      ratios.push_back(Q.value_at(2.0 * x) / a);
      kept.push_back(x);
    }
  }
  if (ratios.size() < 16) {
    probe.note = "completed function vanishes on most of the doubling window";
  } else {
    const PlateauResult pl = plateau(ratios);
    if (pl.bounded) {
      probe.verdict = Verdict::Holds;
      probe.witnesses["C"] = pl.sup;
    } else {
      probe.verdict = Verdict::Fails;
      probe.counterexample = kept[pl.argmax_tail];
      probe.note = "doubling ratio of the completed function keeps climbing";
    }
  }
  return combine_routes(std::move(seq), probe);
}

ConditionReport check_nabla2(const WeightSequence& m) {
  ConditionReport seq;
  seq.condition = "nabla_2";
  seq.route = "sequence_criterion";
  const std::size_t J = m.horizon();
  const std::size_t jl = J / 2;

  const double ells[] = {1.25, 1.5, 2.0, 4.0, 8.0};
  std::vector<double> r_last;
  if (jl >= 8) {
    for (double ell : ells) {
      std::vector<double> r(jl);
      for (std::size_t j = 1; j <= jl; ++j)
        r[j - 1] = m.log_M(2 * j) - 2.0 * ell * m.log_M(j);
      r_last = r;
      const PlateauResult pl = plateau(r);
      if (pl.enough_points && pl.bounded) {
        seq.verdict = Verdict::Holds;
        seq.witnesses["ell"] = ell;
        seq.witnesses["A"] = std::exp(1.1 * std::max(0.0, pl.sup));
        break;
      }
    }
    if (seq.verdict != Verdict::Holds) {
      const PlateauResult pl = plateau(r_last);
      if (pl.enough_points && !pl.bounded) {
        seq.verdict = Verdict::Fails;
        seq.counterexample = static_cast<double>(pl.argmax_tail + 1);
        seq.note = "doubling residual climbs at every tested ell";
      } else {
        seq.note = "doubling residual undecided at this horizon";
      }
    }
  } else {
    seq.note = "horizon too short for the doubling residual";
  }

  // A sequence has nabla_2 exactly when the conjugate of its completion has
  // delta_2, so probe the doubling ratio on the conjugate side.
  ConditionReport probe;
  probe.condition = "nabla_2";
  probe.route = "function_probe";
  std::vector<double> ratios, kept;
  if (m.horizon() >= 16) {
    const PrincipalPart pp = principalize(phi_structure(m), m.label());
    const NFunction G = complementary(pp.F).conjugate;
    const double dG = G.domain_max();
    for (double s : log_grid(dG / 4096.0, 0.5 * dG * (1.0 - 1e-12), 96)) {
      const double a = G.value(s);
      if (!(a > 0.0)) continue;
      ratios.push_back(G.value(2.0 * s) / a);
      kept.push_back(s);
    }
  }
  if (ratios.size() < 16) {
    probe.note = "conjugate vanishes on most of the doubling window";
  } else {
    const PlateauResult pl = plateau(ratios);
    if (pl.bounded) {
      probe.verdict = Verdict::Holds;
      probe.witnesses["C"] = pl.sup;
    } else {
      probe.verdict = Verdict::Fails;
      probe.counterexample = kept[pl.argmax_tail];
      probe.note = "conjugate doubling ratio keeps climbing";
    }
  }
  return combine_routes(std::move(seq), probe);
}

ConditionReport check_delta_square(const WeightSequence& m) {
  ConditionReport rep;
  rep.condition = "delta_square";
  rep.route = "sequence_criterion";
  const std::size_t J = m.horizon();
  const std::size_t jmax = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(J))));

  if (jmax < 8) {
    rep.note = "horizon too short for index-squared probes";
  } else {
    const std::size_t cut = jmax - jmax / 4;
    const std::size_t mid_lo = jmax / 2;
    // The exponent the inequality needs at index j is log mu_{j^2} / log mu_j.
    // That ratio does not depend on the candidate A, so if it is still
    // climbing across the last quarter of the window, any finite-exponent
    // acceptance would only mean the window ends before the climb does.
    double req_mid = 0.0, req_tail = 0.0;
    std::size_t n_mid = 0, n_tail = 0;
    for (std::size_t j = mid_lo + 1; j <= jmax; ++j) {
      const double lj = m.log_mu(j);
      if (lj < 1e-9) continue;
      const double req = m.log_mu(j * j) / lj;
      if (j > cut) {
        req_tail = std::max(req_tail, req);
        ++n_tail;
      } else {
        req_mid = std::max(req_mid, req);
        ++n_mid;
      }
    }
    const bool req_climbing =
        n_mid >= 2 && n_tail >= 2 && req_tail > req_mid * 1.05 + 0.01;
    const int As[] = {2, 3, 4, 6, 8, 12, 16, 24, 32};
    for (int A : As) {
      if (req_climbing) break;
      std::size_t last_bad = 0;
      double tail_min = std::numeric_limits<double>::infinity();
      double mid_min = tail_min;
      for (std::size_t j = 2; j <= jmax; ++j) {
        const double ljj = m.log_mu(j * j);
        const double margin = A * m.log_mu(j) - ljj;
        if (margin < -1e-12 * (1.0 + std::fabs(ljj))) last_bad = j;
        if (j > cut)
          tail_min = std::min(tail_min, margin);
        else if (j > mid_lo)
          mid_min = std::min(mid_min, margin);
      }
      if (last_bad > cut) continue;  // violations survive into the tail
      // A margin still shrinking toward the window edge is not a verdict:
      // the violation may simply sit beyond j = sqrt(horizon).
      if (tail_min >= mid_min * 0.9 - 1e-9) {
        rep.verdict = Verdict::Holds;
        rep.witnesses["A"] = static_cast<double>(A);
        rep.witnesses["j0"] = static_cast<double>(last_bad + 1);
        break;
      }
    }
    if (rep.verdict != Verdict::Holds) {
      std::vector<double> r;
      std::size_t last_bad = 0;
      for (std::size_t j = 2; j <= jmax; ++j) {
        const double resid = m.log_mu(j * j) - 32.0 * m.log_mu(j);
        r.push_back(resid);
        if (resid > 1e-12 * (1.0 + std::fabs(m.log_mu(j * j)))) last_bad = j;
      }
      const PlateauResult pl = plateau(r);
      if (pl.enough_points && !pl.bounded && pl.tail_sup > 0.0 && last_bad > cut) {
        rep.verdict = Verdict::Fails;
        rep.counterexample = static_cast<double>(pl.argmax_tail + 2);
        rep.note = "index-squared quotient outruns every exponent up to 32";
      } else if (req_climbing) {
        rep.note = "required exponent still climbing at the window edge";
      } else {
        rep.note = "margin shrinking at the largest tested exponent";
      }
    }
  }

  // Moderate growth plus a positive lower exponent of mu_{2^n} is a
  // sufficient analytic criterion; it may settle a window the index-squared
  // probe cannot reach, and a conflict voids both.
  const ConditionReport mg = has_mg(m);
  if (mg.verdict == Verdict::Holds) {
    std::vector<double> li;
    for (std::size_t p = 1; (static_cast<std::size_t>(1) << p) <= J; ++p)
      li.push_back(m.log_mu(static_cast<std::size_t>(1) << p) / static_cast<double>(p + 2));
    bool fired = li.size() >= 4;
    for (std::size_t i = li.size() / 2; fired && i < li.size(); ++i)
      fired = li[i] >= std::log(1.05);
    if (fired) {
      if (rep.verdict == Verdict::Fails) {
        rep.verdict = Verdict::Inconclusive;
        rep.counterexample.reset();
        append_note(rep.note, "moderate-growth sufficiency conflicts with the index-squared window");
      } else if (rep.verdict == Verdict::Inconclusive) {
        rep.verdict = Verdict::Holds;
        rep.route = "analytic_family";
        auto it = mg.witnesses.find("A");
        if (it != mg.witnesses.end()) rep.witnesses["A"] = it->second;
        it = mg.witnesses.find("B");
        if (it != mg.witnesses.end()) rep.witnesses["B"] = it->second;
        rep.note = "moderate growth with a positive dyadic quotient exponent settles the bound";
      } else {
        append_note(rep.note, "moderate-growth sufficiency corroborates");
      }
    }
  }
  return rep;
}

namespace {

struct Delta3Window {
  int k = 0;
  bool engaged = false;    // the integral side is awake on most of the grid
  bool decisive = false;   // no tail violations and a non-growing ratio trend
  bool persistent = false; // violations survive into the last quartile
  double ratio_tail = 0.0;
  double bad_x = 0.0;
};

struct Delta3Quotient {
  Verdict verdict = Verdict::Inconclusive;
  int k = 0;
  double j_bad = 0.0;
  std::string note;
};

// Necessary sequence-level companion: phi(k x) at x = log mu_j needs at
// least the counting mass that the integral piles up below j log mu_j, so
// k log mu_j must dominate the quotient at index ceil(j log mu_j).
Delta3Quotient delta3_quotient(const WeightSequence& m) {
  Delta3Quotient out;
  const std::size_t J = m.horizon();
  for (int k : {2, 4, 8, 16}) {
    std::size_t jlim = 0, last_bad = 0;
    for (std::size_t j = 2; j <= J; ++j) {
      const double lj = m.log_mu(j);
      if (!(lj > 0.0)) continue;
      const double idxd = std::ceil(static_cast<double>(j) * lj);
      if (idxd > static_cast<double>(J)) break;
      jlim = j;
      if (static_cast<double>(k) * lj <
          m.log_mu(static_cast<std::size_t>(idxd)) * (1.0 - 1e-12))
        last_bad = j;
    }
    if (jlim < 8) {
      out.note = "quotient window too short";
      return out;
    }
    out.k = k;
    out.j_bad = static_cast<double>(last_bad);
    if (last_bad <= jlim - jlim / 4) {
      out.verdict = Verdict::Holds;
      return out;
    }
  }
  out.verdict = Verdict::Fails;  // violations persist even at the largest scale
  return out;
}

}  // namespace

ConditionReport check_delta3(const WeightSequence& m) {
  ConditionReport rep;
  rep.condition = "delta_3";
  const PiecewiseConvex Q = phi_structure(m);
  const double lvb = Q.domain_max();
  const std::size_t n = 96;

  // Lower comparison phi(x) <= integral of phi over [0, 2x]: for x >= 1 the
  // integral over [x, 2x] alone is at least x phi(x), so any violation there
  // marks a window too distorted to probe.
  bool lower_ok = true;
  {
    const double hi = 0.5 * lvb * (1.0 - 1e-12);
    if (hi > 1.02) {
      for (double x : log_grid(1.0, hi, n)) {
        if (Q.value_at(x) > Q.integral_to(2.0 * x) * (1.0 + 1e-9) + 1e-12) {
          lower_ok = false;
          break;
        }
      }
    }
  }

  std::vector<Delta3Window> wins;
  for (int k : {2, 4, 8, 16}) {
    const double hi = lvb / static_cast<double>(k) * (1.0 - 1e-12);
    const auto xs = log_grid(hi / 64.0, hi, n);
    if (xs.size() < n) continue;
    Delta3Window w;
    w.k = k;
    std::size_t engaged_cnt = 0, last_bad = n;
    std::vector<double> qmid, qtail;
    for (std::size_t i = 0; i < n; ++i) {
      const double up = Q.value_at(static_cast<double>(k) * xs[i]);
      const double til = Q.integral_to(2.0 * xs[i]);
      if (til > 0.0) ++engaged_cnt;
      if (til > up * (1.0 + 1e-9) + 1e-12) {
        last_bad = i;
        w.bad_x = xs[i];
      }
      if (up > 0.0) {
        const double q = til / up;
        if (4 * i >= 3 * n)
          qtail.push_back(q);
        else if (2 * i >= n && 4 * i < 3 * n)
          qmid.push_back(q);
      }
    }
    w.engaged = 2 * engaged_cnt >= n;
    const bool tail_violation = last_bad != n && 4 * last_bad >= 3 * n;
    w.persistent = w.engaged && tail_violation;
    if (w.engaged && !tail_violation && qtail.size() >= 8 && qmid.size() >= 8) {
      const double tmax = *std::max_element(qtail.begin(), qtail.end());
      const double mmax = *std::max_element(qmid.begin(), qmid.end());
      w.ratio_tail = tmax;
      w.decisive = tmax <= mmax * 1.1 + 1e-9;
    }
    wins.push_back(w);
  }

  const Delta3Quotient qt = delta3_quotient(m);

  if (!lower_ok) {
    rep.note = "lower integral comparison undecided on this window";
    return rep;
  }
  const Delta3Window* dec = nullptr;
  std::size_t engaged = 0, persistent = 0;
  const Delta3Window* worst = nullptr;
  for (const auto& w : wins) {
    if (w.decisive && dec == nullptr) dec = &w;
    if (w.engaged) ++engaged;
    if (w.persistent) {
      ++persistent;
      worst = &w;
    }
  }

  if (dec != nullptr) {
    if (qt.verdict == Verdict::Fails) {
      rep.note = "function window accepts a scale but the quotient criterion refutes every scale";
      return rep;
    }
    rep.verdict = Verdict::Holds;
    rep.route = "function_probe";
    rep.witnesses["k"] = static_cast<double>(dec->k);
    rep.witnesses["H"] = dec->ratio_tail;
    if (qt.verdict == Verdict::Holds) rep.note = "quotient criterion agrees";
    return rep;
  }
  if (persistent > 0 && qt.verdict == Verdict::Fails) {
    rep.verdict = Verdict::Fails;
    rep.route = "sequence_criterion";
    rep.counterexample = qt.j_bad;
    rep.witnesses["k"] = static_cast<double>(qt.k);
    rep.note = "integral outruns the function at every usable scale";
    return rep;
  }
  if (persistent >= 2 && persistent == engaged) {
    rep.verdict = Verdict::Fails;
    rep.route = "function_probe";
    rep.counterexample = worst->bad_x;
    rep.witnesses["k"] = static_cast<double>(worst->k);
    rep.note = "violations persist on every engaged window";
    return rep;
  }
  if (persistent > 0 && qt.verdict == Verdict::Holds) {
    rep.note = "function and quotient routes disagree at this horizon";
    return rep;
  }
  rep.note = "no scale is decisive at this horizon";
  return rep;
}

DeltaPrimeReport check_delta_prime(const WeightSequence& m) {
  DeltaPrimeReport out;
  ConditionReport& fp = out.function_probe;
  fp.condition = "delta_prime";
  fp.route = "function_probe";
  const PiecewiseConvex Q = phi_structure(m);
  const double lvb = Q.domain_max();
  const double U = std::sqrt(lvb);

  // Left cutoff u0: at least 1, and past the region where the completed
  // function is below 1 -- products against near-zero values say nothing
  // about the multiplicative inequality.
  double u0 = 1.0;
  bool window_usable = U >= 1.5;
  if (window_usable && Q.value_at(U * (1.0 - 1e-12)) <= 1.0) window_usable = false;
  if (window_usable && Q.value_at(1.0) < 1.0) {
    double a = 0.0, b = U;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (a + b);
      (Q.value_at(mid) < 1.0 ? a : b) = mid;
    }
    u0 = std::max(1.0, b);
    if (!(U >= u0 * 1.2)) window_usable = false;
  }

  if (!window_usable) {
    fp.note = "window too small for the square probe";
  } else {
    const std::size_t gn = 16;
    const auto us = log_grid(u0, U * (1.0 - 1e-12), gn);
    std::vector<double> pv(gn);
    for (std::size_t i = 0; i < gn; ++i) pv[i] = Q.value_at(us[i]);
    int fail_k = 0;
    double fail_ab = 0.0;
    for (int k : {1, 2, 4, 8, 16}) {
      bool far_viol = false, tail_viol = false;
      double qtail = 0.0, qmid = 0.0, worst_ab = 0.0;
      std::size_t ntail = 0, nmid = 0;
      for (std::size_t i = 0; i < gn; ++i) {
        for (std::size_t j = i; j < gn; ++j) {
          const double prod = us[i] * us[j];
          if (prod > lvb * (1.0 - 1e-12)) continue;
          const double lhs = Q.value_at(prod);
          const double rhs = static_cast<double>(k) * pv[i] * pv[j];
          if (lhs > rhs * (1.0 + 1e-9) + 1e-12) {
            // a violation only counts against the condition when both
            // factors sit in the upper half of the window: the condition
            // itself quantifies over large arguments only
            if (2 * i >= gn) far_viol = true;
            if (4 * i >= 3 * gn) {
              tail_viol = true;
              worst_ab = prod;
            }
          }
          if (pv[i] > 0.0 && pv[j] > 0.0 && lhs > 0.0) {
            const double q = lhs / rhs;
            if (4 * i >= 3 * gn) {
              qtail = std::max(qtail, q);
              ++ntail;
            } else if (2 * i >= gn && 4 * i < 3 * gn) {
              qmid = std::max(qmid, q);
              ++nmid;
            }
          }
        }
      }
      if (!far_viol && ntail >= 4 && nmid >= 4 && qtail <= qmid * 1.1 + 1e-9) {
        fp.verdict = Verdict::Holds;
        fp.witnesses["k"] = static_cast<double>(k);
        fp.witnesses["H"] = qtail;
        break;
      }
      if (tail_viol) {
        fail_k = k;
        fail_ab = worst_ab;
      }
    }
    if (fp.verdict != Verdict::Holds) {
      if (fail_k > 0) {
        fp.verdict = Verdict::Fails;
        fp.witnesses["k"] = static_cast<double>(fail_k);
        fp.counterexample = fail_ab;
        fp.note = "corner violations persist at the window edge";
      } else {
        fp.note = "no scale is decisive on this window";
      }
    }
  }

  ConditionReport& dm = out.density_monotonicity;
  dm.condition = "delta_prime_f";
  dm.route = "sequence_criterion";
  bool window_ok = false;
  for (double t : {2.0, 3.0}) {
    if (dm.verdict == Verdict::Fails) break;
    const double x_hi = lvb / t * (1.0 - 1e-12);
    double x_lo = x_hi / 4096.0;
    if (m.log_mu(1) > 0.0) x_lo = std::max(x_lo, m.log_mu(1) * (1.0 + 1e-9) + 1e-12);
    const auto xs = log_grid(x_lo, x_hi, 64);
    if (xs.size() < 16) continue;
    window_ok = true;
    long pa = 0, pb = 0;
    bool have_prev = false;
    for (double x : xs) {
      const long a = m.count_le_log(t * x);
      const long b = m.count_le_log(x);
      if (b < 1) continue;
      // strict rise of a/b, compared in integers so count plateaus can
      // never fake an increase
      if (have_prev && a * pb > pa * b) {
        dm.verdict = Verdict::Fails;
        dm.counterexample = std::exp(x);
        dm.note = "counting quotient rises";
        break;
      }
      pa = a;
      pb = b;
      have_prev = true;
    }
  }
  if (dm.verdict != Verdict::Fails) {
    if (window_ok)
      dm.verdict = Verdict::Holds;
    else
      dm.note = "counting window too short";
  }
  return out;
}

ImplicationAudit implication_audit(const std::vector<ConditionReport>& reports) {
  static const char* const need[] = {"delta_2", "nabla_2", "delta_square", "delta_3",
                                     "delta_prime"};
  std::map<std::string, const ConditionReport*> by;
  for (const auto& r : reports) by.emplace(r.condition, &r);
  std::string problems;
  for (const char* name : need) {
    const auto it = by.find(name);
    if (it == by.end())
      append_note(problems, std::string(name) + " missing");
    else if (it->second->verdict == Verdict::Inconclusive)
      append_note(problems, std::string(name) + " undecided");
  }
  if (!problems.empty()) throw IncompleteReports("implication_audit: " + problems);

  ImplicationAudit audit;
  const auto imply = [&](const char* premise, const char* conclusion) {
    ++audit.checked;
    if (by[premise]->verdict == Verdict::Holds && by[conclusion]->verdict == Verdict::Fails)
      audit.violations.push_back(std::string(premise) + " holds but " + conclusion + " fails");
  };
  imply("delta_prime", "delta_2");
  imply("delta_square", "delta_3");
  imply("delta_3", "nabla_2");
  return audit;
}

}  // namespace orlicz
