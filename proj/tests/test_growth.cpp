#include "orlicz/growth.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "orlicz/errors.hpp"
#include "orlicz/weight_sequence.hpp"
#include "test_util.hpp"

using namespace orlicz;

namespace {

ConditionReport simple(const char* condition, Verdict v) {
  ConditionReport r;
  r.condition = condition;
  r.verdict = v;
  return r;
}

}  // namespace

TEST_CASE("gevrey scales: moderate growth, doubling failure, index-square") {
  const double scales[] = {0.5, 1.0, 2.0};
  const double dyadic[] = {2.0, 4.0, 16.0};
  for (int i = 0; i < 3; ++i) {
    CAPTURE(scales[i]);
    const WeightSequence m = testutil::gevrey(scales[i]);

    const ConditionReport mg = has_mg(m);
    CHECK(mg.verdict == Verdict::Holds);
    CHECK(mg.route == "diagonal doubling");
    CHECK(mg.witnesses.at("A") == 1.0);
    // B = exp(1.1 * sup residual) lands within a few ulps of the dyadic step.
    CHECK(mg.witnesses.at("B") == doctest::Approx(dyadic[i]).epsilon(1e-14));

    const ConditionReport d2 = check_delta2(m);
    CHECK(d2.verdict == Verdict::Fails);
    CHECK(d2.counterexample == 128.0);
    CHECK(d2.note.find("climbs") != std::string::npos);

    const ConditionReport n2 = check_nabla2(m);
    CHECK(n2.verdict == Verdict::Holds);
    CHECK(n2.witnesses.at("ell") == 1.25);

    const ConditionReport dsq = check_delta_square(testutil::gevrey(scales[i], 1024));
    CHECK(dsq.verdict == Verdict::Holds);
    CHECK(dsq.witnesses.at("A") == 2.0);
    CHECK(dsq.witnesses.at("j0") == 1.0);

    const ConditionReport d3 = check_delta3(m);
    CHECK(d3.verdict == Verdict::Holds);
    CHECK(d3.witnesses.at("k") == 4.0);
    CHECK(d3.witnesses.at("H") < 0.25);
  }
}

TEST_CASE("q-gevrey scales: doubling holds, integral and square probes fail") {
  const double qs[] = {2.0, 3.0};
  const double d3_cex[] = {13.0, 11.0};
  for (int i = 0; i < 2; ++i) {
    CAPTURE(qs[i]);
    const WeightSequence m = testutil::qgevrey(qs[i], 2.0);

    const ConditionReport mg = has_mg(m);
    CHECK(mg.verdict == Verdict::Fails);
    CHECK(mg.counterexample == 128.0);
    CHECK(mg.witnesses.at("tail_residual") > 0.0);

    const ConditionReport d2 = check_delta2(m);
    CHECK(d2.verdict == Verdict::Holds);
    CHECK(d2.witnesses.at("k") == 2.0);
    // The sup residual is accumulated prefix-sum rounding around zero.
    CHECK(d2.witnesses.at("A") == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(d2.witnesses.at("B") == doctest::Approx(1.0).epsilon(1e-11));

    const ConditionReport n2 = check_nabla2(m);
    CHECK(n2.verdict == Verdict::Holds);
    CHECK(n2.witnesses.at("ell") == 2.0);
    CHECK(n2.witnesses.at("A") == doctest::Approx(1.0).epsilon(1e-11));

    const ConditionReport dsq = check_delta_square(testutil::qgevrey(qs[i], 2.0, 1024));
    CHECK(dsq.verdict == Verdict::Fails);
    CHECK(dsq.counterexample == 32.0);

    const ConditionReport d3 = check_delta3(m);
    CHECK(d3.verdict == Verdict::Fails);
    CHECK(d3.witnesses.at("k") == 16.0);
    CHECK(d3.counterexample == d3_cex[i]);

    const DeltaPrimeReport dp = check_delta_prime(m);
    CHECK(dp.function_probe.verdict == Verdict::Holds);
    CHECK(dp.function_probe.witnesses.at("H") < 1.0);
    CHECK(dp.density_monotonicity.verdict == Verdict::Fails);
    CHECK(dp.density_monotonicity.note == "counting quotient rises");
  }
}

TEST_CASE("index-square verdict is window-dependent for q-gevrey") {
  // The index-squared probe only sees j <= sqrt(horizon).  At 256 the
  // exponent the inequality needs is still climbing when the window ends,
  // so no finite acceptance is trustworthy; at 1024 the growth decisively
  // outruns every tested exponent.
  const ConditionReport narrow = check_delta_square(testutil::qgevrey(2.0, 2.0, 256));
  CHECK(narrow.verdict == Verdict::Inconclusive);
  CHECK(narrow.note.find("still climbing") != std::string::npos);
  const ConditionReport wide = check_delta_square(testutil::qgevrey(2.0, 2.0, 1024));
  CHECK(wide.verdict == Verdict::Fails);
  CHECK(wide.counterexample == 32.0);
}

TEST_CASE("slow affine drift stays undecided at the square window") {
  // lq_j = a + c j needs exponent ~ j in mu_{j^2} <= mu_j^A; with a small c
  // every margin inside the window is still positive, but the needed
  // exponent is visibly climbing, so an acceptance would only mean the
  // window ended before the climb did.
  std::vector<double> lq;
  for (int j = 1; j <= 1024; ++j) lq.push_back(1.778 + 0.029 * j);
  const WeightSequence m(lq, "affine_drift");
  const ConditionReport dsq = check_delta_square(m);
  CHECK(dsq.verdict == Verdict::Inconclusive);
  CHECK(dsq.note.find("still climbing") != std::string::npos);
  CHECK(check_delta3(m).verdict == Verdict::Fails);
}

TEST_CASE("short horizons refuse to extrapolate") {
  const WeightSequence m = testutil::gevrey(1.0, 8);
  CHECK(has_mg(m).verdict == Verdict::Inconclusive);
  CHECK(check_delta2(m).verdict == Verdict::Inconclusive);
  CHECK(check_nabla2(m).verdict == Verdict::Inconclusive);
  CHECK(check_delta_square(m).verdict == Verdict::Inconclusive);
  const ConditionReport d3 = check_delta3(m);
  CHECK(d3.verdict == Verdict::Inconclusive);
  CHECK(!d3.note.empty());
  CHECK(check_delta_prime(m).function_probe.verdict == Verdict::Inconclusive);
}

TEST_CASE("reported witnesses replay on the defining inequalities") {
  const WeightSequence m = testutil::qgevrey(2.0, 2.0);
  const std::size_t J = m.horizon();

  const ConditionReport d2 = check_delta2(m);
  REQUIRE(d2.verdict == Verdict::Holds);
  const auto k = static_cast<std::size_t>(d2.witnesses.at("k"));
  const double logA = std::log(d2.witnesses.at("A"));
  const double logB = std::log(d2.witnesses.at("B"));
  for (std::size_t j = 1; j * k <= J; ++j)
    CHECK(2.0 * static_cast<double>(k) * m.log_M(j) <=
          logA + static_cast<double>(j) * logB + m.log_M(j * k) + 1e-9);

  const ConditionReport n2 = check_nabla2(m);
  REQUIRE(n2.verdict == Verdict::Holds);
  const double ell = n2.witnesses.at("ell");
  const double logA2 = std::log(n2.witnesses.at("A"));
  for (std::size_t j = 1; 2 * j <= J; ++j)
    CHECK(m.log_M(2 * j) <= logA2 + 2.0 * ell * m.log_M(j) + 1e-9);

  const ConditionReport dsq = check_delta_square(testutil::gevrey(1.0, 1024));
  REQUIRE(dsq.verdict == Verdict::Holds);
  const double A = dsq.witnesses.at("A");
  const auto j0 = static_cast<std::size_t>(dsq.witnesses.at("j0"));
  const WeightSequence g1 = testutil::gevrey(1.0, 1024);
  for (std::size_t j = j0; j * j <= 1024; ++j)
    CHECK(g1.log_mu(j * j) <= A * g1.log_mu(j) + 1e-9);
}

TEST_CASE("conditions survive sequence products") {
  const WeightSequence q22 = testutil::qgevrey(2.0, 2.0);
  const WeightSequence g1 = testutil::gevrey(1.0);
  const WeightSequence g2 = testutil::gevrey(2.0);
  const WeightSequence gh = testutil::gevrey(0.5);

  CHECK(check_delta2(pointwise_product(q22, q22)).verdict == Verdict::Holds);
  CHECK(check_delta2(convolve(q22, q22)).verdict == Verdict::Holds);
  CHECK(check_nabla2(pointwise_product(g1, g2)).verdict == Verdict::Holds);
  CHECK(check_nabla2(convolve(gh, gh)).verdict == Verdict::Holds);
  CHECK(check_delta3(convolve(g1, g1)).verdict == Verdict::Holds);
}

TEST_CASE("undecided square probe blocks the audit instead of clashing") {
  // At horizon 256 the index-square window ends while q-gevrey growth is
  // still climbing; the checker refuses a verdict, so the audit refuses to
  // run rather than weighing a window artifact against the integral route.
  const WeightSequence m = testutil::qgevrey(2.0, 2.0);
  std::vector<ConditionReport> reports{check_delta2(m), check_nabla2(m),
                                       check_delta_square(m), check_delta3(m),
                                       check_delta_prime(m).function_probe};
  CHECK(reports[2].verdict == Verdict::Inconclusive);
  CHECK_THROWS_WITH_AS(implication_audit(reports),
                       "implication_audit: delta_square undecided",
                       IncompleteReports);

  // The wide window is decisive on all five conditions and consistent.
  const WeightSequence w = testutil::qgevrey(2.0, 2.0, 1024);
  std::vector<ConditionReport> wide{check_delta2(w), check_nabla2(w),
                                    check_delta_square(w), check_delta3(w),
                                    check_delta_prime(w).function_probe};
  const ImplicationAudit audit = implication_audit(wide);
  CHECK(audit.checked == 3);
  CHECK(audit.consistent());
}

TEST_CASE("implication audit needs five decisive reports") {
  std::vector<ConditionReport> reports{
      simple("delta_prime", Verdict::Holds), simple("delta_2", Verdict::Fails),
      simple("delta_square", Verdict::Fails), simple("delta_3", Verdict::Holds),
      simple("nabla_2", Verdict::Holds)};
  const ImplicationAudit audit = implication_audit(reports);
  CHECK(audit.checked == 3);
  REQUIRE(audit.violations.size() == 1);
  CHECK(audit.violations[0] == "delta_prime holds but delta_2 fails");

  std::vector<ConditionReport> clash{
      simple("delta_prime", Verdict::Fails), simple("delta_2", Verdict::Holds),
      simple("delta_square", Verdict::Holds), simple("delta_3", Verdict::Fails),
      simple("nabla_2", Verdict::Holds)};
  const ImplicationAudit clash_audit = implication_audit(clash);
  REQUIRE(clash_audit.violations.size() == 1);
  CHECK(clash_audit.violations[0] == "delta_square holds but delta_3 fails");

  // Extra conditions are ignored; duplicates resolve to the first entry.
  std::vector<ConditionReport> extras = reports;
  extras.push_back(simple("mg", Verdict::Fails));
  extras.push_back(simple("delta_2", Verdict::Holds));
  CHECK(implication_audit(extras).violations.size() == 1);

  std::vector<ConditionReport> missing(reports.begin(), reports.end() - 1);
  CHECK_THROWS_WITH_AS(implication_audit(missing),
                       "implication_audit: nabla_2 missing", IncompleteReports);

  std::vector<ConditionReport> undecided = reports;
  undecided[4].verdict = Verdict::Inconclusive;
  CHECK_THROWS_WITH_AS(implication_audit(undecided),
                       "implication_audit: nabla_2 undecided",
                       IncompleteReports);
}

TEST_CASE("random draws with decisive verdicts audit consistently") {
  // Three quotient shapes: jittered gevrey, affine drift, jittered
  // q-geometric.  Draws where any condition stays undecided are excluded the
  // way a caller must exclude them; every decisive set must be consistent.
  const std::size_t J = 1024;
  std::mt19937 rng(2412);
  std::uniform_real_distribution<double> su(0.3, 3.0), au(0.1, 2.0),
      cu(0.01, 0.3), u01(0.0, 1.0);
  std::size_t decisive = 0;
  for (int i = 0; i < 15; ++i) {
    std::vector<double> lq(J);
    if (i % 3 == 0) {
      const double s = su(rng), cap = 0.2 * s * std::log(2.0) / J;
      double eta = 0.0;
      for (std::size_t j = 1; j <= J; ++j) {
        eta += u01(rng) * cap;
        lq[j - 1] = s * std::log(static_cast<double>(j)) + eta;
      }
    } else if (i % 3 == 1) {
      const double a = au(rng), c = cu(rng);
      for (std::size_t j = 1; j <= J; ++j)
        lq[j - 1] = a + c * static_cast<double>(j);
    } else {
      const double q = 1.2 + u01(rng) * 1.8, cap = 0.2 * std::log(q) / J;
      double eta = 0.0;
      for (std::size_t j = 1; j <= J; ++j) {
        eta += u01(rng) * cap;
        lq[j - 1] = (2.0 * static_cast<double>(j) - 1.0) * std::log(q) + eta;
      }
    }
    const WeightSequence m(lq, "draw_" + std::to_string(i));
    std::vector<ConditionReport> reports{check_delta2(m), check_nabla2(m),
                                         check_delta_square(m), check_delta3(m),
                                         check_delta_prime(m).function_probe};
    bool all_decided = true;
    for (const auto& r : reports)
      if (r.verdict == Verdict::Inconclusive) all_decided = false;
    if (!all_decided) continue;
    ++decisive;
    CAPTURE(i);
    CHECK(implication_audit(reports).consistent());
  }
  CHECK(decisive >= 8);
}
