#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "orlicz/associated.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/weight_sequence.hpp"
#include "test_util.hpp"

using namespace orlicz;
using testutil::gevrey;
using testutil::qgevrey;
using testutil::random_lc;

TEST_CASE("construction rejects broken quotient lists") {
  CHECK_THROWS_AS(WeightSequence({}, "empty"), InvalidParameter);
  CHECK_THROWS_AS(WeightSequence({0.0, std::nan("")}, "nan"), InvalidParameter);
  CHECK_THROWS_AS(WeightSequence({-0.5, 0.0}, "below one"), NotNormalized);
  CHECK_THROWS_AS(WeightSequence({0.0, 1.0, 0.5}, "drop"), NotLogConvex);
}

TEST_CASE("make_sequence enforces divergence and minimum horizon") {
  SequenceSpec tiny;
  tiny.family = "gevrey";
  tiny.params["s"] = 1.0;
  tiny.horizon = 4;
  CHECK_THROWS_AS(make_sequence(tiny), InvalidParameter);

  // Constant quotients keep (M_j)^{1/j} bounded: no divergence evidence.
  SequenceSpec flat;
  flat.family = "explicit";
  flat.log_quotients.assign(32, 0.0);
  flat.horizon = 32;
  CHECK_THROWS_AS(make_sequence(flat), InvalidParameter);

  const LcReport rep = validate_lc(std::vector<double>(32, 0.0));
  CHECK(rep.normalized);
  CHECK(rep.log_convex);
  CHECK_FALSE(rep.divergence_evidence);
}

TEST_CASE("gevrey prefix sums are factorial logs") {
  const WeightSequence m = gevrey(1.0, 64);
  CHECK(m.log_mu(1) == 0.0);
  CHECK(m.log_mu(4) == std::log(4.0));
  // log M_4 = log 24, both sides accumulated the same way.
  CHECK(m.log_M(4) == doctest::Approx(3.1780538303479458).epsilon(1e-15));
  // exp(log mu_63) round-trips to within one ulp of 63.
  CHECK(m.valid_bound() == doctest::Approx(63.0).epsilon(1e-14));
}

TEST_CASE("pointwise product and power act on quotients") {
  const WeightSequence a = gevrey(1.0, 64);
  const WeightSequence ab = pointwise_product(a, a);
  const WeightSequence a2 = power(a, 2.0);
  for (std::size_t j = 1; j <= 64; ++j) {
    CHECK(ab.log_quotients()[j] == 2.0 * a.log_quotients()[j]);
    CHECK(a2.log_quotients()[j] == 2.0 * a.log_quotients()[j]);
  }
}

TEST_CASE("convolution merges quotients and adds counting functions") {
  const WeightSequence a = gevrey(1.0, 64);
  const WeightSequence c = convolve(a, a);
  // (M*M)_4 = min_k M_k M_{4-k} = 4: the four smallest merged quotients are
  // 0, 0, log 2, log 2.
  CHECK(c.log_M(4) == doctest::Approx(std::log(4.0)).epsilon(1e-15));

  std::mt19937 rng(91);
  for (int pair = 0; pair < 3; ++pair) {
    const WeightSequence m = random_lc(rng, 96);
    const WeightSequence l = random_lc(rng, 96);
    const WeightSequence ml = convolve(m, l);
    const double hi = std::exp(std::min({m.log_valid_bound(), l.log_valid_bound(),
                                         ml.log_valid_bound()})) *
                      (1.0 - 1e-9);
    std::uniform_real_distribution<double> logt(0.0, std::log(hi));
    for (int i = 0; i < 50; ++i) {
      const double t = std::exp(logt(rng));
      CHECK(counting(ml, t) == counting(m, t) + counting(l, t));
    }
  }
}

TEST_CASE("regularization produces strictly increasing nearby quotients") {
  std::vector<double> lq = {0.0, 0.0, 1.0, 1.0, 1.0, 2.0, 2.0, 3.0, 3.5, 3.5};
  const WeightSequence a(lq, "flats");
  CHECK_FALSE(a.strictly_increasing_quotients());
  const WeightSequence b = regularize_strictly_increasing(a);
  CHECK(b.strictly_increasing_quotients());
  const double eps = 0x1p-20;
  for (std::size_t j = 1; j <= a.horizon(); ++j) {
    CHECK(b.log_quotients()[j] >= a.log_quotients()[j]);
    CHECK(b.log_M(j) - a.log_M(j) <= eps * static_cast<double>(j));
  }
}

TEST_CASE("sequence comparison by j-th roots") {
  const WeightSequence g1 = gevrey(1.0);
  const WeightSequence g2 = gevrey(2.0);

  const RelationEvidence up = relate_sequences(g1, g2, SeqRelation::Preceq);
  CHECK(up.verdict == Verdict::Holds);
  CHECK(up.witnesses.at("bound") <= 1e-12);  // (j!/j!^2)^{1/j} <= 1

  const RelationEvidence down = relate_sequences(g2, g1, SeqRelation::Preceq);
  CHECK(down.verdict == Verdict::Fails);
  CHECK(down.counterexample.has_value());

  CHECK(relate_sequences(g1, g1, SeqRelation::Approx).verdict == Verdict::Holds);
  CHECK(relate_sequences(g1, g1, SeqRelation::Cong).verdict == Verdict::Holds);
  CHECK(relate_sequences(g1, g2, SeqRelation::Cong).verdict == Verdict::Fails);
}

TEST_CASE("moderate growth separates gevrey from qgevrey") {
  const ConditionReport g = has_mg(gevrey(1.0));
  CHECK(g.verdict == Verdict::Holds);
  CHECK(g.witnesses.at("B") == doctest::Approx(4.0));
  CHECK(has_mg(gevrey(0.5)).witnesses.at("B") == doctest::Approx(2.0));

  const ConditionReport q = has_mg(qgevrey(2.0, 2.0));
  CHECK(q.verdict == Verdict::Fails);
  CHECK(q.counterexample.has_value());
}
