#include <cmath>
#include <random>

#include "doctest.h"
#include "orlicz/associated.hpp"
#include "orlicz/dual_sequence.hpp"
#include "orlicz/errors.hpp"
#include "test_util.hpp"

using namespace orlicz;
using testutil::gevrey;
using testutil::qgevrey;

TEST_CASE("dual of the factorial quotients counts integers") {
  const DualSequence ds = dual(gevrey(1.0, 64));
  // delta_i = max(1, Sigma(i-1)) = max(1, i-1): 1, 1, 2, 3, ...
  CHECK(ds.dual.mu(1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ds.dual.mu(2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ds.dual.mu(3) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(ds.dual.mu(4) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(ds.d_threshold >= 1);
}

TEST_CASE("dual of the quadratic-exponent quotients grows like log") {
  const DualSequence ds = dual(qgevrey(2.0, 2.0, 64));
  // Sigma(t) = #{ j : 2^{2j-1} <= t } = floor((log2 t + 1) / 2), so the
  // dual entries delta_{j+1} = max(1, Sigma(j)) follow the log2 staircase.
  for (std::size_t j = 2; j + 1 <= ds.dual.horizon(); ++j) {
    const double expect = std::max(
        1.0, std::floor((std::log2(static_cast<double>(j)) + 1.0) / 2.0));
    CHECK(ds.dual.mu(j + 1) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("dual refuses when too few entries are determined") {
  // The dual of the qgevrey dual has a tiny validity bound.
  const DualSequence ds = dual(qgevrey(2.0, 2.0, 64));
  CHECK_THROWS_AS(dual(ds.dual), InvalidParameter);
}

TEST_CASE("dual counting closed form agrees with direct counting") {
  std::mt19937 rng(17);
  for (const auto& seq : {gevrey(0.5, 128), gevrey(1.0, 128), gevrey(2.0, 128),
                          qgevrey(2.0, 2.0, 128), qgevrey(3.0, 2.0, 128)}) {
    const DualSequence ds = dual(seq);
    const double hi = ds.dual.valid_bound() * (1.0 - 1e-9);
    std::uniform_real_distribution<double> ts(0.0, hi);
    for (int i = 0; i < 500; ++i) {
      const double t = ts(rng);
      CHECK(sigma_dual(ds, t) == counting(ds.dual, t));
    }
  }
}

TEST_CASE("frozen dual counting values") {
  const DualSequence g1 = dual(gevrey(1.0, 64));
  CHECK(sigma_dual(g1, 2.5) == 3);
  const DualSequence q2 = dual(qgevrey(2.0, 2.0, 64));
  CHECK(sigma_dual(q2, 1.5) == 8);
}

TEST_CASE("gamma_tilde rectangle completion frozen value") {
  const DualSequence ds = dual(gevrey(1.0, 64));
  // gamma_tilde(t) = log ceil(mu_{n+1}) = log(n+1) for integer quotients.
  CHECK(gamma_tilde(ds, 2.5) == std::log(3.0));
  // F(3) = gamma_tilde(1) + gamma_tilde(2) = log 2 + log 3 = log 6.
  CHECK(F_gamma_tilde(ds, 3.0) == doctest::Approx(std::log(6.0)).epsilon(1e-15));
  CHECK(F_gamma_tilde(ds, -3.0) == F_gamma_tilde(ds, 3.0));
  CHECK_THROWS_AS(gamma_tilde(ds, 0.5), InvalidParameter);
  CHECK_THROWS_AS(gamma_tilde(ds, 64.5), IndexExceeded);
}

TEST_CASE("dual quotient envelope sandwich") {
  for (const auto& seq : {gevrey(0.5, 256), gevrey(1.0, 256), gevrey(2.0, 256),
                          qgevrey(2.0, 2.0, 256), qgevrey(3.0, 2.0, 256)}) {
    const DualSequence ds = dual(seq);
    const SandwichReport rep = sandwich_check(ds, 2000);
    CHECK(rep.points > 0);
    CHECK(rep.lower_ok);
    CHECK(rep.upper_ok);
    CHECK(rep.max_gap <= std::log(2.0) + 1e-9);
  }
  // Integer quotients leave no ceiling slack at all.
  const SandwichReport exact = sandwich_check(dual(gevrey(1.0, 256)), 2000);
  CHECK(exact.min_gap == 0.0);
  CHECK(exact.max_gap == 0.0);
}

TEST_CASE("dual sequences stay log-convex by construction") {
  std::mt19937 rng(23);
  for (int i = 0; i < 10; ++i) {
    const WeightSequence m = testutil::random_lc(rng, 128);
    const DualSequence ds = dual(m);
    const auto& lq = ds.dual.log_quotients();
    for (std::size_t j = 2; j < lq.size(); ++j) CHECK(lq[j] >= lq[j - 1]);
    CHECK(lq[1] >= 0.0);
  }
}
