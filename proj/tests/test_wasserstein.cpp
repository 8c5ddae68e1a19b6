#include <cmath>

#include "doctest.h"
#include "flatmetric/oracle.hpp"
#include "flatmetric/wasserstein.hpp"
#include "support.hpp"

using namespace flatmetric;
using flatmetric::testing::close_rel;
using flatmetric::testing::random_measure;
using flatmetric::testing::rebalance;

TEST_CASE("w1_distance examples") {
  const auto w = w1_distance(canonicalize({{0, 2}}), canonicalize({{1, 3}}));
  CHECK(std::isinf(w.value));
  CHECK_FALSE(w.is_finite());
  CHECK(w.metric == Metric::W1);

  CHECK(w1_distance(canonicalize({{0, 1}}), canonicalize({{1, 1}})).value == 1);
  CHECK(w1_distance(canonicalize({{0, 1}, {1, 1}}), canonicalize({{0.5, 2}})).value == 1);
  CHECK(w1_distance(DiscreteMeasure{}, DiscreteMeasure{}).value == 0);
}

TEST_CASE("w1_distance tolerates rounding in the mass balance") {
  const auto mu = canonicalize({{0, 0.1}, {1, 0.2}});
  const auto nu = canonicalize({{0.5, 0.3}});
  CHECK(w1_distance(mu, nu).is_finite());
  CHECK_FALSE(w1_distance(mu, canonicalize({{0.5, 0.3 + 1e-9}})).is_finite());
}

TEST_CASE("w1_distance is scale equivariant and translation invariant") {
  InstanceRng rng(21);
  for (int c = 0; c < 100; ++c) {
    const auto mu = random_measure(rng, 1 + rng.below(10));
    const auto nu = rebalance(random_measure(rng, 1 + rng.below(10)), mu);
    const double w = w1_distance(mu, nu).value;
    const double lambda = 0.1 + 5 * rng.uniform01();
    const double t = rng.uniform(-10, 10);
    CHECK(close_rel(w1_distance(scale_mass(mu, lambda), scale_mass(nu, lambda)).value, lambda * w));
    CHECK(close_rel(w1_distance(translate(mu, t), translate(nu, t)).value, w, 1e-8));
  }
}

TEST_CASE("normalized_w1 examples") {
  CHECK(normalized_w1(canonicalize({{0, 2}}), canonicalize({{1, 3}})).value == 2);
  CHECK(normalized_w1(canonicalize({{0, 2}}), canonicalize({{0.2, 3}})).value == doctest::Approx(1.2));
  CHECK(normalized_w1(canonicalize({{0, 2}}), canonicalize({{5, 3}})).value == 5);
  CHECK(normalized_w1(canonicalize({{0, 1}}), canonicalize({{10, 1}})).value == 2);
  const auto mu = canonicalize({{0, 1}, {3, 2}});
  CHECK(normalized_w1(mu, mu).value == 0);
  CHECK(normalized_w1(mu, DiscreteMeasure{}).value == 3);
  CHECK(normalized_w1(DiscreteMeasure{}, DiscreteMeasure{}).value == 0);
}

TEST_CASE("normalized_w1 of the unit-normalized pair matches the W1 oracle") {
  // (delta_0, delta_10): the second branch is 10, so the annihilation branch wins.
  const auto mu = canonicalize({{0, 1}});
  const auto nu = canonicalize({{10, 1}});
  const auto ref = oracle::dual_lp_oracle(difference(mu, nu), oracle::DualConstraintSpec::wasserstein(0),
                                          1e-3);
  CHECK(std::abs(ref.estimate - 10) <= ref.error_bound);
  CHECK(normalized_w1(mu, nu).value == std::min(2.0, ref.estimate));
}

TEST_CASE("centralized_w1 examples") {
  const auto mu = canonicalize({{0.2, 2}});
  const auto nu = canonicalize({{0.5, 3}});
  CHECK(centralized_w1(mu, nu).value == doctest::Approx(2.1).epsilon(1e-12));
  const auto ref =
      oracle::dual_lp_oracle(difference(mu, nu), oracle::DualConstraintSpec::centralized(), 1e-3);
  CHECK(ref.lower <= 2.1 + 1e-9);
  CHECK(ref.upper >= 2.1 - 1e-9);
  CHECK(centralized_w1(mu, mu).value == 0);
  // Atoms on both sides of the anchor and one at the anchor itself.
  CHECK(centralized_w1(canonicalize({{-1, 1}, {0, 1}}), canonicalize({{1, 1}})).value == 3);
}

TEST_CASE("centralized_w1 equals w1 on equal masses and scales") {
  InstanceRng rng(23);
  for (int c = 0; c < 100; ++c) {
    const auto mu = random_measure(rng, 1 + rng.below(10), -2, 2);
    const auto nu = random_measure(rng, 1 + rng.below(10), -2, 2);
    const auto nu_eq = rebalance(nu, mu);
    CHECK(close_rel(centralized_w1(mu, nu_eq).value, w1_distance(mu, nu_eq).value));
    const double lambda = 0.1 + 5 * rng.uniform01();
    CHECK(close_rel(centralized_w1(scale_mass(mu, lambda), scale_mass(nu, lambda)).value,
                    lambda * centralized_w1(mu, nu).value));
  }
}

TEST_CASE("centralized_w1 is not translation invariant") {
  const auto mu = canonicalize({{0.2, 2}});
  const auto nu = canonicalize({{0.5, 3}});
  const double moved = centralized_w1(translate(mu, 1), translate(nu, 1)).value;
  CHECK(moved == doctest::Approx(3.1).epsilon(1e-12));
}

TEST_CASE("flat_upper_bound examples") {
  CHECK(flat_upper_bound(canonicalize({{0, 2}}), canonicalize({{1, 3}})).value == 3);
  for (double x : {1.0, 10.0, 1000.0}) {
    CHECK(flat_upper_bound(canonicalize({{0, 1}}), canonicalize({{x, 1}})).value == x);
  }
  CHECK(flat_upper_bound(canonicalize({{0, 2}}), DiscreteMeasure{}).value == 2);
  CHECK(flat_upper_bound(DiscreteMeasure{}, DiscreteMeasure{}).value == 0);

  InstanceRng rng(29);
  for (int c = 0; c < 50; ++c) {
    const auto mu = random_measure(rng, 1 + rng.below(10));
    const auto nu = rebalance(random_measure(rng, 1 + rng.below(10)), mu);
    CHECK(close_rel(flat_upper_bound(mu, nu).value, w1_distance(mu, nu).value));
  }
}

TEST_CASE("metric tags") {
  const auto mu = canonicalize({{0, 1}});
  CHECK(normalized_w1(mu, mu).metric == Metric::W1Normalized);
  CHECK(centralized_w1(mu, mu).metric == Metric::W1Centralized);
  CHECK(flat_upper_bound(mu, mu).metric == Metric::FlatUpper);
  CHECK_FALSE(w1_distance(mu, mu).backend.has_value());
  CHECK(parse_metric("w1-normalized") == Metric::W1Normalized);
  CHECK_FALSE(parse_metric("w2").has_value());
  CHECK(to_string(Metric::FlatUpper) == "flat-upper");
}
