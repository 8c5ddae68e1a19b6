#include <cmath>

#include "doctest.h"
#include "flatmetric/discretize.hpp"
#include "flatmetric/wasserstein.hpp"
#include "support.hpp"

using namespace flatmetric;
using flatmetric::testing::random_measure;

TEST_CASE("uniform source in four cells") {
  const auto mu = discretize(uniform_source(0, 1, 1), 4);
  REQUIRE(mu.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(mu.atoms()[i].position == doctest::Approx(0.25 * (i + 1)));
    CHECK(mu.atoms()[i].mass == doctest::Approx(0.25));
  }
}

TEST_CASE("a point mass moves to the right end of its cell") {
  const auto exact = canonicalize({{0.3, 1}});
  const auto source = step_source(exact, 0, 1);
  const auto mu = discretize(source, 10);
  REQUIRE(mu.size() == 1);
  CHECK(mu.atoms()[0].position == doctest::Approx(0.4));
  CHECK(mu.atoms()[0].mass == 1);
  const double error = w1_distance(exact, mu).value;
  CHECK(error == doctest::Approx(0.1));
  CHECK(error <= discretization_error_bound(source, 10) + 1e-12);
}

TEST_CASE("one cell puts everything at b") {
  const auto mu = discretize(uniform_source(-2, 3, 1.5), 1);
  REQUIRE(mu.size() == 1);
  CHECK(mu.atoms()[0] == Atom{3, 1.5});
}

TEST_CASE("midpoint placement") {
  const auto mu = discretize(uniform_source(0, 1, 1), 2, AtomPlacement::Midpoint);
  REQUIRE(mu.size() == 2);
  CHECK(mu.atoms()[0].position == doctest::Approx(0.25));
  CHECK(mu.atoms()[1].position == doctest::Approx(0.75));
}

TEST_CASE("table source") {
  const auto source = table_source({{0, 5}, {1, 5}, {2, 7}});
  CHECK(source.total == 2);
  const auto mu = discretize(source, 2);
  REQUIRE(mu.size() == 1);
  CHECK(mu.atoms()[0] == Atom{2, 2});
  CHECK_THROWS_AS(table_source({{0, 1}, {1, 0}}), InvalidCdf);
  CHECK_THROWS(table_source({{0, 1}}));
}

TEST_CASE("invalid sources are rejected") {
  CHECK_THROWS_AS(discretize(uniform_source(0, 1, 1), 0), std::invalid_argument);
  CHECK_THROWS(uniform_source(1, 1, 1));
  CHECK_THROWS(step_source(canonicalize({{2, 1}}), 0, 1));
  IntervalMeasureSource decreasing{[](double x) { return -x; }, 0, 1, -1};
  CHECK_THROWS_AS(discretize(decreasing, 4), InvalidCdf);
  IntervalMeasureSource offset{[](double x) { return 1 + x; }, 0, 1, 1};
  CHECK_THROWS_AS(discretize(offset, 4), InvalidCdf);
}

TEST_CASE("mass is preserved and the error bound holds") {
  InstanceRng rng(71);
  for (int c = 0; c < 30; ++c) {
    const auto exact = random_measure(rng, 1 + rng.below(30), -3, 2);
    const auto source = step_source(exact, -3, 2);
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t n : {1, 2, 4, 8, 16, 32, 64, 128}) {
      const auto mu = discretize(source, n);
      CHECK(std::abs(total_mass(mu) - total_mass(exact)) <= 1e-12);
      const double error = w1_distance(exact, mu).value;
      CHECK(error <= discretization_error_bound(source, n) + 1e-12);
      CHECK(error <= previous + 1e-12);
      previous = error;
    }
  }
}
