#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "flatmetric/measure.hpp"
#include "flatmetric/measure_io.hpp"
#include "support.hpp"

using namespace flatmetric;
using flatmetric::testing::close_rel;
using flatmetric::testing::random_measure;

TEST_CASE("canonicalize sorts, merges and drops zeros") {
  const auto mu = canonicalize({{1, 0.5}, {0, 1}, {1, 0.5}});
  REQUIRE(mu.size() == 2);
  CHECK(mu.atoms()[0] == Atom{0, 1});
  CHECK(mu.atoms()[1] == Atom{1, 1});

  CHECK(canonicalize({{0, 0}}).empty());
  CHECK(canonicalize(std::vector<Atom>{}).empty());
}

TEST_CASE("canonicalize rejects bad input") {
  CHECK_THROWS_AS(canonicalize({{0.3, 2}, {0.3, -1}}), NegativeMass);
  CHECK_THROWS_AS(canonicalize({{std::nan(""), 1}}), NonFiniteInput);
  CHECK_THROWS_AS(canonicalize({{0, std::numeric_limits<double>::infinity()}}), NonFiniteInput);
}

TEST_CASE("canonicalize is idempotent") {
  InstanceRng rng(7);
  for (int c = 0; c < 50; ++c) {
    std::vector<Atom> raw;
    for (int i = 0; i < 20; ++i) {
      // Few distinct positions so that merges happen.
      raw.push_back({static_cast<double>(rng.below(6)) - 2.0, rng.below(3) == 0 ? 0.0 : rng.mass()});
    }
    const auto once = canonicalize(raw);
    const auto twice = canonicalize(once.atoms());
    CHECK(once == twice);
    for (std::size_t i = 1; i < once.size(); ++i) {
      CHECK(once.atoms()[i - 1].position < once.atoms()[i].position);
    }
  }
}

TEST_CASE("difference") {
  const auto d0 = canonicalize({{0, 1}});
  CHECK(difference(d0, d0).empty());

  const auto diff = difference(canonicalize({{0, 2}}), canonicalize({{1, 3}}));
  REQUIRE(diff.size() == 2);
  CHECK(diff.atoms()[0] == Atom{0, 2});
  CHECK(diff.atoms()[1] == Atom{1, -3});

  const auto overlap = difference(canonicalize({{0, 1}, {1, 1}}), canonicalize({{1, 2}}));
  REQUIRE(overlap.size() == 2);
  CHECK(overlap.atoms()[0] == Atom{0, 1});
  CHECK(overlap.atoms()[1] == Atom{1, -1});
}

TEST_CASE("difference is antisymmetric") {
  InstanceRng rng(11);
  for (int c = 0; c < 50; ++c) {
    const auto mu = random_measure(rng, 1 + rng.below(10));
    const auto nu = random_measure(rng, 1 + rng.below(10));
    CHECK(difference(mu, nu) == difference(nu, mu).negated());
  }
}

TEST_CASE("from_sorted validates order and drops zeros") {
  const auto list = SignedAtomList::from_sorted({{0, 1}, {1, 0}, {2, -1}});
  CHECK(list.size() == 2);
  CHECK_THROWS_AS(SignedAtomList::from_sorted({{1, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedAtomList::from_sorted({{0, 1}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("total_mass") {
  CHECK(total_mass(canonicalize({{0.7, 2}})) == 2);
  CHECK(total_mass(DiscreteMeasure{}) == 0);
  CHECK(total_mass(canonicalize({{0, 1}, {5, 3}})) == 4);
}

TEST_CASE("radon_distance examples") {
  CHECK(radon_distance(canonicalize({{0, 2}}), canonicalize({{1, 3}})) == 5);
  const auto mu = canonicalize({{0, 1}, {2, 0.5}});
  CHECK(radon_distance(mu, mu) == 0);
  CHECK(radon_distance(canonicalize({{0, 2}}), canonicalize({{0, 3}})) == 1);
}

TEST_CASE("radon_distance is a metric, scale equivariant and translation invariant") {
  InstanceRng rng(13);
  for (int c = 0; c < 100; ++c) {
    const auto a = random_measure(rng, rng.below(8));
    const auto b = random_measure(rng, rng.below(8));
    const auto e = random_measure(rng, rng.below(8));
    CHECK(radon_distance(a, b) == radon_distance(b, a));
    CHECK(radon_distance(a, a) == 0);
    if (!(a == b)) CHECK(radon_distance(a, b) > 0);
    CHECK(radon_distance(a, e) <= radon_distance(a, b) + radon_distance(b, e) + 1e-12);

    const double lambda = 0.1 + 3 * rng.uniform01();
    CHECK(close_rel(radon_distance(scale_mass(a, lambda), scale_mass(b, lambda)),
                    lambda * radon_distance(a, b)));
    // Translation can merge nothing new here: positions stay distinct.
    const double t = rng.uniform(-5, 5);
    CHECK(close_rel(radon_distance(translate(a, t), translate(b, t)), radon_distance(a, b)));
  }
}

TEST_CASE("translate and scale_mass") {
  CHECK(translate(canonicalize({{0, 1}}), 1) == canonicalize({{1, 1}}));
  CHECK(scale_mass(canonicalize({{0, 2}}), 0.5) == canonicalize({{0, 1}}));
  CHECK(scale_mass(canonicalize({{0, 2}, {1, 1}}), 0).empty());
  CHECK_THROWS(scale_mass(canonicalize({{0, 2}}), -1));
}

TEST_CASE("measure text format") {
  std::istringstream in("# comment\n1 0.5\n\n  0 1\n1 0.5\n");
  const auto mu = parse_measure(in);
  CHECK(mu == canonicalize({{0, 1}, {1, 1}}));

  std::ostringstream out;
  write_measure(out, canonicalize({{0.1, 1.0 / 3.0}}));
  std::istringstream back(out.str());
  CHECK(parse_measure(back) == canonicalize({{0.1, 1.0 / 3.0}}));

  CHECK(format_real(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_real(3) == "3");
}

TEST_CASE("parse errors carry the line number") {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      parse_measure(in, "input");
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("0 1\nabc 1\n") == 2);
  CHECK(line_of("0 1\n1\n") == 2);
  CHECK(line_of("0 1\n1 2 3\n") == 2);
  CHECK(line_of("# x\n0 -1\n") == 2);
  CHECK(line_of("0 nan\n") == 1);
  CHECK_THROWS_AS(read_measure_file("/nonexistent/measure.txt"), ParseError);
}
