#include <cmath>

#include "doctest.h"
#include "flatmetric/oracle.hpp"
#include "flatmetric/wasserstein.hpp"
#include "support.hpp"

using namespace flatmetric;
using namespace flatmetric::oracle;
using flatmetric::testing::random_measure;
using flatmetric::testing::rebalance;

TEST_CASE("dual oracle examples") {
  const auto flat = dual_lp_oracle(difference(canonicalize({{0, 2}}), canonicalize({{1, 3}})),
                                   DualConstraintSpec::flat(), 1e-3);
  CHECK(std::abs(flat.estimate - 3) <= flat.error_bound);
  CHECK(flat.lower <= 3 + 1e-12);
  CHECK(flat.upper >= 3 - 1e-12);
  CHECK(flat.error_bound == doctest::Approx(5e-3));

  const auto empty = dual_lp_oracle(SignedAtomList{}, DualConstraintSpec::flat(), 1e-3);
  CHECK(empty.estimate == 0);
  CHECK(empty.error_bound == 0);

  const auto delta = difference(canonicalize({{0, 1}, {1, 1}}), canonicalize({{0.5, 2}}));
  const auto w1 = dual_lp_oracle(delta, DualConstraintSpec::wasserstein(0), 1e-3);
  CHECK(std::abs(w1.estimate - 1) <= w1.error_bound);

  const auto far = dual_lp_oracle(difference(canonicalize({{0, 1}}), canonicalize({{3, 1}})),
                                  DualConstraintSpec::flat(), 1e-3);
  CHECK(far.estimate == doctest::Approx(2).epsilon(1e-9));
}

TEST_CASE("dual oracle rejects bad input") {
  SignedAtomList big;
  {
    std::vector<Atom> atoms;
    for (int i = 0; i < 17; ++i) atoms.push_back({static_cast<double>(i), i % 2 ? 1.0 : -1.0});
    big = SignedAtomList::from_sorted(atoms);
  }
  CHECK_THROWS_AS(dual_lp_oracle(big, DualConstraintSpec::flat(), 1e-3), InstanceTooLarge);
  CHECK_NOTHROW(dual_lp_oracle(big, DualConstraintSpec::flat(), 1e-2, 17));
  CHECK_THROWS_AS(dual_lp_oracle(SignedAtomList{}, DualConstraintSpec::flat(), 0), std::invalid_argument);
  CHECK_THROWS_AS(dual_lp_oracle(SignedAtomList{}, DualConstraintSpec{}, 1e-3), std::invalid_argument);
}

TEST_CASE("transport oracle examples") {
  const auto unit = transport_oracle_w1(canonicalize({{0, 1}}), canonicalize({{1, 1}}));
  CHECK(unit.cost == 1);
  REQUIRE(unit.flows.size() == 1);
  CHECK(unit.flows[0].from == 0);
  CHECK(unit.flows[0].to == 1);
  CHECK(unit.flows[0].mass == 1);

  const auto split = transport_oracle_w1(canonicalize({{0, 2}}), canonicalize({{-1, 1}, {1, 1}}));
  CHECK(split.cost == 2);
  CHECK(split.flows.size() == 2);

  const auto mu = canonicalize({{0, 1}, {2, 3}});
  const auto same = transport_oracle_w1(mu, mu);
  CHECK(same.cost == 0);
  for (const Flow& f : same.flows) CHECK(f.from == f.to);

  CHECK_THROWS_AS(transport_oracle_w1(canonicalize({{0, 2}}), canonicalize({{1, 3}})), MassMismatch);
}

TEST_CASE("transport plan moves all mass") {
  InstanceRng rng(61);
  for (int c = 0; c < 50; ++c) {
    const auto mu = random_measure(rng, 1 + rng.below(20));
    const auto nu = rebalance(random_measure(rng, 1 + rng.below(20)), mu);
    const auto plan = transport_oracle_w1(mu, nu);
    double moved = 0;
    for (const Flow& f : plan.flows) moved += f.mass;
    CHECK(moved == doctest::Approx(total_mass(mu)).epsilon(1e-12));
    CHECK(plan.cost == doctest::Approx(w1_distance(mu, nu).value).epsilon(1e-9));
  }
}

TEST_CASE("oracle error does not grow as the grid is refined") {
  InstanceRng rng(67);
  int worse = 0;
  for (int c = 0; c < 40; ++c) {
    const auto mu = random_measure(rng, 1 + rng.below(6));
    const auto nu = rebalance(random_measure(rng, 1 + rng.below(6)), mu);
    const auto delta = difference(mu, nu);
    const double exact = w1_distance(mu, nu).value;
    const auto spec = DualConstraintSpec::wasserstein(delta.atoms().front().position);
    const auto coarse = dual_lp_oracle(delta, spec, 1e-2);
    const auto fine = dual_lp_oracle(delta, spec, 1e-3);
    CHECK(coarse.lower <= exact + 1e-9);
    CHECK(coarse.upper >= exact - 1e-9);
    CHECK(fine.upper - fine.lower <= coarse.upper - coarse.lower + 1e-9);
    if (std::abs(fine.estimate - exact) > std::abs(coarse.estimate - exact) + 1e-9) ++worse;
  }
  CHECK(worse <= 4);
}

TEST_CASE("grid prefixes of the flat recursion") {
  // (2 delta_0, 3 delta_1): F^1 = 2x and F^2(x) = -3x + 2 min(1, x + 1).
  const auto delta = difference(canonicalize({{0, 2}}), canonicalize({{1, 3}}));
  const auto values = flat_prefix_values_on_grid(delta, 4);
  REQUIRE(values.size() == 2);
  const std::vector<double> first{-2, -1, 0, 1, 2};
  const std::vector<double> second{3, 2.5, 2, 0.5, -1};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(values[0][i] == doctest::Approx(first[i]));
    CHECK(values[1][i] == doctest::Approx(second[i]));
  }
  CHECK_THROWS(flat_prefix_values_on_grid(delta, 0));
}
