#include "flatmetric/selftest.hpp"

#include <algorithm>
#include <cmath>

#include "flatmetric/bench.hpp"
#include "flatmetric/flat.hpp"
#include "flatmetric/measure_io.hpp"
#include "flatmetric/oracle.hpp"
#include "flatmetric/wasserstein.hpp"

namespace flatmetric {

namespace {

constexpr double kOracleSlack = 1e-6;
constexpr double kRelative = 1e-9;

class Checker {
 public:
  Checker(SelftestReport& report, const MeasurePair& pair) : report_(report), pair_(pair) {}

  // Returns false (and records the counterexample) when `ok` is false.
  bool expect(bool ok, const std::string& property, const std::string& detail) {
    if (report_.failure) return false;
    if (!ok) {
      report_.failure = Counterexample{property, detail, pair_.mu, pair_.nu};
      return false;
    }
    ++report_.checks[property];
    return true;
  }

  bool expect_oracle(double value, const oracle::OracleResult& ref, const std::string& property) {
    const bool close = std::abs(value - ref.estimate) <= ref.error_bound + kOracleSlack;
    const bool bracketed = value >= ref.lower - kOracleSlack && value <= ref.upper + kOracleSlack;
    return expect(close && bracketed, property,
                  "value " + format_real(value) + ", oracle " + format_real(ref.estimate) + " in [" +
                      format_real(ref.lower) + ", " + format_real(ref.upper) + "] +- " +
                      format_real(ref.error_bound));
  }

 private:
  SelftestReport& report_;
  const MeasurePair& pair_;
};

bool close_relative(double a, double b) {
  return std::abs(a - b) <= kRelative * (1.0 + std::max(std::abs(a), std::abs(b)));
}

}  // namespace

SelftestReport run_selftest(const SelftestConfig& config) {
  SelftestReport report;
  if (config.cap == 0 || config.cases == 0) return report;

  InstanceRng rng(config.seed);
  auto flat_value = [&](const DiscreteMeasure& mu, const DiscreteMeasure& nu, Backend backend) {
    const double value = flat_distance(mu, nu, backend).value;
    return config.perturb_flat ? config.perturb_flat(value) : value;
  };

  for (std::size_t c = 0; c < config.cases && !report.failure; ++c) {
    const std::size_t n = 1 + rng.below(config.cap);
    const MeasurePair pair = generate_instance(n, Distribution::Clustered, rng);
    const DiscreteMeasure& mu = pair.mu;
    const DiscreteMeasure& nu = pair.nu;
    const SignedAtomList delta = difference(mu, nu);
    Checker check(report, pair);

    const double flat_array = flat_value(mu, nu, Backend::Array);
    const double flat_tree = flat_value(mu, nu, Backend::Tree);
    const auto flat_ref = oracle::dual_lp_oracle(delta, oracle::DualConstraintSpec::flat(), config.h);
    check.expect_oracle(flat_array, flat_ref, "flat(array) vs oracle");
    check.expect_oracle(flat_tree, flat_ref, "flat(tree) vs oracle");
    check.expect(close_relative(flat_array, flat_tree), "flat array == tree",
                 format_real(flat_array) + " vs " + format_real(flat_tree));
    check.expect(close_relative(flat_tree, flat_value(nu, mu, Backend::Tree)), "flat symmetry",
                 "F(mu,nu) != F(nu,mu)");

    const auto central_ref =
        oracle::dual_lp_oracle(delta, oracle::DualConstraintSpec::centralized(), config.h);
    check.expect_oracle(centralized_w1(mu, nu).value, central_ref, "centralized vs oracle");

    const double upper = flat_upper_bound(mu, nu).value;
    const double radon = radon_distance(mu, nu);
    check.expect(flat_tree <= upper * (1.0 + kRelative) + kRelative, "flat <= flat-upper",
                 format_real(flat_tree) + " > " + format_real(upper));
    check.expect(flat_tree <= radon * (1.0 + kRelative) + kRelative, "flat <= radon",
                 format_real(flat_tree) + " > " + format_real(radon));

    // Rebalance nu to mu's mass for the W1 checks.
    if (!mu.empty() && !nu.empty()) {
      const DiscreteMeasure balanced = scale_mass(nu, total_mass(mu) / total_mass(nu));
      const SignedAtomList balanced_delta = difference(mu, balanced);
      const double w1 = w1_distance(mu, balanced).value;
      const double anchor = balanced_delta.empty() ? 0.0 : balanced_delta.atoms().front().position;
      check.expect_oracle(
          w1,
          oracle::dual_lp_oracle(balanced_delta, oracle::DualConstraintSpec::wasserstein(anchor),
                                 config.h),
          "w1 vs oracle");
      const double transport = oracle::transport_oracle_w1(mu, balanced).cost;
      check.expect(close_relative(w1, transport), "w1 vs transport",
                   format_real(w1) + " vs " + format_real(transport));
      check.expect(flat_value(mu, balanced, Backend::Tree) <= w1 * (1.0 + kRelative) + kRelative,
                   "flat <= w1", "equal masses");
    }
  }
  return report;
}

}  // namespace flatmetric
