#ifndef FLATMETRIC_SELFTEST_HPP
#define FLATMETRIC_SELFTEST_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "flatmetric/measure.hpp"

namespace flatmetric {

struct SelftestConfig {
  std::size_t cap = 12;      // max atoms per random instance
  std::size_t cases = 500;
  double h = 1e-3;           // oracle grid step
  std::uint64_t seed = 1;
  // Test hook: applied to every flat value before it is checked.
  std::function<double(double)> perturb_flat;
};

struct Counterexample {
  std::string property;
  std::string detail;
  DiscreteMeasure mu;
  DiscreteMeasure nu;
};

struct SelftestReport {
  std::map<std::string, std::size_t> checks;  // property -> passed checks
  std::optional<Counterexample> failure;

  bool passed() const { return !failure.has_value(); }
};

/// Random instances with positions in [-1, 1] and masses in (0, 1], checked
/// against the grid oracle (flat with both backends, W1 on a rebalanced
/// copy, centralized W1), the monotone transport plan and the cheap
/// properties (backend agreement, symmetry, dominations). Stops at the
/// first failure.
SelftestReport run_selftest(const SelftestConfig& config);

}  // namespace flatmetric

#endif  // FLATMETRIC_SELFTEST_HPP
