#ifndef FLATMETRIC_TESTS_SUPPORT_HPP
#define FLATMETRIC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "flatmetric/bench.hpp"
#include "flatmetric/measure.hpp"

namespace flatmetric::testing {

inline bool close_rel(double a, double b, double tol = 1e-9) {
  if (a == b) return true;
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

// n atoms, positions uniform on [lo, hi], masses in (0, 1].
inline DiscreteMeasure random_measure(InstanceRng& rng, std::size_t n, double lo = -1.0,
                                      double hi = 1.0) {
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < n; ++i) atoms.push_back({rng.uniform(lo, hi), rng.mass()});
  return canonicalize(atoms);
}

// Same masses, rescaled so that both measures weigh the same.
inline DiscreteMeasure rebalance(const DiscreteMeasure& nu, const DiscreteMeasure& target) {
  return scale_mass(nu, total_mass(target) / total_mass(nu));
}

}  // namespace flatmetric::testing

#endif  // FLATMETRIC_TESTS_SUPPORT_HPP
