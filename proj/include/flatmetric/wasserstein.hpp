#ifndef FLATMETRIC_WASSERSTEIN_HPP
#define FLATMETRIC_WASSERSTEIN_HPP

#include "flatmetric/distance.hpp"
#include "flatmetric/measure.hpp"

namespace flatmetric {

// Relative tolerance on the running mass balance below which two measures
// are treated as having equal total mass.
inline constexpr double kMassTolerance = 1e-12;

// kMassTolerance * (|mu| + |nu| + 1).
double mass_tolerance(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

// sum_{i<n} (x_{i+1} - x_i) * |a_1 + ... + a_i|, the integral of the absolute
// CDF difference. Ignores the final partial sum, so it is W1 only when the
// signed masses sum to zero.
double partial_sum_cost(const SignedAtomList& delta);

// 1-Wasserstein distance; +inf when the total masses differ by more than
// mass_tolerance().
DistanceValue w1_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

// min(|mu| + |nu|, ||mu| - |nu|| + W1(mu / |mu|, nu / |nu|)). If either
// measure is empty the second branch is undefined and |mu| + |nu| is
// returned.
DistanceValue normalized_w1(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

// Supremum over 1-Lipschitz f with f(0) in [-1, 1]. Always finite; equals
// w1_distance for equal masses. Not translation invariant.
DistanceValue centralized_w1(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

// Linear-time upper bound of the flat distance: the mass gap plus W1 between
// the lighter measure and the heavier one rescaled to the same mass. With an
// empty measure the transport term is 0.
DistanceValue flat_upper_bound(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

}  // namespace flatmetric

#endif  // FLATMETRIC_WASSERSTEIN_HPP
