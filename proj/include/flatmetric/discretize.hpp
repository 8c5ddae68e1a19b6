#ifndef FLATMETRIC_DISCRETIZE_HPP
#define FLATMETRIC_DISCRETIZE_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

#include "flatmetric/measure.hpp"

namespace flatmetric {

class InvalidCdf : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A finite measure on [a, b] given through cdf(x) = mu[a, x). cdf(a) must be
// 0 and the measure of [a, b] is `total`.
struct IntervalMeasureSource {
  std::function<double(double)> cdf;
  double a = 0.0;
  double b = 1.0;
  double total = 0.0;
};

enum class AtomPlacement { RightEndpoint, Midpoint };

// Uniform density of the given mass on [a, b].
IntervalMeasureSource uniform_source(double a, double b, double mass);

// The measure itself, read as a step cdf on [a, b]. Atoms outside [a, b]
// are rejected.
IntervalMeasureSource step_source(const DiscreteMeasure& mu, double a, double b);

// Piecewise-linear cdf through (x_i, c_i), x strictly increasing. Values are
// shifted so the cdf starts at 0; the interval is [x_0, x_last].
IntervalMeasureSource table_source(std::vector<std::pair<double, double>> knots);

/// Splits [a, b] into n equal cells [t_{i-1}, t_i) (the last one closed at b)
/// and puts each cell's mass on one atom at its right end t_i, or at its
/// midpoint with AtomPlacement::Midpoint. Total mass is preserved and, for
/// right endpoints, W1(mu, result) <= (b - a) * total / n.
///
/// Throws std::invalid_argument for n == 0 or a degenerate interval and
/// InvalidCdf when a sampled cell mass is negative or the cdf is not finite.
DiscreteMeasure discretize(const IntervalMeasureSource& source, std::size_t n,
                           AtomPlacement placement = AtomPlacement::RightEndpoint);

// (b - a) * total / n
double discretization_error_bound(const IntervalMeasureSource& source, std::size_t n);

}  // namespace flatmetric

#endif  // FLATMETRIC_DISCRETIZE_HPP
