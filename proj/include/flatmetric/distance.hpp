#ifndef FLATMETRIC_DISTANCE_HPP
#define FLATMETRIC_DISTANCE_HPP

#include <cmath>
#include <optional>
#include <string_view>

namespace flatmetric {

enum class Metric { W1, W1Normalized, W1Centralized, Flat, FlatUpper, Radon };

// Envelope implementation used by the flat metric.
enum class Backend { Array, Tree };

// A metric value together with what produced it. value is +inf only for
// Metric::W1 with unequal total masses.
struct DistanceValue {
  double value = 0.0;
  Metric metric = Metric::W1;
  std::optional<Backend> backend;

  bool is_finite() const { return std::isfinite(value); }
};

std::string_view to_string(Metric metric);
std::string_view to_string(Backend backend);

std::optional<Metric> parse_metric(std::string_view name);
std::optional<Backend> parse_backend(std::string_view name);

}  // namespace flatmetric

#endif  // FLATMETRIC_DISTANCE_HPP
