#include "flatmetric/distance.hpp"

#include <array>
#include <utility>

namespace flatmetric {

namespace {

constexpr std::array<std::pair<Metric, std::string_view>, 6> kMetricNames{{
    {Metric::W1, "w1"},
    {Metric::W1Normalized, "w1-normalized"},
    {Metric::W1Centralized, "w1-centralized"},
    {Metric::Flat, "flat"},
    {Metric::FlatUpper, "flat-upper"},
    {Metric::Radon, "radon"},
}};

}  // namespace

std::string_view to_string(Metric metric) {
  for (const auto& [m, name] : kMetricNames) {
    if (m == metric) return name;
  }
  return "unknown";
}

std::string_view to_string(Backend backend) {
  return backend == Backend::Array ? "array" : "tree";
}

std::optional<Metric> parse_metric(std::string_view name) {
  for (const auto& [m, n] : kMetricNames) {
    if (n == name) return m;
  }
  return std::nullopt;
}

std::optional<Backend> parse_backend(std::string_view name) {
  if (name == "array") return Backend::Array;
  if (name == "tree") return Backend::Tree;
  return std::nullopt;
}

}  // namespace flatmetric
