#include "flatmetric/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace flatmetric {

namespace {

void check_interval(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw std::invalid_argument("interval must satisfy a < b");
  }
}

}  // namespace

IntervalMeasureSource uniform_source(double a, double b, double mass) {
  check_interval(a, b);
  if (!(mass >= 0.0) || !std::isfinite(mass)) throw std::invalid_argument("mass must be >= 0");
  return {[a, b, mass](double x) { return mass * (std::clamp(x, a, b) - a) / (b - a); }, a, b, mass};
}

IntervalMeasureSource step_source(const DiscreteMeasure& mu, double a, double b) {
  check_interval(a, b);
  for (const Atom& atom : mu.atoms()) {
    if (atom.position < a || atom.position > b) {
      throw std::invalid_argument("step source atom outside [a, b]");
    }
  }
  std::vector<Atom> atoms(mu.atoms().begin(), mu.atoms().end());
  auto cdf = [atoms = std::move(atoms)](double x) {
    double sum = 0.0;
    for (const Atom& atom : atoms) {
      if (atom.position >= x) break;
      sum += atom.mass;
    }
    return sum;
  };
  return {std::move(cdf), a, b, total_mass(mu)};
}

IntervalMeasureSource table_source(std::vector<std::pair<double, double>> knots) {
  if (knots.size() < 2) throw std::invalid_argument("cdf table needs at least two rows");
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i - 1].first < knots[i].first)) {
      throw std::invalid_argument("cdf table positions must be strictly increasing");
    }
    if (knots[i].second < knots[i - 1].second) throw InvalidCdf("cdf table decreases");
  }
  const double base = knots.front().second;
  for (auto& knot : knots) knot.second -= base;
  const double a = knots.front().first;
  const double b = knots.back().first;
  const double total = knots.back().second;
  auto cdf = [knots = std::move(knots)](double x) {
    if (x <= knots.front().first) return 0.0;
    if (x >= knots.back().first) return knots.back().second;
    const auto hi = std::upper_bound(knots.begin(), knots.end(), x,
                                     [](double v, const auto& knot) { return v < knot.first; });
    const auto lo = std::prev(hi);
    const double t = (x - lo->first) / (hi->first - lo->first);
    return lo->second + t * (hi->second - lo->second);
  };
  return {std::move(cdf), a, b, total};
}

DiscreteMeasure discretize(const IntervalMeasureSource& source, std::size_t n,
                           AtomPlacement placement) {
  if (n == 0) throw std::invalid_argument("number of cells must be positive");
  check_interval(source.a, source.b);
  if (!source.cdf) throw std::invalid_argument("source has no cdf");

  const double width = source.b - source.a;
  auto cell_end = [&](std::size_t i) {
    return i == n ? source.b : source.a + width * static_cast<double>(i) / static_cast<double>(n);
  };

  std::vector<Atom> atoms;
  atoms.reserve(n);
  double previous = source.cdf(source.a);
  if (!std::isfinite(previous) || std::abs(previous) > 0.0) {
    throw InvalidCdf("cdf(a) must be 0");
  }
  for (std::size_t i = 1; i <= n; ++i) {
    // The last cell is closed at b, so it takes everything that is left.
    const double current = i == n ? source.total : source.cdf(cell_end(i));
    if (!std::isfinite(current)) throw InvalidCdf("cdf is not finite");
    const double mass = current - previous;
    if (mass < 0.0) throw InvalidCdf("cdf decreases on cell " + std::to_string(i));
    const double position = placement == AtomPlacement::RightEndpoint
                                ? cell_end(i)
                                : 0.5 * (cell_end(i - 1) + cell_end(i));
    atoms.push_back({position, mass});
    previous = current;
  }
  return canonicalize(atoms);
}

double discretization_error_bound(const IntervalMeasureSource& source, std::size_t n) {
  if (n == 0) throw std::invalid_argument("number of cells must be positive");
  return (source.b - source.a) * source.total / static_cast<double>(n);
}

}  // namespace flatmetric
