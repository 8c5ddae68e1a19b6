#include "flatmetric/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

#include "flatmetric/wasserstein.hpp"

namespace flatmetric::oracle {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Absorbs representation error when a ratio should be an exact integer.
constexpr double kIndexSlack = 1e-9;

enum class Rounding { Down, Nearest, Up };

long window_radius(double width, double h, Rounding rounding) {
  const double steps = width / h;
  switch (rounding) {
    case Rounding::Down:
      return static_cast<long>(std::floor(steps + kIndexSlack));
    case Rounding::Up:
      return static_cast<long>(std::ceil(steps - kIndexSlack));
    case Rounding::Nearest:
      return static_cast<long>(std::floor(steps + 0.5));
  }
  return 0;
}

// out[i] = max_{|j - i| <= radius} in[j]
void sliding_max(const std::vector<double>& in, long radius, std::vector<double>& out) {
  const long size = static_cast<long>(in.size());
  out.assign(in.size(), kNegInf);
  if (radius >= size) {
    const double best = *std::max_element(in.begin(), in.end());
    std::fill(out.begin(), out.end(), best);
    return;
  }
  std::deque<long> window;  // indices with decreasing values
  long next = 0;
  for (long i = 0; i < size; ++i) {
    for (; next < size && next <= i + radius; ++next) {
      while (!window.empty() && in[window.back()] <= in[next]) window.pop_back();
      window.push_back(next);
    }
    while (window.front() < i - radius) window.pop_front();
    out[i] = in[window.front()];
  }
}

struct Stage {
  double position;
  double mass;
  bool anchored;
};

struct Grid {
  long first = 0;  // value of index 0 is first * h
  long count = 0;
  long anchor_lo = 0;  // index range allowed at the anchor
  long anchor_hi = -1;
};

double run_dp(const std::vector<Stage>& stages, const Grid& grid, double h, double lipschitz,
              double sign, Rounding rounding) {
  std::vector<double> values(static_cast<std::size_t>(grid.count));
  std::vector<double> best(values.size());
  for (std::size_t k = 0; k < stages.size(); ++k) {
    if (k > 0) {
      const double gap = lipschitz * (stages[k].position - stages[k - 1].position);
      sliding_max(values, window_radius(gap, h, rounding), best);
    } else {
      std::fill(best.begin(), best.end(), 0.0);
    }
    for (long i = 0; i < grid.count; ++i) {
      const bool allowed = !stages[k].anchored || (i >= grid.anchor_lo && i <= grid.anchor_hi);
      const double f = static_cast<double>(grid.first + i) * h;
      values[i] = allowed && best[i] != kNegInf ? best[i] + sign * stages[k].mass * f : kNegInf;
    }
  }
  return *std::max_element(values.begin(), values.end());
}

}  // namespace

DualConstraintSpec DualConstraintSpec::flat() {
  DualConstraintSpec spec;
  spec.bound_all = 1.0;
  return spec;
}

DualConstraintSpec DualConstraintSpec::wasserstein(double anchor_position) {
  DualConstraintSpec spec;
  spec.anchor = Anchor{anchor_position, 0.0, 0.0};
  return spec;
}

DualConstraintSpec DualConstraintSpec::centralized() {
  DualConstraintSpec spec;
  spec.anchor = Anchor{0.0, -1.0, 1.0};
  return spec;
}

OracleResult dual_lp_oracle(const SignedAtomList& delta, const DualConstraintSpec& spec, double h,
                            std::size_t cap) {
  if (!(h > 0.0)) throw std::invalid_argument("grid step must be positive");
  if (!spec.bound_all && !spec.anchor) {
    throw std::invalid_argument("dual program needs a bound or an anchor");
  }
  if (delta.size() > cap) {
    throw InstanceTooLarge("oracle instance has " + std::to_string(delta.size()) +
                           " atoms, cap is " + std::to_string(cap));
  }
  if (delta.empty()) return {};

  std::vector<Stage> stages;
  double abs_mass = 0.0;
  for (const Atom& atom : delta.atoms()) {
    stages.push_back({atom.position, atom.mass, false});
    abs_mass += std::abs(atom.mass);
  }
  if (spec.anchor) {
    const double x = spec.anchor->position;
    auto it = std::lower_bound(stages.begin(), stages.end(), x,
                               [](const Stage& s, double pos) { return s.position < pos; });
    if (it == stages.end() || it->position != x) it = stages.insert(it, Stage{x, 0.0, false});
    it->anchored = true;
  }

  double lo = 0.0;
  double hi = 0.0;
  if (spec.bound_all) {
    lo = -*spec.bound_all;
    hi = *spec.bound_all;
  } else {
    double reach = 0.0;
    for (const Stage& s : stages) reach = std::max(reach, std::abs(s.position - spec.anchor->position));
    reach = spec.lipschitz_constant * reach + static_cast<double>(stages.size()) * h;
    lo = spec.anchor->lo - reach;
    hi = spec.anchor->hi + reach;
  }

  Grid grid;
  grid.first = static_cast<long>(std::ceil(lo / h - kIndexSlack));
  grid.count = static_cast<long>(std::floor(hi / h + kIndexSlack)) - grid.first + 1;
  if (spec.anchor) {
    grid.anchor_lo =
        std::max(0L, static_cast<long>(std::ceil(spec.anchor->lo / h - kIndexSlack)) - grid.first);
    grid.anchor_hi = std::min(grid.count - 1,
                              static_cast<long>(std::floor(spec.anchor->hi / h + kIndexSlack)) -
                                  grid.first);
  }
  if (grid.count <= 0 || (spec.anchor && grid.anchor_lo > grid.anchor_hi)) {
    throw std::invalid_argument("constraint set contains no grid point");
  }

  auto solve = [&](Rounding rounding) {
    return std::max(run_dp(stages, grid, h, spec.lipschitz_constant, 1.0, rounding),
                    run_dp(stages, grid, h, spec.lipschitz_constant, -1.0, rounding));
  };
  OracleResult result;
  result.estimate = solve(Rounding::Nearest);
  result.lower = solve(Rounding::Down);
  result.upper = solve(Rounding::Up);
  result.error_bound = h * abs_mass;
  return result;
}

TransportPlan transport_oracle_w1(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  if (std::abs(total_mass(mu) - total_mass(nu)) > mass_tolerance(mu, nu)) {
    throw MassMismatch("monotone coupling needs equal total masses");
  }
  TransportPlan plan;
  const auto src = mu.atoms();
  const auto dst = nu.atoms();
  std::size_t i = 0;
  std::size_t j = 0;
  double left_src = src.empty() ? 0.0 : src[0].mass;
  double left_dst = dst.empty() ? 0.0 : dst[0].mass;
  while (i < src.size() && j < dst.size()) {
    const double flow = std::min(left_src, left_dst);
    if (flow > 0.0) {
      plan.flows.push_back({src[i].position, dst[j].position, flow});
      plan.cost += flow * std::abs(src[i].position - dst[j].position);
    }
    left_src -= flow;
    left_dst -= flow;
    if (left_src <= 0.0 && ++i < src.size()) left_src = src[i].mass;
    if (left_dst <= 0.0 && ++j < dst.size()) left_dst = dst[j].mass;
  }
  return plan;
}

std::vector<std::vector<double>> flat_prefix_values_on_grid(const SignedAtomList& delta,
                                                            std::size_t intervals) {
  if (intervals == 0) throw std::invalid_argument("grid needs at least one interval");
  const double h = 2.0 / static_cast<double>(intervals);
  std::vector<double> grid(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) {
    grid[i] = -1.0 + static_cast<double>(i) * h;
  }

  std::vector<std::vector<double>> prefixes;
  std::vector<double> values(grid.size(), 0.0);
  std::vector<double> best(grid.size(), 0.0);
  const auto atoms = delta.atoms();
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (k > 0) {
      sliding_max(values, window_radius(atoms[k].position - atoms[k - 1].position, h,
                                        Rounding::Nearest),
                  best);
    }
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = best[i] + atoms[k].mass * grid[i];
    prefixes.push_back(values);
  }
  return prefixes;
}

}  // namespace flatmetric::oracle
