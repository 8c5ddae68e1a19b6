#ifndef FLATMETRIC_ORACLE_HPP
#define FLATMETRIC_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "flatmetric/measure.hpp"

// Brute-force reference implementations used to verify the closed forms and
// the envelope recursion. Deliberately simple and slow; not for production
// inputs.
namespace flatmetric::oracle {

class InstanceTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

class MassMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Constraints of the dual program max sum_k a_k f_k subject to
// |f_k - f_{k-1}| <= L |x_k - x_{k-1}| plus the optional bounds below.
struct DualConstraintSpec {
  struct Anchor {
    double position = 0.0;
    double lo = 0.0;
    double hi = 0.0;
  };

  std::optional<double> bound_all;  // |f_k| <= B for every k
  std::optional<Anchor> anchor;     // f(position) in [lo, hi]
  double lipschitz_constant = 1.0;

  // |f| <= 1: the flat metric.
  static DualConstraintSpec flat();
  // f(position) = 0, no bound: W1. Meaningful only for balanced differences.
  static DualConstraintSpec wasserstein(double anchor_position);
  // f(0) in [-1, 1]: the centralized W1.
  static DualConstraintSpec centralized();
};

struct OracleResult {
  double estimate = 0.0;     // grid DP with window slack h/2
  double lower = 0.0;        // grid DP with windows rounded down: a feasible value
  double upper = 0.0;        // grid DP with windows rounded up: a relaxation
  double error_bound = 0.0;  // h * sum |a_k|
};

inline constexpr std::size_t kDefaultOracleCap = 16;

/// Maximizes |sum a_k f_k| over grid-valued f by dynamic programming over
/// the atoms, with f_k restricted to multiples of h.
///
/// The constraint matrix is a difference system, so once every right-hand
/// side is a multiple of h the grid optimum equals the continuous optimum.
/// Rounding the gaps down therefore yields a value <= the true optimum and
/// rounding them up a value >= it; `estimate` rounds to nearest. Bounds and
/// anchor intervals should be multiples of h for the bracket to be exact.
///
/// Throws InstanceTooLarge when delta has more than `cap` atoms and
/// std::invalid_argument for h <= 0 or a spec with neither bound nor anchor.
OracleResult dual_lp_oracle(const SignedAtomList& delta, const DualConstraintSpec& spec, double h,
                            std::size_t cap = kDefaultOracleCap);

struct Flow {
  double from = 0.0;
  double to = 0.0;
  double mass = 0.0;
};

struct TransportPlan {
  double cost = 0.0;
  std::vector<Flow> flows;
};

// Monotone (north-west corner) coupling of two measures of equal mass; the
// optimal plan for cost |x - y| on the line. Throws MassMismatch when the
// masses differ by more than mass_tolerance().
TransportPlan transport_oracle_w1(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

/// Values of every prefix value function F^m of the flat recursion on the
/// grid x_i = -1 + 2i/intervals, i = 0..intervals.
///
/// Windows are rounded to whole grid steps, so the result is exact when all
/// gaps between consecutive atoms are multiples of the grid step and an
/// approximation otherwise. Entry [m-1][i] is F^m(x_i).
std::vector<std::vector<double>> flat_prefix_values_on_grid(const SignedAtomList& delta,
                                                            std::size_t intervals);

}  // namespace flatmetric::oracle

#endif  // FLATMETRIC_ORACLE_HPP
