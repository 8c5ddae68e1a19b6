#ifndef FLATMETRIC_FLAT_HPP
#define FLATMETRIC_FLAT_HPP

#include <cstddef>
#include <functional>
#include <string>

#include "flatmetric/distance.hpp"
#include "flatmetric/envelope.hpp"
#include "flatmetric/measure.hpp"

namespace flatmetric {

// Called after atom `iteration` (1-based) has been folded in, with the
// value function of the prefix processed so far.
using EnvelopeTrace = std::function<void(std::size_t iteration, const ConcaveEnvelope&)>;

struct FlatOptions {
  Backend backend = Backend::Tree;
  // Observes the envelope after every atom. Forces a snapshot per atom, so
  // only meant for small inputs.
  EnvelopeTrace trace;
  // Validates the envelope structure after every atom and throws
  // std::logic_error on violation.
  bool check_invariants = false;
};

/// Flat (bounded Lipschitz) distance: the supremum of |sum a_k f(x_k)| over
/// test functions with |f| <= 1 and Lip(f) <= 1, where mu - nu = sum a_k delta_{x_k}.
///
/// Runs the dynamic program F^k(x) = a_k x + sup_{|y-x| <= d_k, |y| <= 1} F^{k-1}(y)
/// over the atoms of the difference in position order and returns
/// sup_{|x| <= 1} F^n(x). The signed supremum is used: the constraint set is
/// symmetric under f -> -f, so it equals the supremum of the absolute value.
/// Cost is O(n^2) with Backend::Array and O(n log n) with Backend::Tree.
DistanceValue flat_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                            const FlatOptions& options = {});

DistanceValue flat_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu, Backend backend);

double flat_distance(const SignedAtomList& delta, const FlatOptions& options = {});

// `iter k: <ConcaveEnvelope::to_string()>`
std::string format_trace_line(std::size_t iteration, const ConcaveEnvelope& env);

}  // namespace flatmetric

#endif  // FLATMETRIC_FLAT_HPP
