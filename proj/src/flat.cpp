#include "flatmetric/flat.hpp"

#include <algorithm>
#include <stdexcept>

namespace flatmetric {

namespace {

template <EnvelopeBackend Envelope>
double run_recursion(const SignedAtomList& delta, const FlatOptions& options) {
  const auto atoms = delta.atoms();
  Envelope env;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (k > 0) {
      env.max_filter(atoms[k].position - atoms[k - 1].position);
      env.clip_to_unit();
    }
    env.add_linear(atoms[k].mass);

    if (options.check_invariants || options.trace) {
      const ConcaveEnvelope shape = env.snapshot();
      if (options.check_invariants) {
        if (std::string why = shape.invariant_violation(); !why.empty()) {
          throw std::logic_error("envelope invariant broken after atom " + std::to_string(k + 1) +
                                 ": " + why);
        }
        if (shape.segment_count() > k + 2) {
          throw std::logic_error("envelope has " + std::to_string(shape.segment_count()) +
                                 " segments after atom " + std::to_string(k + 1));
        }
      }
      if (options.trace) options.trace(k + 1, shape);
    }
  }
  // The zero test function is always admissible.
  return std::max(0.0, env.supremum());
}

}  // namespace

double flat_distance(const SignedAtomList& delta, const FlatOptions& options) {
  if (delta.empty()) return 0.0;
  switch (options.backend) {
    case Backend::Array:
      return run_recursion<ArrayEnvelope>(delta, options);
    case Backend::Tree:
      return run_recursion<TreeEnvelope>(delta, options);
  }
  throw std::invalid_argument("unknown backend");
}

DistanceValue flat_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                            const FlatOptions& options) {
  return {flat_distance(difference(mu, nu), options), Metric::Flat, options.backend};
}

DistanceValue flat_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu, Backend backend) {
  FlatOptions options;
  options.backend = backend;
  return flat_distance(mu, nu, options);
}

std::string format_trace_line(std::size_t iteration, const ConcaveEnvelope& env) {
  return "iter " + std::to_string(iteration) + ": " + env.to_string();
}

}  // namespace flatmetric
