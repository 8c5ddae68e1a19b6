#include "flatmetric/wasserstein.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace flatmetric {

double mass_tolerance(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  return kMassTolerance * (total_mass(mu) + total_mass(nu) + 1.0);
}

double partial_sum_cost(const SignedAtomList& delta) {
  const auto atoms = delta.atoms();
  double distance = 0.0;
  double partial = 0.0;
  for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
    partial += atoms[i].mass;
    distance += (atoms[i + 1].position - atoms[i].position) * std::abs(partial);
  }
  return distance;
}

DistanceValue w1_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  const SignedAtomList delta = difference(mu, nu);
  double balance = 0.0;
  for (const Atom& atom : delta.atoms()) balance += atom.mass;
  if (std::abs(balance) > mass_tolerance(mu, nu)) {
    return {std::numeric_limits<double>::infinity(), Metric::W1, std::nullopt};
  }
  return {partial_sum_cost(delta), Metric::W1, std::nullopt};
}

DistanceValue normalized_w1(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  const double mass_mu = total_mass(mu);
  const double mass_nu = total_mass(nu);
  const double annihilate = mass_mu + mass_nu;
  if (mu.empty() || nu.empty()) return {annihilate, Metric::W1Normalized, std::nullopt};

  const double transport =
      partial_sum_cost(difference(scale_mass(mu, 1.0 / mass_mu), scale_mass(nu, 1.0 / mass_nu)));
  return {std::min(annihilate, std::abs(mass_mu - mass_nu) + transport), Metric::W1Normalized,
          std::nullopt};
}

DistanceValue centralized_w1(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  // The support is augmented by a massless anchor at 0 when 0 is not already
  // an atom, so the segment adjacent to 0 is measured against 0 itself.
  const SignedAtomList delta = difference(mu, nu);
  const auto atoms = delta.atoms();
  const std::size_t n = atoms.size();

  double distance = 0.0;
  double front_sum = 0.0;
  std::size_t front = 0;
  while (front < n && atoms[front].position < 0.0) {
    front_sum += atoms[front].mass;
    const double next =
        front + 1 < n ? std::min(atoms[front + 1].position, 0.0) : 0.0;
    distance += (next - atoms[front].position) * std::abs(front_sum);
    ++front;
  }

  double back_sum = 0.0;
  std::size_t back = n;  // one past the current element
  while (back > front && atoms[back - 1].position > 0.0) {
    back_sum += atoms[back - 1].mass;
    const double prev = back - 1 > front ? std::max(atoms[back - 2].position, 0.0) : 0.0;
    distance += (atoms[back - 1].position - prev) * std::abs(back_sum);
    --back;
  }

  // Whatever remains sits exactly at 0.
  for (std::size_t i = front; i < back; ++i) front_sum += atoms[i].mass;
  return {distance + std::abs(front_sum + back_sum), Metric::W1Centralized, std::nullopt};
}

DistanceValue flat_upper_bound(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  const double mass_mu = total_mass(mu);
  const double mass_nu = total_mass(nu);
  const double gap = std::abs(mass_mu - mass_nu);
  if (mass_mu == 0.0 || mass_nu == 0.0) return {gap, Metric::FlatUpper, std::nullopt};

  const double transport =
      mass_mu < mass_nu ? partial_sum_cost(difference(mu, scale_mass(nu, mass_mu / mass_nu)))
                        : partial_sum_cost(difference(scale_mass(mu, mass_nu / mass_mu), nu));
  return {gap + transport, Metric::FlatUpper, std::nullopt};
}

}  // namespace flatmetric
