#include "flatmetric/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace flatmetric {

namespace {

std::string describe(const Atom& atom) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g)", atom.position, atom.mass);
  return buf;
}

// Merges runs of equal positions in a sorted vector and drops zero masses.
void merge_sorted(std::vector<Atom>& atoms) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < atoms.size();) {
    Atom merged = atoms[i];
    std::size_t j = i + 1;
    for (; j < atoms.size() && atoms[j].position == merged.position; ++j) {
      merged.mass += atoms[j].mass;
    }
    if (merged.mass != 0.0) atoms[out++] = merged;
    i = j;
  }
  atoms.resize(out);
}

}  // namespace

DiscreteMeasure canonicalize(std::span<const Atom> raw) {
  for (const Atom& atom : raw) {
    if (!std::isfinite(atom.position) || !std::isfinite(atom.mass)) {
      throw NonFiniteInput("non-finite atom " + describe(atom));
    }
    if (atom.mass < 0.0) throw NegativeMass("negative mass in atom " + describe(atom));
  }
  std::vector<Atom> atoms(raw.begin(), raw.end());
  auto by_position = [](const Atom& lhs, const Atom& rhs) { return lhs.position < rhs.position; };
  if (!std::is_sorted(atoms.begin(), atoms.end(), by_position)) {
    std::stable_sort(atoms.begin(), atoms.end(), by_position);
  }
  merge_sorted(atoms);
  return DiscreteMeasure(std::move(atoms));
}

SignedAtomList SignedAtomList::from_sorted(std::vector<Atom> atoms) {
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!std::isfinite(atoms[i].position) || !std::isfinite(atoms[i].mass)) {
      throw std::invalid_argument("non-finite atom " + describe(atoms[i]));
    }
    if (i > 0 && !(atoms[i - 1].position < atoms[i].position)) {
      throw std::invalid_argument("positions must be strictly increasing at " + describe(atoms[i]));
    }
  }
  std::erase_if(atoms, [](const Atom& a) { return a.mass == 0.0; });
  return SignedAtomList(std::move(atoms));
}

SignedAtomList SignedAtomList::negated() const {
  std::vector<Atom> atoms = atoms_;
  for (Atom& atom : atoms) atom.mass = -atom.mass;
  return SignedAtomList(std::move(atoms));
}

SignedAtomList difference(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  const auto lhs = mu.atoms();
  const auto rhs = nu.atoms();
  std::vector<Atom> out;
  out.reserve(lhs.size() + rhs.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < lhs.size() || j < rhs.size()) {
    if (j == rhs.size() || (i < lhs.size() && lhs[i].position < rhs[j].position)) {
      out.push_back(lhs[i++]);
    } else if (i == lhs.size() || rhs[j].position < lhs[i].position) {
      out.push_back({rhs[j].position, -rhs[j].mass});
      ++j;
    } else {
      const double mass = lhs[i].mass - rhs[j].mass;
      if (mass != 0.0) out.push_back({lhs[i].position, mass});
      ++i;
      ++j;
    }
  }
  return SignedAtomList(std::move(out));
}

double total_mass(const DiscreteMeasure& mu) {
  double sum = 0.0;
  for (const Atom& atom : mu.atoms()) sum += atom.mass;
  return sum;
}

double radon_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  const SignedAtomList delta = difference(mu, nu);
  double sum = 0.0;
  for (const Atom& atom : delta.atoms()) sum += std::abs(atom.mass);
  return sum;
}

DiscreteMeasure translate(const DiscreteMeasure& mu, double t) {
  if (!std::isfinite(t)) throw NonFiniteInput("translation must be finite");
  std::vector<Atom> atoms(mu.atoms().begin(), mu.atoms().end());
  for (Atom& atom : atoms) atom.position += t;
  // Rounding can make neighbouring positions coincide.
  merge_sorted(atoms);
  return DiscreteMeasure(std::move(atoms));
}

DiscreteMeasure scale_mass(const DiscreteMeasure& mu, double lambda) {
  if (!std::isfinite(lambda)) throw NonFiniteInput("scale factor must be finite");
  if (lambda < 0.0) throw NegativeMass("scale factor must be non-negative");
  std::vector<Atom> atoms(mu.atoms().begin(), mu.atoms().end());
  for (Atom& atom : atoms) atom.mass *= lambda;
  std::erase_if(atoms, [](const Atom& a) { return a.mass == 0.0; });
  return DiscreteMeasure(std::move(atoms));
}

}  // namespace flatmetric
