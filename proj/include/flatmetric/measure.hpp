#ifndef FLATMETRIC_MEASURE_HPP
#define FLATMETRIC_MEASURE_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace flatmetric {

// A weighted Dirac delta.
struct Atom {
  double position = 0.0;
  double mass = 0.0;

  friend bool operator==(const Atom&, const Atom&) = default;
};

class NonFiniteInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NegativeMass : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-negative discrete measure sum_i m_i * delta_{x_i}.
///
/// Atoms are kept sorted with strictly increasing positions and strictly
/// positive masses. The empty list is the zero measure. Instances can only
/// be produced through canonicalize() or the operations below, so every
/// DiscreteMeasure in circulation satisfies the invariants.
class DiscreteMeasure {
 public:
  DiscreteMeasure() = default;

  std::span<const Atom> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;

 private:
  friend DiscreteMeasure canonicalize(std::span<const Atom> raw);
  friend DiscreteMeasure translate(const DiscreteMeasure& mu, double t);
  friend DiscreteMeasure scale_mass(const DiscreteMeasure& mu, double lambda);

  explicit DiscreteMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}

  std::vector<Atom> atoms_;
};

/// Signed difference mu - nu over the union of both supports.
///
/// Positions strictly increasing, no zero masses.
class SignedAtomList {
 public:
  SignedAtomList() = default;

  std::span<const Atom> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  /// Builds a list from atoms that are already sorted by strictly
  /// increasing position; zero masses are dropped. Throws
  /// std::invalid_argument if the ordering is violated or values are not
  /// finite.
  static SignedAtomList from_sorted(std::vector<Atom> atoms);

  SignedAtomList negated() const;

  friend bool operator==(const SignedAtomList&, const SignedAtomList&) = default;

 private:
  friend SignedAtomList difference(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

  explicit SignedAtomList(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}

  std::vector<Atom> atoms_;
};

// Sorts by position, merges equal positions (exact equality) and drops
// zero masses. Already-sorted input skips the sort.
DiscreteMeasure canonicalize(std::span<const Atom> raw);

inline DiscreteMeasure canonicalize(std::initializer_list<Atom> raw) {
  return canonicalize(std::span<const Atom>(raw.begin(), raw.size()));
}

SignedAtomList difference(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

double total_mass(const DiscreteMeasure& mu);

// Total variation of mu - nu.
double radon_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

DiscreteMeasure translate(const DiscreteMeasure& mu, double t);

// lambda == 0 yields the zero measure.
DiscreteMeasure scale_mass(const DiscreteMeasure& mu, double lambda);

}  // namespace flatmetric

#endif  // FLATMETRIC_MEASURE_HPP
