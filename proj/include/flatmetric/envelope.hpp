#ifndef FLATMETRIC_ENVELOPE_HPP
#define FLATMETRIC_ENVELOPE_HPP

#include <concepts>
#include <cstddef>
#include <functional>
#include <map>
#include <memory_resource>
#include <span>
#include <string>
#include <vector>

namespace flatmetric {

// Start of a linear piece: the function has slope p on [v, next v).
struct Breakpoint {
  double v = 0.0;
  double p = 0.0;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Concave piecewise-linear function on [segments.front().v, right_end].
///
/// The value at the left end is left_value; every other value follows by
/// integrating the slopes. Between dynamic-programming steps the domain is
/// [-1, 1]; during a max-filter it is temporarily widened to [-1-d, 1+d].
/// The right end plays the role of a terminating (right_end, -inf)
/// sentinel and is not stored as a segment.
class ConcaveEnvelope {
 public:
  // The zero function on [-1, 1].
  ConcaveEnvelope();
  ConcaveEnvelope(double left_value, std::vector<Breakpoint> segments, double right_end = 1.0);

  double left_value() const { return left_value_; }
  std::span<const Breakpoint> segments() const { return segments_; }
  std::size_t segment_count() const { return segments_.size(); }
  double left_end() const { return segments_.front().v; }
  double right_end() const { return right_end_; }

  // End of segment i (start of the next one, or the right end).
  double segment_end(std::size_t i) const {
    return i + 1 < segments_.size() ? segments_[i + 1].v : right_end_;
  }

  // x is clamped into the domain.
  double evaluate(double x) const;

  // Empty string when positions strictly increase, slopes strictly decrease
  // and every value is finite; otherwise a description of the first
  // violation.
  std::string invariant_violation() const;

  // `leftValue; (v,p) (v,p) ... (right_end,-inf)`
  std::string to_string() const;

  friend bool operator==(const ConcaveEnvelope&, const ConcaveEnvelope&) = default;

 private:
  double left_value_ = 0.0;
  std::vector<Breakpoint> segments_;
  double right_end_ = 1.0;
};

/// Operations every envelope backend provides. One step of the flat-metric
/// recursion is max_filter(d), clip_to_unit(), add_linear(a).
template <class E>
concept EnvelopeBackend = std::default_initializable<E> &&
    requires(E env, const E& cenv, double x, const ConcaveEnvelope& shape) {
  E(shape);
  env.max_filter(x);
  env.clip_to_unit();
  env.add_linear(x);
  { cenv.supremum() } -> std::convertible_to<double>;
  { cenv.segment_count() } -> std::convertible_to<std::size_t>;
  { cenv.snapshot() } -> std::same_as<ConcaveEnvelope>;
};

/// Sorted array of breakpoints. Each step costs time linear in the number
/// of segments.
class ArrayEnvelope {
 public:
  ArrayEnvelope();
  explicit ArrayEnvelope(const ConcaveEnvelope& shape);

  // Replaces g by x -> sup_{|y-x| <= d} g(y): rising pieces move left by d,
  // falling pieces move right by d and a flat piece of width 2d (plus any
  // existing flat top) sits at the peak. The domain grows to both sides.
  void max_filter(double d);
  // Restricts the domain back to [-1, 1], folding the part left of -1 into
  // left_value.
  void clip_to_unit();
  // g(x) += a * x.
  void add_linear(double a);

  double supremum() const;
  std::size_t segment_count() const { return segments_.size(); }
  ConcaveEnvelope snapshot() const;

 private:
  double left_value_ = 0.0;
  std::vector<Breakpoint> segments_;
  double right_end_ = 1.0;
};

/// Balanced search tree keyed by slope with lazy global registers.
///
/// Each node stores its slope minus slope_offset_ (so adding a linear term
/// touches one register) and the gap to the previous breakpoint. A node's
/// position is first_position_ plus the gaps of all nodes with a larger
/// slope; the last breakpoint is also anchored to the right end through
/// tail_width_. Moving the rising run left and the falling run right is a
/// change to first_position_ and a single gap, so a step costs O(log n)
/// plus amortized O(1) pops at the ends.
class TreeEnvelope {
 public:
  TreeEnvelope();
  explicit TreeEnvelope(const ConcaveEnvelope& shape);

  TreeEnvelope(const TreeEnvelope&) = delete;
  TreeEnvelope& operator=(const TreeEnvelope&) = delete;

  void max_filter(double d);
  void clip_to_unit();
  void add_linear(double a);

  double supremum() const;
  std::size_t segment_count() const { return nodes_.size(); }
  ConcaveEnvelope snapshot() const;

 private:
  using NodeMap = std::pmr::map<double, double, std::greater<double>>;

  double slope(NodeMap::const_iterator it) const { return it->first + slope_offset_; }

  std::pmr::unsynchronized_pool_resource pool_;
  NodeMap nodes_{&pool_};
  double slope_offset_ = 0.0;
  double first_position_ = -1.0;
  double tail_width_ = 2.0;
  double right_end_ = 1.0;
  double left_value_ = 0.0;
};

static_assert(EnvelopeBackend<ArrayEnvelope>);
static_assert(EnvelopeBackend<TreeEnvelope>);

// Value-semantics wrappers over ArrayEnvelope.
ConcaveEnvelope env_max_filter(const ConcaveEnvelope& env, double d);
ConcaveEnvelope env_clip_to_unit(const ConcaveEnvelope& env);
ConcaveEnvelope env_add_linear(const ConcaveEnvelope& env, double a);
double env_supremum(const ConcaveEnvelope& env);

}  // namespace flatmetric

#endif  // FLATMETRIC_ENVELOPE_HPP
