#include "flatmetric/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "flatmetric/measure_io.hpp"

namespace flatmetric {

// ---------------------------------------------------------------------------
// ConcaveEnvelope

ConcaveEnvelope::ConcaveEnvelope() : segments_{{-1.0, 0.0}} {}

ConcaveEnvelope::ConcaveEnvelope(double left_value, std::vector<Breakpoint> segments,
                                 double right_end)
    : left_value_(left_value), segments_(std::move(segments)), right_end_(right_end) {
  if (segments_.empty()) throw std::invalid_argument("envelope needs at least one segment");
}

double ConcaveEnvelope::evaluate(double x) const {
  x = std::clamp(x, left_end(), right_end_);
  double value = left_value_;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const double end = segment_end(i);
    if (x <= end) return value + (x - segments_[i].v) * segments_[i].p;
    value += (end - segments_[i].v) * segments_[i].p;
  }
  return value;
}

std::string ConcaveEnvelope::invariant_violation() const {
  if (!std::isfinite(left_value_)) return "non-finite left value";
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const Breakpoint& bp = segments_[i];
    if (!std::isfinite(bp.v) || !std::isfinite(bp.p)) {
      return "non-finite breakpoint at index " + std::to_string(i);
    }
    if (i == 0) continue;
    if (!(segments_[i - 1].v < bp.v)) {
      return "positions not increasing at index " + std::to_string(i);
    }
    if (!(segments_[i - 1].p > bp.p)) {
      return "slopes not decreasing at index " + std::to_string(i);
    }
  }
  if (!(segments_.back().v < right_end_)) return "last breakpoint at or past the right end";
  return {};
}

std::string ConcaveEnvelope::to_string() const {
  std::ostringstream out;
  out << format_real(left_value_) << ';';
  for (const Breakpoint& bp : segments_) {
    out << " (" << format_real(bp.v) << ',' << format_real(bp.p) << ')';
  }
  out << " (" << format_real(right_end_) << ",-inf)";
  return out.str();
}

// ---------------------------------------------------------------------------
// ArrayEnvelope

ArrayEnvelope::ArrayEnvelope() : segments_{{-1.0, 0.0}} {}

ArrayEnvelope::ArrayEnvelope(const ConcaveEnvelope& shape)
    : left_value_(shape.left_value()),
      segments_(shape.segments().begin(), shape.segments().end()),
      right_end_(shape.right_end()) {}

void ArrayEnvelope::max_filter(double d) {
  if (d < 0.0) throw std::invalid_argument("max_filter width must be non-negative");
  if (d == 0.0) return;

  // Slopes decrease along the array, so the rising run is a prefix.
  const auto split_it = std::partition_point(segments_.begin(), segments_.end(),
                                             [](const Breakpoint& bp) { return bp.p > 0.0; });
  const std::size_t split = static_cast<std::size_t>(split_it - segments_.begin());
  const bool has_flat_top = split < segments_.size() && segments_[split].p == 0.0;
  const double peak_start = split < segments_.size() ? segments_[split].v : right_end_;

  for (std::size_t i = 0; i < split; ++i) segments_[i].v -= d;
  for (std::size_t i = split + (has_flat_top ? 1 : 0); i < segments_.size(); ++i) {
    segments_[i].v += d;
  }
  if (has_flat_top) {
    segments_[split].v = peak_start - d;
  } else {
    segments_.insert(segments_.begin() + static_cast<std::ptrdiff_t>(split),
                     Breakpoint{peak_start - d, 0.0});
  }
  right_end_ += d;
}

void ArrayEnvelope::clip_to_unit() {
  // Fold every piece that starts left of -1 into left_value.
  std::size_t first_kept = 0;
  while (segments_[first_kept].v < -1.0) {
    Breakpoint& bp = segments_[first_kept];
    const bool has_next = first_kept + 1 < segments_.size();
    const double end = has_next ? segments_[first_kept + 1].v : right_end_;
    if (end <= -1.0 && has_next) {
      left_value_ += (end - bp.v) * bp.p;
      ++first_kept;
    } else {
      left_value_ += (-1.0 - bp.v) * bp.p;
      bp.v = -1.0;
    }
  }
  segments_.erase(segments_.begin(), segments_.begin() + static_cast<std::ptrdiff_t>(first_kept));

  if (right_end_ > 1.0) {
    while (segments_.size() > 1 && segments_.back().v >= 1.0) segments_.pop_back();
    right_end_ = 1.0;
  }
}

void ArrayEnvelope::add_linear(double a) {
  left_value_ -= a;
  for (Breakpoint& bp : segments_) bp.p += a;
}

double ArrayEnvelope::supremum() const {
  double value = left_value_;
  for (std::size_t i = 0; i < segments_.size() && segments_[i].p > 0.0; ++i) {
    const double end = i + 1 < segments_.size() ? segments_[i + 1].v : right_end_;
    value += (end - segments_[i].v) * segments_[i].p;
  }
  return value;
}

ConcaveEnvelope ArrayEnvelope::snapshot() const {
  return ConcaveEnvelope(left_value_, segments_, right_end_);
}

// ---------------------------------------------------------------------------
// TreeEnvelope

TreeEnvelope::TreeEnvelope() { nodes_.emplace(0.0, 0.0); }

TreeEnvelope::TreeEnvelope(const ConcaveEnvelope& shape)
    : first_position_(shape.left_end()), right_end_(shape.right_end()),
      left_value_(shape.left_value()) {
  if (const std::string why = shape.invariant_violation(); !why.empty()) {
    throw std::invalid_argument("TreeEnvelope: " + why);
  }
  double previous = shape.left_end();
  for (const Breakpoint& bp : shape.segments()) {
    nodes_.emplace_hint(nodes_.end(), bp.p, bp.v - previous);
    previous = bp.v;
  }
  tail_width_ = right_end_ - previous;
}

void TreeEnvelope::max_filter(double d) {
  if (d < 0.0) throw std::invalid_argument("max_filter width must be non-negative");
  if (d == 0.0) return;

  const double zero_key = -slope_offset_;
  // First node whose effective slope is <= 0.
  const auto split = nodes_.lower_bound(zero_key);

  // The rising run and the plateau start move left with the first position;
  // the falling run moves right, so the gap in front of it grows by 2d.
  first_position_ -= d;
  right_end_ += d;

  if (split != nodes_.end() && split->first == zero_key) {
    const auto next = std::next(split);
    if (next != nodes_.end()) {
      next->second += 2.0 * d;
    } else {
      tail_width_ += 2.0 * d;
    }
  } else if (split != nodes_.end()) {
    const double gap = split == nodes_.begin() ? 0.0 : split->second;
    split->second = 2.0 * d;
    nodes_.emplace_hint(split, zero_key, gap);
  } else {
    // Everything rises: the peak is the right end.
    nodes_.emplace_hint(nodes_.end(), zero_key, tail_width_);
    tail_width_ = 2.0 * d;
  }
}

void TreeEnvelope::clip_to_unit() {
  auto front = nodes_.begin();
  for (auto next = std::next(front); next != nodes_.end(); next = std::next(front)) {
    const double next_position = first_position_ + next->second;
    if (next_position > -1.0) break;
    left_value_ += next->second * slope(front);
    first_position_ = next_position;
    nodes_.erase(front);
    front = next;
    front->second = 0.0;
  }
  if (first_position_ < -1.0) {
    const double cut = -1.0 - first_position_;
    left_value_ += cut * slope(front);
    const auto next = std::next(front);
    if (next != nodes_.end()) {
      next->second -= cut;
    } else {
      tail_width_ -= cut;
    }
    first_position_ = -1.0;
  }

  if (right_end_ > 1.0) {
    // The falling run was anchored at the right end, so walk back from it.
    double last_position = right_end_ - tail_width_;
    while (nodes_.size() > 1 && last_position >= 1.0) {
      const auto last = std::prev(nodes_.end());
      last_position -= last->second;
      nodes_.erase(last);
    }
    if (nodes_.size() == 1) last_position = first_position_;
    tail_width_ = 1.0 - last_position;
    right_end_ = 1.0;
  }
}

void TreeEnvelope::add_linear(double a) {
  slope_offset_ += a;
  left_value_ -= a;
}

double TreeEnvelope::supremum() const {
  double value = left_value_;
  for (auto it = nodes_.begin(); it != nodes_.end(); ++it) {
    const double p = slope(it);
    if (p <= 0.0) break;
    const auto next = std::next(it);
    value += (next != nodes_.end() ? next->second : tail_width_) * p;
  }
  return value;
}

ConcaveEnvelope TreeEnvelope::snapshot() const {
  std::vector<Breakpoint> segments;
  segments.reserve(nodes_.size());
  double position = first_position_;
  for (auto it = nodes_.begin(); it != nodes_.end(); ++it) {
    if (it != nodes_.begin()) position += it->second;
    segments.push_back({position, slope(it)});
  }
  return ConcaveEnvelope(left_value_, std::move(segments), right_end_);
}

// ---------------------------------------------------------------------------

ConcaveEnvelope env_max_filter(const ConcaveEnvelope& env, double d) {
  ArrayEnvelope work(env);
  work.max_filter(d);
  return work.snapshot();
}

ConcaveEnvelope env_clip_to_unit(const ConcaveEnvelope& env) {
  ArrayEnvelope work(env);
  work.clip_to_unit();
  return work.snapshot();
}

ConcaveEnvelope env_add_linear(const ConcaveEnvelope& env, double a) {
  ArrayEnvelope work(env);
  work.add_linear(a);
  return work.snapshot();
}

double env_supremum(const ConcaveEnvelope& env) { return ArrayEnvelope(env).supremum(); }

}  // namespace flatmetric
