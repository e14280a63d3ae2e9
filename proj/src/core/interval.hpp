// ietlab — exact analysis of interval exchange transformations
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "core/scalar.hpp"

namespace ietlab {

/// Half-open interval [left, right); empty when right <= left.
struct Interval {
  Scalar left, right;

  Scalar length() const { return right - left; }
  bool empty() const { return right <= left; }
  bool contains(const Scalar& x) const { return left <= x && x < right; }
  Interval translated(const Scalar& s) const { return {left + s, right + s}; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.left == b.left && a.right == b.right;
  }
};

/// Finite union of half-open intervals, kept sorted, disjoint and with
/// touching pieces merged.
class IntervalSet {
public:
  IntervalSet() = default;
  explicit IntervalSet(Interval iv);
  /// Normalizes an arbitrary collection (drops empties, merges overlaps).
  explicit IntervalSet(std::vector<Interval> pieces);

  static IntervalSet unit() { return IntervalSet(Interval{Scalar(0), Scalar(1)}); }

  const std::vector<Interval>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }

  Scalar measure() const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet translated(const Scalar& s) const;

  friend bool operator==(const IntervalSet& a, const IntervalSet& b) {
    return a.pieces_ == b.pieces_;
  }

private:
  std::vector<Interval> pieces_;
};

/// True when the intervals are pairwise disjoint (touching allowed).
bool pairwise_disjoint(const std::vector<Interval>& intervals);

/// Exact Lebesgue measure of the union of arbitrary intervals.
Scalar union_measure(const std::vector<Interval>& intervals);

}  // namespace ietlab
