// ietlab — exact analysis of interval exchange transformations
// SPDX-License-Identifier: Apache-2.0

#include "core/interval.hpp"

#include <algorithm>

namespace ietlab {

namespace {

std::vector<Interval> normalized(std::vector<Interval> pieces) {
  std::erase_if(pieces, [](const Interval& iv) { return iv.empty(); });
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& a, const Interval& b) { return a.left < b.left; });
  std::vector<Interval> out;
  for (auto& iv : pieces) {
    if (!out.empty() && iv.left <= out.back().right) {
      if (iv.right > out.back().right) out.back().right = iv.right;
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

}  // namespace

IntervalSet::IntervalSet(Interval iv) {
  if (!iv.empty()) pieces_.push_back(std::move(iv));
}

IntervalSet::IntervalSet(std::vector<Interval> pieces) : pieces_(normalized(std::move(pieces))) {}

Scalar IntervalSet::measure() const {
  Scalar total;
  for (const auto& iv : pieces_) total += iv.length();
  return total;
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < pieces_.size() && j < other.pieces_.size()) {
    const Interval& a = pieces_[i];
    const Interval& b = other.pieces_[j];
    Interval cut{std::max(a.left, b.left, [](const Scalar& x, const Scalar& y) { return x < y; }),
                 std::min(a.right, b.right, [](const Scalar& x, const Scalar& y) { return x < y; })};
    if (!cut.empty()) out.push_back(std::move(cut));
    if (a.right < b.right)
      ++i;
    else
      ++j;
  }
  IntervalSet r;
  r.pieces_ = std::move(out);  // already sorted and disjoint
  return r;
}

IntervalSet IntervalSet::translated(const Scalar& s) const {
  IntervalSet r;
  r.pieces_.reserve(pieces_.size());
  for (const auto& iv : pieces_) r.pieces_.push_back(iv.translated(s));
  return r;
}

bool pairwise_disjoint(const std::vector<Interval>& intervals) {
  std::vector<Interval> sorted = intervals;
  std::erase_if(sorted, [](const Interval& iv) { return iv.empty(); });
  std::sort(sorted.begin(), sorted.end(),
            [](const Interval& a, const Interval& b) { return a.left < b.left; });
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i].left < sorted[i - 1].right) return false;
  return true;
}

Scalar union_measure(const std::vector<Interval>& intervals) {
  return IntervalSet(intervals).measure();
}

}  // namespace ietlab
