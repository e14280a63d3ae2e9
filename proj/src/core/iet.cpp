// ietlab — exact analysis of interval exchange transformations
// SPDX-License-Identifier: Apache-2.0

#include "core/iet.hpp"

#include <algorithm>
#include <numeric>

namespace ietlab {

// ---------------------------------------------------------------------------
// PiecewiseTranslation
// ---------------------------------------------------------------------------

PiecewiseTranslation PiecewiseTranslation::identity() {
  PiecewiseTranslation id;
  id.shifts_.push_back(Scalar(0));
  return id;
}

PiecewiseTranslation::PiecewiseTranslation(std::vector<Scalar> cuts, std::vector<Scalar> shifts) {
  if (shifts.size() != cuts.size() + 1)
    throw Error(Errc::invalid_argument, "piece/cut count mismatch");
  Scalar zero(0), one(1);
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (cuts[i] <= zero || cuts[i] >= one || (i > 0 && cuts[i] <= cuts[i - 1]))
      throw Error(Errc::invalid_argument, "cut points must be strictly increasing in (0,1)");
  }
  // Canonical form: merge adjacent pieces with equal shifts.
  shifts_.push_back(std::move(shifts[0]));
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (shifts[i + 1] == shifts_.back()) continue;
    cuts_.push_back(std::move(cuts[i]));
    shifts_.push_back(std::move(shifts[i + 1]));
  }
  if (!image_tiles_unit_interval())
    throw Error(Errc::invalid_argument, "image pieces do not tile [0,1)");
}

std::vector<Scalar> PiecewiseTranslation::breakpoints() const {
  std::vector<Scalar> b;
  b.reserve(cuts_.size() + 2);
  b.emplace_back(0);
  b.insert(b.end(), cuts_.begin(), cuts_.end());
  b.emplace_back(1);
  return b;
}

Interval PiecewiseTranslation::piece(int k) const {
  Scalar left = (k == 0) ? Scalar(0) : cuts_[k - 1];
  Scalar right = (k == static_cast<int>(cuts_.size())) ? Scalar(1) : cuts_[k];
  return {std::move(left), std::move(right)};
}

int PiecewiseTranslation::piece_index(const Scalar& x) const {
  if (x.sign() < 0 || x >= Scalar(1))
    throw Error(Errc::out_of_domain, "point outside [0,1)");
  auto it = std::upper_bound(cuts_.begin(), cuts_.end(), x);
  return static_cast<int>(it - cuts_.begin());
}

Scalar PiecewiseTranslation::apply(const Scalar& x) const {
  return x + shifts_[piece_index(x)];
}

bool PiecewiseTranslation::image_tiles_unit_interval() const {
  // Sort image left endpoints; pieces must abut exactly from 0 to 1.
  int m = piece_count();
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Scalar> img_left(m), img_right(m);
  for (int k = 0; k < m; ++k) {
    Interval dom = piece(k);
    img_left[k] = dom.left + shifts_[k];
    img_right[k] = dom.right + shifts_[k];
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return img_left[a] < img_left[b]; });
  Scalar cursor(0);
  for (int k : order) {
    if (img_left[k] != cursor) return false;
    cursor = img_right[k];
  }
  return cursor == Scalar(1);
}

PiecewiseTranslation PiecewiseTranslation::inverse() const {
  int m = piece_count();
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Scalar> img_left(m);
  for (int k = 0; k < m; ++k) img_left[k] = piece(k).left + shifts_[k];
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return img_left[a] < img_left[b]; });
  std::vector<Scalar> cuts, shifts;
  cuts.reserve(m - 1);
  shifts.reserve(m);
  for (int i = 0; i < m; ++i) {
    int k = order[i];
    if (i > 0) cuts.push_back(img_left[k]);
    shifts.push_back(-shifts_[k]);
  }
  return PiecewiseTranslation(std::move(cuts), std::move(shifts));
}

PiecewiseTranslation PiecewiseTranslation::unchecked(std::vector<Scalar> cuts,
                                                     std::vector<Scalar> shifts) {
  PiecewiseTranslation p;
  p.cuts_ = std::move(cuts);
  p.shifts_ = std::move(shifts);
  return p;
}

PiecewiseTranslation PiecewiseTranslation::compose(const PiecewiseTranslation& outer,
                                                   const PiecewiseTranslation& inner) {
  // Sweep the pieces of `inner` in order; inside one piece the image moves by
  // a fixed shift, so the outer pieces it crosses are consecutive.
  std::vector<Scalar> cuts, shifts;
  auto emit = [&](const Scalar& left, const Scalar& total_shift) {
    if (!shifts.empty() && shifts.back() == total_shift) return;  // canonical merge
    if (!shifts.empty()) cuts.push_back(left);
    shifts.push_back(total_shift);
  };
  for (int j = 0; j < inner.piece_count(); ++j) {
    Interval dom = inner.piece(j);
    const Scalar& s = inner.shifts_[j];
    int k = outer.piece_index(dom.left + s);
    Scalar cell_left = dom.left;
    while (true) {
      emit(cell_left, s + outer.shifts_[k]);
      if (k >= static_cast<int>(outer.cuts_.size())) break;
      Scalar next = outer.cuts_[k] - s;  // preimage of the next outer cut
      if (next >= dom.right) break;
      cell_left = std::move(next);
      ++k;
    }
  }
  return unchecked(std::move(cuts), std::move(shifts));
}

// ---------------------------------------------------------------------------
// Iet
// ---------------------------------------------------------------------------

Iet::Iet(std::vector<Scalar> lengths, Permutation perm)
    : lengths_(std::move(lengths)),
      perm_(std::move(perm)),
      forward_(PiecewiseTranslation::identity()),
      inverse_(PiecewiseTranslation::identity()) {
  int d = perm_.size();
  if (static_cast<int>(lengths_.size()) != d)
    throw Error(Errc::dimension_mismatch,
                "got " + std::to_string(lengths_.size()) + " lengths for d = " + std::to_string(d));
  Scalar total(0);
  for (const auto& l : lengths_) {
    if (l.sign() <= 0) throw Error(Errc::nonpositive_length, "lengths must be positive");
    total += l;
  }
  if (total != Scalar(1)) {
    for (auto& l : lengths_) l /= total;
    was_normalized_ = true;
  }

  betas_.reserve(d - 1);
  Scalar acc(0);
  for (int i = 0; i < d - 1; ++i) {
    acc += lengths_[i];
    betas_.push_back(acc);
  }

  // alpha_i = sum_{pi(j) < pi(i)} lambda_j - sum_{j < i} lambda_j
  alphas_.assign(d, Scalar(0));
  std::vector<Scalar> image_left(d, Scalar(0));  // left endpoint of the image of I_i
  {
    // Prefix sums in image order.
    Scalar img_acc(0);
    std::vector<int> by_image(d);
    for (int i = 1; i <= d; ++i) by_image[perm_.image(i) - 1] = i;
    for (int pos = 0; pos < d; ++pos) {
      int i = by_image[pos];
      image_left[i - 1] = img_acc;
      img_acc += lengths_[i - 1];
    }
  }
  Scalar dom_acc(0);
  for (int i = 1; i <= d; ++i) {
    alphas_[i - 1] = image_left[i - 1] - dom_acc;
    dom_acc += lengths_[i - 1];
  }

  for (int i = 0; i + 1 < d; ++i)
    if (alphas_[i] != alphas_[i + 1]) discontinuities_.push_back(betas_[i]);

  forward_ = PiecewiseTranslation(betas_, alphas_);
  inverse_ = forward_.inverse();
}

Scalar Iet::evaluate(const Scalar& x) const { return forward_.apply(x); }

Scalar Iet::evaluate_inverse(const Scalar& y) const { return inverse_.apply(y); }

Iet::OneSidedLimits Iet::one_sided_limits(const Scalar& a) const {
  if (a.sign() < 0 || a > Scalar(1))
    throw Error(Errc::out_of_domain, "point outside [0,1]");
  OneSidedLimits lim;
  if (a < Scalar(1)) {
    // Right limit: the piece [b_{k-1}, b_k) containing a, by right continuity.
    auto it = std::upper_bound(betas_.begin(), betas_.end(), a);
    lim.plus = a + alphas_[it - betas_.begin()];
  }
  if (a.sign() > 0) {
    // Left limit: the piece whose closure meets a from the left.
    auto it = std::lower_bound(betas_.begin(), betas_.end(), a);
    lim.minus = a + alphas_[it - betas_.begin()];
  }
  return lim;
}

const std::vector<Scalar>& Iet::inverse_discontinuities() const {
  // Canonical inverse cuts are exactly the genuine discontinuities of T^{-1}.
  return inverse_.cuts();
}

PiecewiseTranslation Iet::power(long n) const {
  const PiecewiseTranslation& one = (n >= 0) ? forward_ : inverse_;
  PiecewiseTranslation acc = PiecewiseTranslation::identity();
  for (long i = 0; i < std::labs(n); ++i) acc = PiecewiseTranslation::compose(one, acc);
  return acc;
}

Scalar Iet::min_discontinuity_spacing() const {
  if (discontinuities_.empty()) return Scalar(1);
  Scalar best = discontinuities_.front();  // gap to 0
  for (std::size_t i = 1; i < discontinuities_.size(); ++i) {
    Scalar gap = discontinuities_[i] - discontinuities_[i - 1];
    if (gap < best) best = gap;
  }
  Scalar tail = Scalar(1) - discontinuities_.back();
  return tail < best ? tail : best;
}

std::uint64_t Iet::radicand() const {
  for (const auto& l : lengths_)
    if (!l.is_rational()) return l.radicand();
  return 0;
}

// ---------------------------------------------------------------------------
// PowerWalker / displacement
// ---------------------------------------------------------------------------

PowerWalker::PowerWalker(const Iet& t, Direction dir)
    : one_(dir == Direction::forward ? &t.forward_map() : &t.inverse_map()),
      current_(PiecewiseTranslation::identity()),
      n_(0),
      delta_(dir == Direction::forward ? 1 : -1) {}

const PiecewiseTranslation& PowerWalker::step() {
  current_ = PiecewiseTranslation::compose(*one_, current_);
  n_ += delta_;
  return current_;
}

DisplacementProfile displacement_profile(const PiecewiseTranslation& power) {
  DisplacementProfile prof;
  int m = power.piece_count();
  prof.pieces.reserve(m);
  prof.displacement.reserve(m);
  for (int k = 0; k < m; ++k) {
    prof.pieces.push_back(power.piece(k));
    prof.displacement.push_back(power.shifts()[k]);
  }
  return prof;
}

DisplacementProfile displacement_profile(const Iet& t, long n) {
  return displacement_profile(t.power(n));
}

}  // namespace ietlab
