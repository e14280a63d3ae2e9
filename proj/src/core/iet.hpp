// ietlab — exact analysis of interval exchange transformations
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "core/interval.hpp"
#include "core/perm.hpp"
#include "core/scalar.hpp"

namespace ietlab {

/// Canonical piecewise translation of [0,1): strictly increasing interior
/// cut points 0 < c_1 < ... < c_{m-1} < 1 and one shift per piece, piece k
/// mapping [c_{k-1}, c_k) to itself plus shifts[k]. Canonical means adjacent
/// pieces carry distinct shifts, so the representation of a map is unique.
///
/// Every instance represents a measure-preserving bijection of [0,1); the
/// constructor verifies that the image pieces tile [0,1) exactly.
class PiecewiseTranslation {
public:
  static PiecewiseTranslation identity();

  /// cuts: interior cut points (sorted strictly increasing, inside (0,1));
  /// shifts: cuts.size()+1 per-piece translation amounts.
  /// Merges adjacent equal shifts and verifies exact measure preservation.
  PiecewiseTranslation(std::vector<Scalar> cuts, std::vector<Scalar> shifts);

  int piece_count() const { return static_cast<int>(shifts_.size()); }
  const std::vector<Scalar>& cuts() const { return cuts_; }
  const std::vector<Scalar>& shifts() const { return shifts_; }

  /// Full breakpoint list 0 = b_0 < ... < b_m = 1.
  std::vector<Scalar> breakpoints() const;
  Interval piece(int k) const;

  /// Index of the piece whose half-open interval contains x.
  int piece_index(const Scalar& x) const;

  Scalar apply(const Scalar& x) const;
  bool is_identity() const { return cuts_.empty() && shifts_[0].is_zero(); }

  PiecewiseTranslation inverse() const;

  /// Function composition outer(inner(x)), canonically merged.
  static PiecewiseTranslation compose(const PiecewiseTranslation& outer,
                                      const PiecewiseTranslation& inner);

  /// Exact check that the image pieces partition [0,1); used by the
  /// constructor and exposed for tests.
  bool image_tiles_unit_interval() const;

  friend bool operator==(const PiecewiseTranslation& a, const PiecewiseTranslation& b) {
    return a.cuts_ == b.cuts_ && a.shifts_ == b.shifts_;
  }

private:
  PiecewiseTranslation() = default;
  // Fast path for compose(): the operands are already verified maps, so the
  // composite tiles [0,1) automatically and the sort-based check is skipped.
  static PiecewiseTranslation unchecked(std::vector<Scalar> cuts, std::vector<Scalar> shifts);
  std::vector<Scalar> cuts_;
  std::vector<Scalar> shifts_;
};

/// The interval exchange map T determined by positive lengths summing to 1
/// and a permutation. Immutable after construction.
class Iet {
public:
  /// Lengths are normalized to unit sum by exact division (recorded in
  /// was_normalized()). Throws nonpositive_length / dimension_mismatch.
  Iet(std::vector<Scalar> lengths, Permutation perm);

  int d() const { return perm_.size(); }
  const Permutation& permutation() const { return perm_; }
  const std::vector<Scalar>& lengths() const { return lengths_; }
  bool was_normalized() const { return was_normalized_; }

  /// beta_i = lambda_1 + ... + lambda_i for 1 <= i <= d-1 (formal breakpoints).
  const std::vector<Scalar>& betas() const { return betas_; }
  /// Per-interval translation amounts alpha_1..alpha_d.
  const std::vector<Scalar>& translations() const { return alphas_; }

  /// Exact image of x in [0,1); throws out_of_domain otherwise.
  Scalar evaluate(const Scalar& x) const;
  Scalar evaluate_inverse(const Scalar& y) const;

  struct OneSidedLimits {
    std::optional<Scalar> plus;   // lim_{x->a+} T(x), defined on [0,1)
    std::optional<Scalar> minus;  // lim_{x->a-} T(x), defined on (0,1]
  };
  OneSidedLimits one_sided_limits(const Scalar& a) const;

  /// Breakpoints where the one-sided limits genuinely disagree.
  const std::vector<Scalar>& discontinuities() const { return discontinuities_; }
  /// Discontinuity points of the inverse map.
  const std::vector<Scalar>& inverse_discontinuities() const;

  const PiecewiseTranslation& forward_map() const { return forward_; }
  const PiecewiseTranslation& inverse_map() const { return inverse_; }

  /// Canonical form of T^n (n may be negative; n = 0 is the identity).
  /// Composes one application at a time.
  PiecewiseTranslation power(long n) const;

  /// Minimal spacing between consecutive true discontinuities, with 0 and 1
  /// included as fenceposts; 1 when there are none. Reported quantity only.
  Scalar min_discontinuity_spacing() const;

  /// Common radicand of the length field (0 when all lengths rational).
  std::uint64_t radicand() const;

private:
  std::vector<Scalar> lengths_;
  Permutation perm_;
  std::vector<Scalar> betas_, alphas_;
  std::vector<Scalar> discontinuities_;
  PiecewiseTranslation forward_, inverse_;
  bool was_normalized_ = false;
};

/// Iterates T^n (or T^{-n}) incrementally: step() advances one application
/// and returns the canonical piecewise translation of the new power. Every
/// intermediate power is visited, which is what the sweeps need.
class PowerWalker {
public:
  enum class Direction { forward, backward };
  explicit PowerWalker(const Iet& t, Direction dir = Direction::forward);

  long n() const { return n_; }
  const PiecewiseTranslation& current() const { return current_; }
  const PiecewiseTranslation& step();

private:
  const PiecewiseTranslation* one_;
  PiecewiseTranslation current_;
  long n_;
  long delta_;
};

/// x -> T^n(x) - x as an exact step function: the shift of each canonical
/// piece of T^n, with the piece lengths.
struct DisplacementProfile {
  std::vector<Interval> pieces;
  std::vector<Scalar> displacement;  // one value per piece
};
DisplacementProfile displacement_profile(const PiecewiseTranslation& power);
DisplacementProfile displacement_profile(const Iet& t, long n);

}  // namespace ietlab
