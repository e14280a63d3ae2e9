// ietlab — exact analysis of interval exchange transformations
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "core/dynpart.hpp"
#include "core/iet.hpp"

namespace ietlab {

/// Piecewise-constant function on [0,1): interior cut points plus one value
/// per piece, canonically merged (adjacent pieces differ). The only test
/// function class the diagnostics accept — every derived set then has an
/// exactly computable measure.
class StepFunction {
public:
  StepFunction(std::vector<Scalar> cuts, std::vector<Scalar> values);

  static StepFunction constant(Scalar value);
  static StepFunction indicator(const IntervalSet& support);

  const std::vector<Scalar>& cuts() const { return cuts_; }
  const std::vector<Scalar>& values() const { return values_; }
  int piece_count() const { return static_cast<int>(values_.size()); }

  Scalar at(const Scalar& x) const;

  /// f composed with a piecewise translation: x -> f(P(x)), exact.
  StepFunction composed_with(const PiecewiseTranslation& inner) const;

  friend bool operator==(const StepFunction& a, const StepFunction& b) {
    return a.cuts_ == b.cuts_ && a.values_ == b.values_;
  }

private:
  StepFunction() = default;
  std::vector<Scalar> cuts_;
  std::vector<Scalar> values_;
};

/// Exact Lebesgue measure of { x : |T^n x - x| > eps } read off the
/// canonical pieces of T^n.
Scalar rigidity_measure(const PiecewiseTranslation& power, const Scalar& eps);
Scalar rigidity_measure(const Iet& t, long n, const Scalar& eps);

struct RigidityRow {
  long n = 0;
  Scalar measure;
  bool candidate = false;
};
struct RigidityProfile {
  Scalar eps;
  Scalar threshold;
  std::vector<RigidityRow> rows;  // n = 1..N
  Scalar min_measure;
  long argmin = 0;
  std::vector<long> candidate_times;  // n with measure < threshold
};
/// Sweeps n = 1..N with incrementally composed powers. The candidate flag is
/// a screening heuristic (measure below threshold), never a rigidity proof.
RigidityProfile rigidity_profile(const Iet& t, long N, const Scalar& eps,
                                 const Scalar& threshold);

/// Exact Leb(A intersect T^{-n} B) via the piecewise-translation preimage.
Scalar correlation(const Iet& t, const IntervalSet& a, const IntervalSet& b, long n);

/// Exact measure of
///   { x : |f(T^{i+shift_power} x) - f(T^i x)| < delta  for all -b <= i <= b }.
/// shift_power = 1 probes invariance under one application; larger values
/// probe invariance under T^n along the window.
Scalar invariance_window_measure(const Iet& t, const StepFunction& f, const Scalar& delta,
                                 long b, long shift_power);

}  // namespace ietlab
