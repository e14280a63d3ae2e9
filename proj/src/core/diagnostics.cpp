// ietlab — exact analysis of interval exchange transformations
// SPDX-License-Identifier: Apache-2.0

#include "core/diagnostics.hpp"

#include <algorithm>
#include <map>

namespace ietlab {

// ---------------------------------------------------------------------------
// StepFunction
// ---------------------------------------------------------------------------

StepFunction::StepFunction(std::vector<Scalar> cuts, std::vector<Scalar> values) {
  if (values.size() != cuts.size() + 1)
    throw Error(Errc::invalid_argument, "value/cut count mismatch");
  Scalar zero(0), one(1);
  for (std::size_t i = 0; i < cuts.size(); ++i)
    if (cuts[i] <= zero || cuts[i] >= one || (i > 0 && cuts[i] <= cuts[i - 1]))
      throw Error(Errc::invalid_argument, "cut points must be strictly increasing in (0,1)");
  values_.push_back(std::move(values[0]));
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (values[i + 1] == values_.back()) continue;
    cuts_.push_back(std::move(cuts[i]));
    values_.push_back(std::move(values[i + 1]));
  }
}

StepFunction StepFunction::constant(Scalar value) {
  StepFunction f;
  f.values_.push_back(std::move(value));
  return f;
}

StepFunction StepFunction::indicator(const IntervalSet& support) {
  if (support.empty()) return constant(Scalar(0));
  std::vector<Scalar> cuts, values;
  Scalar cursor(0);
  for (const auto& iv : support.pieces()) {
    if (iv.left > cursor) {  // gap before this piece
      values.emplace_back(0);
      cuts.push_back(iv.left);
    }
    values.emplace_back(1);
    if (iv.right < Scalar(1)) cuts.push_back(iv.right);
    cursor = iv.right;
  }
  if (values.size() == cuts.size()) values.emplace_back(0);  // trailing gap
  return StepFunction(std::move(cuts), std::move(values));
}

Scalar StepFunction::at(const Scalar& x) const {
  if (x.sign() < 0 || x >= Scalar(1)) throw Error(Errc::out_of_domain, "point outside [0,1)");
  auto it = std::upper_bound(cuts_.begin(), cuts_.end(), x);
  return values_[it - cuts_.begin()];
}

StepFunction StepFunction::composed_with(const PiecewiseTranslation& inner) const {
  std::vector<Scalar> cuts, values;
  auto emit = [&](const Scalar& left, const Scalar& value) {
    if (!values.empty() && values.back() == value) return;
    if (!values.empty()) cuts.push_back(left);
    values.push_back(value);
  };
  for (int j = 0; j < inner.piece_count(); ++j) {
    Interval dom = inner.piece(j);
    const Scalar& s = inner.shifts()[j];
    Scalar img = dom.left + s;
    auto it = std::upper_bound(cuts_.begin(), cuts_.end(), img);
    int k = static_cast<int>(it - cuts_.begin());
    Scalar cell_left = dom.left;
    while (true) {
      emit(cell_left, values_[k]);
      if (k >= static_cast<int>(cuts_.size())) break;
      Scalar next = cuts_[k] - s;
      if (next >= dom.right) break;
      cell_left = std::move(next);
      ++k;
    }
  }
  StepFunction f;
  f.cuts_ = std::move(cuts);
  f.values_ = std::move(values);
  return f;
}

// ---------------------------------------------------------------------------
// Rigidity
// ---------------------------------------------------------------------------

Scalar rigidity_measure(const PiecewiseTranslation& power, const Scalar& eps) {
  if (eps.sign() <= 0) throw Error(Errc::invalid_argument, "eps must be positive");
  Scalar total(0);
  for (int k = 0; k < power.piece_count(); ++k)
    if (power.shifts()[k].abs() > eps) total += power.piece(k).length();
  return total;
}

Scalar rigidity_measure(const Iet& t, long n, const Scalar& eps) {
  return rigidity_measure(t.power(n), eps);
}

RigidityProfile rigidity_profile(const Iet& t, long N, const Scalar& eps,
                                 const Scalar& threshold) {
  if (N < 1) throw Error(Errc::invalid_argument, "horizon must be >= 1");
  RigidityProfile prof;
  prof.eps = eps;
  prof.threshold = threshold;
  prof.rows.reserve(N);
  PowerWalker walker(t);
  for (long n = 1; n <= N; ++n) {
    const PiecewiseTranslation& power = walker.step();
    RigidityRow row;
    row.n = n;
    row.measure = rigidity_measure(power, eps);
    row.candidate = row.measure < threshold;
    if (row.candidate) prof.candidate_times.push_back(n);
    if (n == 1 || row.measure < prof.min_measure) {
      prof.min_measure = row.measure;
      prof.argmin = n;
    }
    prof.rows.push_back(std::move(row));
  }
  return prof;
}

// ---------------------------------------------------------------------------
// Correlation
// ---------------------------------------------------------------------------

Scalar correlation(const Iet& t, const IntervalSet& a, const IntervalSet& b, long n) {
  PiecewiseTranslation power = t.power(n);
  std::vector<Interval> preimage;
  for (int k = 0; k < power.piece_count(); ++k) {
    Interval dom = power.piece(k);
    const Scalar& s = power.shifts()[k];
    IntervalSet hit = b.intersect(IntervalSet(dom.translated(s)));
    for (const auto& iv : hit.pieces()) preimage.push_back(iv.translated(-s));
  }
  return a.intersect(IntervalSet(std::move(preimage))).measure();
}

// ---------------------------------------------------------------------------
// Invariance window
// ---------------------------------------------------------------------------

Scalar invariance_window_measure(const Iet& t, const StepFunction& f, const Scalar& delta,
                                 long b, long shift_power) {
  if (delta.sign() <= 0) throw Error(Errc::invalid_argument, "delta must be positive");
  if (b < 0) throw Error(Errc::invalid_argument, "window radius must be >= 0");

  // Materialize f composed with every needed power of T. Positive powers are
  // visited in increasing order and negative ones in decreasing order so one
  // incremental walker serves each direction.
  std::map<long, StepFunction> pulled;
  for (long i = -b; i <= b; ++i) {
    pulled.emplace(i, StepFunction::constant(Scalar(0)));
    pulled.emplace(i + shift_power, StepFunction::constant(Scalar(0)));
  }
  {
    PowerWalker fwd(t);
    for (auto& [j, g] : pulled) {
      if (j == 0) g = f;
      if (j <= 0) continue;
      while (fwd.n() < j) fwd.step();
      g = f.composed_with(fwd.current());
    }
    PowerWalker bwd(t, PowerWalker::Direction::backward);
    for (auto it = pulled.rbegin(); it != pulled.rend(); ++it) {
      if (it->first >= 0) continue;
      while (bwd.n() > it->first) bwd.step();
      it->second = f.composed_with(bwd.current());
    }
  }

  // Overlay: sweep the common refinement of all cut sets.
  std::vector<Scalar> cuts;
  for (const auto& [j, g] : pulled)
    cuts.insert(cuts.end(), g.cuts().begin(), g.cuts().end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::map<long, std::size_t> index;
  for (const auto& [j, g] : pulled) index[j] = 0;

  Scalar total(0);
  Scalar left(0);
  for (std::size_t cell = 0; cell <= cuts.size(); ++cell) {
    Scalar right = (cell < cuts.size()) ? cuts[cell] : Scalar(1);
    bool ok = true;
    for (long i = -b; i <= b && ok; ++i) {
      const StepFunction& lo = pulled.at(i);
      const StepFunction& hi = pulled.at(i + shift_power);
      const Scalar& vlo = lo.values()[index[i]];
      const Scalar& vhi = hi.values()[index[i + shift_power]];
      ok = (vhi - vlo).abs() < delta;
    }
    if (ok) total += right - left;
    // Advance per-function piece pointers past the cut we are crossing.
    if (cell < cuts.size()) {
      for (auto& [j, g] : pulled) {
        std::size_t& k = index[j];
        if (k < g.cuts().size() && g.cuts()[k] == cuts[cell]) ++k;
      }
    }
    left = std::move(right);
  }
  return total;
}

}  // namespace ietlab
