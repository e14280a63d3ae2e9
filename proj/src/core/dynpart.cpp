// ietlab — exact analysis of interval exchange transformations
// SPDX-License-Identifier: Apache-2.0

#include "core/dynpart.hpp"

#include <algorithm>

namespace ietlab {

// ---------------------------------------------------------------------------
// PartitionSweep
// ---------------------------------------------------------------------------

PartitionSweep::PartitionSweep(const Iet& t) : t_(&t) {
  gaps_.insert(Scalar(1));
  level_ = t.betas();
  for (const auto& b : level_) insert_level_point(b);
}

void PartitionSweep::advance() {
  for (auto& x : level_) x = t_->evaluate_inverse(x);
  ++n_;
  for (const auto& x : level_) insert_level_point(x);
}

void PartitionSweep::insert_level_point(const Scalar& x) {
  auto [it, inserted] = points_.insert(x);
  if (!inserted) {
    if (first_collision_ < 0) first_collision_ = n_;
    return;
  }
  if (x.sign() == 0) return;  // sits on the 0 boundary; cuts nothing
  // Split the cell [a, b) around x.
  Scalar a = (it == points_.begin()) ? Scalar(0) : *std::prev(it);
  auto next = std::next(it);
  Scalar b = (next == points_.end()) ? Scalar(1) : *next;
  gaps_.erase(gaps_.find(b - a));
  gaps_.insert(x - a);
  gaps_.insert(b - x);
}

Scalar PartitionSweep::eps() const {
  if (collided()) return Scalar(0);
  return *gaps_.begin();
}

Interval PartitionSweep::min_cell() const {
  Scalar e = eps();
  Scalar prev(0);
  for (const auto& x : points_) {
    if (x - prev == e) return {prev, x};
    prev = x;
  }
  return {prev, Scalar(1)};
}

// ---------------------------------------------------------------------------
// Partition / statistics
// ---------------------------------------------------------------------------

DynamicalPartition partition(const Iet& t, long n) {
  if (n < 0) throw Error(Errc::invalid_argument, "negative horizon");
  PartitionSweep sweep(t);
  for (long i = 0; i < n; ++i) sweep.advance();
  return {n, sweep.sorted_points(), sweep.eps(), sweep.collided()};
}

IdocResult idoc_check(const Iet& t, long N) {
  if (N < 1) throw Error(Errc::invalid_argument, "horizon must be >= 1");
  std::set<Scalar> base(t.betas().begin(), t.betas().end());
  std::vector<Scalar> level = t.betas();
  for (long n = 1; n <= N; ++n) {
    for (auto& x : level) {
      x = t.evaluate_inverse(x);
      if (base.count(x)) return {false, n, x};
    }
  }
  return {};
}

LinRecStat lin_rec_stat(const Iet& t, long N) {
  if (N < 1) throw Error(Errc::invalid_argument, "horizon must be >= 1");
  LinRecStat stat;
  stat.rows.reserve(N);
  PartitionSweep sweep(t);
  for (long n = 1; n <= N; ++n) {
    sweep.advance();
    LinRecRow row;
    row.n = n;
    row.eps_n = sweep.eps();
    row.n_eps_n = Scalar(n) * row.eps_n;
    if (n == 1 || row.n_eps_n < stat.min_n_eps_n) {
      stat.min_n_eps_n = row.n_eps_n;
      stat.argmin = n;
    }
    row.min_so_far = stat.min_n_eps_n;
    if (row.n_eps_n > Scalar(1)) stat.bound_holds = false;
    stat.rows.push_back(std::move(row));
  }
  stat.collision_n = sweep.first_collision_n();
  return stat;
}

BadApproxStat bad_approx_stat(const Iet& t, long N) {
  if (N < 1) throw Error(Errc::invalid_argument, "horizon must be >= 1");
  const auto& base = t.betas();
  if (base.empty())
    throw Error(Errc::empty_discontinuity_set, "map has no breakpoints (d = 1)");
  BadApproxStat stat;
  std::vector<Scalar> orbit = base;  // orbit[i] = T^n(beta_i)
  bool have = false;
  for (long n = 1; n <= N && !(have && stat.min.is_zero()); ++n) {
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      orbit[i] = t.evaluate(orbit[i]);
      for (const auto& q : base) {
        Scalar value = Scalar(n) * (q - orbit[i]).abs();
        if (!have || value < stat.min) {
          have = true;
          stat.min = std::move(value);
          stat.argmin_n = n;
          stat.argmin_p = base[i];
          stat.argmin_q = q;
        }
      }
    }
  }
  return stat;
}

// ---------------------------------------------------------------------------
// Towers
// ---------------------------------------------------------------------------

namespace {

// True discontinuity strictly inside (left, right)?
bool has_interior_point(const std::vector<Scalar>& sorted_points, const Interval& iv) {
  auto it = std::upper_bound(sorted_points.begin(), sorted_points.end(), iv.left);
  return it != sorted_points.end() && *it < iv.right;
}

}  // namespace

Tower Tower::truncated(long depth) const {
  if (depth < 1 || depth > p + q + 1)
    throw Error(Errc::invalid_argument, "truncation depth out of range");
  Tower out;
  out.j = j;
  out.q = std::min(q, depth - 1);
  out.p = depth - 1 - out.q;
  out.floors.assign(floors.begin() + (p - out.p), floors.begin() + (p + out.q + 1));
  return out;
}

Tower build_tower(const Iet& t, Interval j, long n, long max_steps) {
  if (j.empty()) throw Error(Errc::empty_interval, "tower base must have positive length");
  if (j.left.sign() < 0 || j.right > Scalar(1))
    throw Error(Errc::out_of_domain, "tower base must lie inside [0,1)");
  if (max_steps < 0) max_steps = std::max<long>(1024, 32 * (n + 2));

  Tower tower;
  tower.j = j;

  std::vector<Interval> forward;
  Interval top = j;
  while (tower.q < max_steps) {
    if (has_interior_point(t.discontinuities(), top)) break;
    Scalar shift = t.evaluate(top.left) - top.left;
    top = top.translated(shift);
    forward.push_back(top);
    ++tower.q;
  }
  tower.forward_capped = (tower.q == max_steps);

  std::vector<Interval> backward;
  Interval bottom = j;
  while (tower.p < max_steps) {
    if (has_interior_point(t.inverse_discontinuities(), bottom)) break;
    Scalar shift = t.evaluate_inverse(bottom.left) - bottom.left;
    bottom = bottom.translated(shift);
    backward.push_back(bottom);
    ++tower.p;
  }
  tower.backward_capped = (tower.p == max_steps);

  tower.floors.reserve(tower.p + tower.q + 1);
  for (auto it = backward.rbegin(); it != backward.rend(); ++it) tower.floors.push_back(*it);
  tower.floors.push_back(j);
  tower.floors.insert(tower.floors.end(), forward.begin(), forward.end());
  return tower;
}

LoopTowers loop_towers(const Iet& t, long n) {
  if (n < 1) throw Error(Errc::invalid_argument, "tower depth must be >= 1");
  EndpointGraph g = build_sigma(t.permutation());
  if (!is_type_w(g))
    throw Error(Errc::not_type_w, "permutation " + t.permutation().to_string() + " is not type W");

  PartitionSweep sweep(t);
  for (long i = 0; i < n; ++i) sweep.advance();
  if (sweep.collided())
    throw Error(Errc::idoc_violation,
                "orbit collision at n = " + std::to_string(sweep.first_collision_n()));

  LoopTowers result;
  result.eps_n = sweep.eps();
  result.loop = loop_through_zero(g);

  Scalar half = result.eps_n / Scalar(2);
  std::vector<Interval> tops;
  tops.push_back({Scalar(0), half});  // I_0
  for (std::size_t i = 1; i < result.loop.size(); ++i) {
    const Scalar& zeta = t.betas()[result.loop[i] - 1];
    tops.push_back({zeta - half, zeta + half});
  }

  for (const auto& top : tops) {
    Tower tower;
    tower.j = top;
    tower.q = 0;
    tower.p = n - 1;
    tower.floors.assign(1, top);
    Interval floor = top;
    for (long k = 1; k < n; ++k) {
      if (has_interior_point(t.inverse_discontinuities(), floor))
        throw Error(Errc::internal,
                    "tower floor crosses an inverse discontinuity at depth " + std::to_string(k));
      Scalar shift = t.evaluate_inverse(floor.left) - floor.left;
      floor = floor.translated(shift);
      tower.floors.push_back(floor);
    }
    std::reverse(tower.floors.begin(), tower.floors.end());
    result.measures.push_back(tower.union_measure());
    result.towers.push_back(std::move(tower));
  }

  Scalar n_eps = Scalar(n) * result.eps_n;
  result.measures_pass = result.measures[0] >= n_eps / Scalar(2);
  result.all_floors_disjoint = result.towers[0].floors_disjoint();
  for (std::size_t i = 1; i < result.towers.size(); ++i) {
    result.measures_pass = result.measures_pass && result.measures[i] >= n_eps;
    result.all_floors_disjoint =
        result.all_floors_disjoint && result.towers[i].floors_disjoint();
  }
  return result;
}

}  // namespace ietlab
