// ietlab — exact analysis of interval exchange transformations
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <set>
#include <vector>

#include "core/iet.hpp"

namespace ietlab {

/// Incrementally accumulates the point set  union of T^{-i}B for 0 <= i <= n,
/// where B = {beta_1..beta_{d-1}} is the formal breakpoint set, maintaining
/// the multiset of cell lengths of the induced partition of [0,1).
///
/// A repeated point (the union collides with itself) marks the partition as
/// degenerate: eps() reports 0 from that step on. A point landing exactly on
/// 0 cuts nothing and is recorded without affecting the cells.
class PartitionSweep {
public:
  explicit PartitionSweep(const Iet& t);

  long n() const { return n_; }
  /// Advances to level n+1 by pulling the current level through T^{-1}.
  void advance();

  /// Minimal cell length; exactly 0 once a collision has occurred,
  /// exactly 1 while there are no cut points.
  Scalar eps() const;
  bool collided() const { return first_collision_ >= 0; }
  long first_collision_n() const { return first_collision_; }

  std::vector<Scalar> sorted_points() const { return {points_.begin(), points_.end()}; }
  std::size_t point_count() const { return points_.size(); }

  /// Left endpoint of some cell of minimal length (undefined once collided).
  Interval min_cell() const;

private:
  void insert_level_point(const Scalar& x);

  const Iet* t_;
  long n_ = 0;
  long first_collision_ = -1;
  std::vector<Scalar> level_;       // T^{-n} B, exact
  std::set<Scalar> points_;         // accumulated distinct union
  std::multiset<Scalar> gaps_;      // cell lengths of the induced partition
};

struct DynamicalPartition {
  long n = 0;
  std::vector<Scalar> points;
  Scalar eps;
  bool collision = false;
};
DynamicalPartition partition(const Iet& t, long n);

struct IdocResult {
  bool pass = true;
  long first_violation = -1;  // smallest n with B intersecting T^{-n}B
  Scalar colliding_point;     // the element of B that is hit
};
/// Checks B and T^{-n}B disjoint for all 1 <= n <= N by direct iteration.
/// Vacuously passes when B is empty.
IdocResult idoc_check(const Iet& t, long N);

struct LinRecRow {
  long n = 0;
  Scalar eps_n;
  Scalar n_eps_n;
  Scalar min_so_far;
};
struct LinRecStat {
  std::vector<LinRecRow> rows;   // n = 1..N
  Scalar min_n_eps_n;
  long argmin = 0;
  bool bound_holds = true;       // n * eps_n <= 1 throughout
  long collision_n = -1;         // -1 when no collision up to N
};
LinRecStat lin_rec_stat(const Iet& t, long N);

struct BadApproxStat {
  Scalar min;        // min over n <= N and p, q in B of n * |q - T^n(p)|
  long argmin_n = 0;
  Scalar argmin_p, argmin_q;
};
/// Throws empty_discontinuity_set when B is empty (d = 1).
BadApproxStat bad_approx_stat(const Iet& t, long N);

/// A stack of floors T^{-p}J, ..., J, ..., T^qJ, each floor a single
/// translate of the one below.
struct Tower {
  Interval j;
  long p = 0, q = 0;
  std::vector<Interval> floors;  // size p+q+1, bottom first; floors[p] == j
  bool backward_capped = false;  // greedy growth stopped by the step cap,
  bool forward_capped = false;   // not by a discontinuity

  Scalar union_measure() const { return ietlab::union_measure(floors); }
  bool floors_disjoint() const { return pairwise_disjoint(floors); }

  /// Sub-tower with exactly `depth` floors (p'+q' = depth-1), grown forward
  /// first: q' = min(q, depth-1), p' = depth-1-q'. This is the stack whose
  /// floors are guaranteed disjoint when |J| <= eps_depth; the greedy-maximal
  /// extension may wrap around and overlap itself.
  Tower truncated(long depth) const;
};

/// Greedy-maximal tower over J: grows forward while the top floor has no
/// discontinuity of T in its interior, and backward while the bottom floor
/// has no discontinuity of T^{-1} in its interior. Each direction stops
/// after max_steps if no discontinuity intervenes (maps with few
/// discontinuities never stop on their own); max_steps < 0 selects the
/// default cap max(1024, 32*(n+2)).
Tower build_tower(const Iet& t, Interval j, long n, long max_steps = -1);

struct LoopTowers {
  Scalar eps_n;
  std::vector<int> loop;                  // sigma-orbit of 0 (vertex indices)
  std::vector<Tower> towers;              // tau_0 .. tau_s, top floor I_i
  std::vector<Scalar> measures;           // exact union measure per tower
  bool measures_pass = false;             // tau_i >= n*eps_n (i>=1), tau_0 >= n*eps_n/2
  bool all_floors_disjoint = false;
};
/// Towers over the loop through 0: I_i = [zeta_i - eps_n/2, zeta_i + eps_n/2)
/// for the interior loop vertices and I_0 = [0, eps_n/2), each taken as the
/// TOP floor of a depth-n tower (floors T^{-(n-1)}I_i, ..., I_i).
/// Throws not_type_w / idoc_violation when the preconditions fail.
LoopTowers loop_towers(const Iet& t, long n);

}  // namespace ietlab
