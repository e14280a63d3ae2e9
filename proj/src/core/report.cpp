// ietlab — exact analysis of interval exchange transformations
// SPDX-License-Identifier: Apache-2.0

#include "core/report.hpp"

#include <sstream>

namespace ietlab {

Json scalar_json(const Scalar& s, int digits) {
  Json j;
  j["exact"] = s.to_string();
  j["decimal"] = s.to_decimal(digits);
  return j;
}

Json perm_report(const Permutation& p) {
  EndpointGraph g = build_sigma(p);
  Json j;
  j["d"] = p.size();
  j["images"] = p.images();
  j["irreducible"] = p.is_irreducible();
  j["sigma"] = g.sigma;
  j["orbits"] = g.orbits;
  if (p.size() > 1) {
    j["type_w"] = is_type_w(g);
    j["loop_through_zero"] = loop_through_zero(g);
  } else {
    j["type_w"] = nullptr;  // suppressed for d = 1
  }
  return j;
}

namespace {

Json lengths_json(const Iet& t, int digits) {
  Json arr = Json::array();
  for (const auto& l : t.lengths()) arr.push_back(scalar_json(l, digits));
  return arr;
}

// Compact echo of the system a sweep ran on, so sweep reports stand alone.
Json system_json(const Iet& t) {
  Json j;
  j["permutation"] = t.permutation().images();
  Json lens = Json::array();
  for (const auto& l : t.lengths()) lens.push_back(l.to_string());
  j["lengths"] = lens;
  return j;
}

Json applicability_note(const Permutation& p, bool type_w) {
  Json j;
  bool irreducible = p.is_irreducible();
  j["irreducible"] = irreducible;
  j["type_w"] = type_w;
  if (irreducible && type_w) {
    j["mild_mixing_criterion"] =
        "applies: permutation certified irreducible and type W; for linearly "
        "recurrent lengths the system is mildly mixing";
    j["caveat"] =
        "linear recurrence is not certifiable at finite horizon; the sweep "
        "below is finite evidence only";
  } else {
    j["mild_mixing_criterion"] = "not applicable";
    Json reasons = Json::array();
    if (!irreducible) reasons.push_back("permutation is reducible");
    if (!type_w) reasons.push_back("permutation is not type W");
    j["reasons"] = reasons;
  }
  return j;
}

}  // namespace

Json analyze_report(const Iet& t, const AnalyzeParams& params, const std::string& provenance) {
  const int digits = params.digits;
  long N = params.horizon;
  long NR = params.rigidity_horizon > 0 ? params.rigidity_horizon : N;
  Scalar threshold = params.threshold.is_zero() ? params.eps : params.threshold;

  Json j;
  j["tool"] = {{"name", "ietlab"}, {"version", IETLAB_VERSION}};

  Json input;
  input["permutation"] = t.permutation().images();
  input["lengths"] = lengths_json(t, digits);
  input["normalized"] = t.was_normalized();
  input["field_radicand"] = t.radicand();
  if (!provenance.empty()) input["catalog_name"] = provenance;
  Json pj;
  pj["N"] = N;
  pj["rigidity_N"] = NR;
  pj["eps"] = params.eps.to_string();
  pj["threshold"] = threshold.to_string();
  pj["delta"] = params.delta.to_string();
  pj["b"] = params.window_radius;
  pj["digits"] = digits;
  input["params"] = pj;
  j["input"] = input;

  j["permutation"] = perm_report(t.permutation());

  Json extra;
  Json discs = Json::array();
  for (const auto& x : t.discontinuities()) discs.push_back(scalar_json(x, digits));
  extra["discontinuities"] = discs;
  extra["min_discontinuity_spacing"] = scalar_json(t.min_discontinuity_spacing(), digits);
  extra["canonical_form"] = piecewise_translation_json(t.forward_map(), digits);
  j["map"] = extra;

  bool has_breaks = !t.betas().empty();

  Json idoc;
  if (has_breaks) {
    IdocResult r = idoc_check(t, N);
    idoc["status"] = r.pass ? "pass" : "fail";
    idoc["N"] = N;
    if (!r.pass) {
      idoc["first_violation_n"] = r.first_violation;
      idoc["colliding_point"] = scalar_json(r.colliding_point, digits);
    }
  } else {
    idoc["status"] = "pass";  // vacuous: no breakpoints
    idoc["N"] = N;
    idoc["vacuous"] = true;
  }
  j["idoc"] = idoc;

  Json lin;
  {
    LinRecStat stat = lin_rec_stat(t, N);
    lin["N"] = N;
    lin["min_n_eps_n"] = scalar_json(stat.min_n_eps_n, digits);
    lin["argmin_n"] = stat.argmin;
    lin["n_eps_n_le_1"] = stat.bound_holds;
    lin["positive"] = stat.min_n_eps_n.sign() > 0;
    if (stat.collision_n >= 0) lin["collision_n"] = stat.collision_n;
    if (!stat.rows.empty())
      lin["eps_N"] = scalar_json(stat.rows.back().eps_n, digits);
  }
  j["linear_recurrence"] = lin;

  Json bad;
  if (has_breaks) {
    BadApproxStat stat = bad_approx_stat(t, N);
    bad["N"] = N;
    bad["min"] = scalar_json(stat.min, digits);
    bad["positive"] = stat.min.sign() > 0;
    bad["argmin"] = {{"n", stat.argmin_n},
                     {"p", stat.argmin_p.to_string()},
                     {"q", stat.argmin_q.to_string()}};
  } else {
    bad["status"] = "undefined: map has no breakpoints";
  }
  j["bad_approx"] = bad;

  Json rig;
  {
    RigidityProfile prof = rigidity_profile(t, NR, params.eps, threshold);
    rig["N"] = NR;
    rig["eps"] = params.eps.to_string();
    rig["threshold"] = threshold.to_string();
    rig["min_measure"] = scalar_json(prof.min_measure, digits);
    rig["argmin_n"] = prof.argmin;
    rig["candidate_times"] = prof.candidate_times;
    rig["note"] = prof.candidate_times.empty()
                      ? "no rigidity sequence detected up to N (not conclusive)"
                      : "rigidity candidates found (screening heuristic, not conclusive)";
  }
  j["rigidity"] = rig;

  j["applicability"] =
      applicability_note(t.permutation(), t.permutation().size() > 1 && is_type_w(t.permutation()));
  return j;
}

std::string eps_sweep_csv(const Iet& t, long N, int digits) {
  LinRecStat stat = lin_rec_stat(t, N);
  std::ostringstream out;
  out << "n,eps_n,n_eps_n,min_so_far,eps_n_dec,n_eps_n_dec,min_so_far_dec\n";
  for (const auto& row : stat.rows) {
    out << row.n << ',' << row.eps_n.to_string() << ',' << row.n_eps_n.to_string() << ','
        << row.min_so_far.to_string() << ',' << row.eps_n.to_decimal(digits) << ','
        << row.n_eps_n.to_decimal(digits) << ',' << row.min_so_far.to_decimal(digits) << '\n';
  }
  return out.str();
}

Json eps_sweep_json(const Iet& t, long N, int digits) {
  LinRecStat stat = lin_rec_stat(t, N);
  Json j;
  j["tool"] = {{"name", "ietlab"}, {"version", IETLAB_VERSION}};
  j["system"] = system_json(t);
  j["N"] = N;
  j["min_n_eps_n"] = scalar_json(stat.min_n_eps_n, digits);
  j["argmin_n"] = stat.argmin;
  j["n_eps_n_le_1"] = stat.bound_holds;
  if (stat.collision_n >= 0) j["collision_n"] = stat.collision_n;
  Json rows = Json::array();
  for (const auto& row : stat.rows)
    rows.push_back({{"n", row.n},
                    {"eps_n", row.eps_n.to_string()},
                    {"n_eps_n", row.n_eps_n.to_string()},
                    {"min_so_far", row.min_so_far.to_string()}});
  j["rows"] = rows;
  return j;
}

std::string rigidity_csv(const Iet& t, long N, const Scalar& eps, const Scalar& threshold,
                         int digits) {
  RigidityProfile prof = rigidity_profile(t, N, eps, threshold);
  std::ostringstream out;
  out << "n,measure,is_candidate,measure_dec\n";
  for (const auto& row : prof.rows) {
    out << row.n << ',' << row.measure.to_string() << ',' << (row.candidate ? 1 : 0) << ','
        << row.measure.to_decimal(digits) << '\n';
  }
  return out.str();
}

Json tower_json(const Tower& tower, int digits) {
  Json j;
  j["base"] = {{"left", scalar_json(tower.j.left, digits)},
               {"right", scalar_json(tower.j.right, digits)},
               {"length", scalar_json(tower.j.length(), digits)}};
  j["p"] = tower.p;
  j["q"] = tower.q;
  j["floor_count"] = tower.floors.size();
  j["backward_capped"] = tower.backward_capped;
  j["forward_capped"] = tower.forward_capped;
  j["floors_disjoint"] = tower.floors_disjoint();
  j["measure"] = scalar_json(tower.union_measure(), digits);
  Json floors = Json::array();
  for (const auto& f : tower.floors)
    floors.push_back({{"left", f.left.to_string()}, {"right", f.right.to_string()}});
  j["floors"] = floors;
  return j;
}

Json tower_report(const Iet& t, std::optional<Interval> base, long n, int digits) {
  Json j;
  j["tool"] = {{"name", "ietlab"}, {"version", IETLAB_VERSION}};
  j["system"] = system_json(t);
  j["n"] = n;
  Interval cell;
  if (base) {
    cell = *base;
  } else {
    PartitionSweep sweep(t);
    for (long i = 0; i < n; ++i) sweep.advance();
    if (sweep.collided())
      throw Error(Errc::idoc_violation,
                  "orbit collision at n = " + std::to_string(sweep.first_collision_n()) +
                      "; no positive-length minimal cell");
    cell = sweep.min_cell();
    j["eps_n"] = scalar_json(sweep.eps(), digits);
  }
  Tower tower = build_tower(t, cell, n);
  j["tower"] = tower_json(tower, digits);
  bool deep_enough = tower.p + tower.q >= n - 1;
  j["p_plus_q_ge_n_minus_1"] = deep_enough;
  if (deep_enough && n >= 1 && n <= tower.p + tower.q + 1)
    j["depth_n_stack"] = tower_json(tower.truncated(n), digits);
  return j;
}

Json rigidity_report(const Iet& t, long N, const Scalar& eps, const Scalar& threshold,
                     int digits) {
  RigidityProfile prof = rigidity_profile(t, N, eps, threshold);
  Json j;
  j["tool"] = {{"name", "ietlab"}, {"version", IETLAB_VERSION}};
  j["system"] = system_json(t);
  j["N"] = N;
  j["eps"] = eps.to_string();
  j["threshold"] = threshold.to_string();
  j["min_measure"] = scalar_json(prof.min_measure, digits);
  j["argmin_n"] = prof.argmin;
  j["candidate_times"] = prof.candidate_times;
  j["note"] = prof.candidate_times.empty()
                  ? "no rigidity sequence detected up to N (not conclusive)"
                  : "rigidity candidates found (screening heuristic, not conclusive)";
  Json rows = Json::array();
  for (const auto& row : prof.rows)
    rows.push_back({{"n", row.n},
                    {"measure", row.measure.to_string()},
                    {"candidate", row.candidate}});
  j["rows"] = rows;
  return j;
}

Json catalog_json(const Catalog& cat) {
  Json arr = Json::array();
  for (const auto& e : cat.entries()) {
    Json j;
    j["name"] = e.name;
    j["permutation"] = e.perm.images();
    Json lens = Json::array();
    for (const auto& l : e.lengths) lens.push_back(l.to_string());
    j["lengths"] = lens;
    Iet t = e.build();
    j["irreducible"] = e.perm.is_irreducible();
    j["type_w"] = e.perm.size() > 1 ? Json(is_type_w(e.perm)) : Json(nullptr);
    j["field_radicand"] = t.radicand();
    arr.push_back(std::move(j));
  }
  return arr;
}

Json piecewise_translation_json(const PiecewiseTranslation& p, int digits) {
  Json j;
  Json breaks = Json::array();
  for (const auto& x : p.breakpoints()) breaks.push_back(scalar_json(x, digits));
  Json shifts = Json::array();
  for (const auto& s : p.shifts()) shifts.push_back(scalar_json(s, digits));
  j["breakpoints"] = breaks;
  j["shifts"] = shifts;
  return j;
}

}  // namespace ietlab
