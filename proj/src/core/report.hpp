// ietlab — exact analysis of interval exchange transformations
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "core/catalog.hpp"
#include "core/diagnostics.hpp"
#include "core/dynpart.hpp"
#include "core/iet.hpp"

namespace ietlab {

using Json = nlohmann::ordered_json;

/// Default analysis parameters; every field is overridable from the CLI.
struct AnalyzeParams {
  long horizon = 500;          // N for idoc / eps / bad-approx sweeps
  long rigidity_horizon = 0;   // 0: same as horizon
  Scalar eps{1, 100};
  Scalar threshold;            // zero => defaults to eps
  Scalar delta{1, 100};        // echoed; window diagnostics are library-level
  long window_radius = 2;      // b
  int digits = 12;
};

/// Exact + decimal rendering of a scalar.
Json scalar_json(const Scalar& s, int digits = 12);

/// Combinatorial facts: sigma, orbits, irreducibility, type W, loop through 0.
Json perm_report(const Permutation& p);

/// Full machine-readable analysis report. Deterministic: identical inputs
/// produce byte-identical dumps.
Json analyze_report(const Iet& t, const AnalyzeParams& params,
                    const std::string& provenance = "");

/// CSV sweeps (exact strings plus fixed-digit decimals).
std::string eps_sweep_csv(const Iet& t, long N, int digits = 12);
Json eps_sweep_json(const Iet& t, long N, int digits = 12);
std::string rigidity_csv(const Iet& t, long N, const Scalar& eps, const Scalar& threshold,
                         int digits = 12);

Json tower_json(const Tower& tower, int digits = 12);
/// Tower over an explicit base interval, or over a minimal partition cell
/// at horizon n when no base is given.
Json tower_report(const Iet& t, std::optional<Interval> base, long n, int digits = 12);

Json rigidity_report(const Iet& t, long N, const Scalar& eps, const Scalar& threshold,
                     int digits = 12);

Json catalog_json(const Catalog& cat);

Json piecewise_translation_json(const PiecewiseTranslation& p, int digits = 12);

}  // namespace ietlab
