// ietlab — exact analysis of interval exchange transformations
// SPDX-License-Identifier: Apache-2.0
//
// extern "C" surface over the core library. Exceptions are caught at the
// boundary and mapped to error codes; messages are kept per thread.

#include "ietlab/ietlab.h"

#include <cstring>
#include <exception>
#include <string>

#include "core/catalog.hpp"
#include "core/report.hpp"

namespace {

thread_local std::string g_last_error;

int map_code(const ietlab::Error& e) {
  using ietlab::Errc;
  switch (e.code()) {
    case Errc::parse_error:
      return IETLAB_ERR_PARSE;
    case Errc::division_by_zero:
    case Errc::incompatible_radicands:
    case Errc::not_a_bijection:
    case Errc::empty_input:
    case Errc::nonpositive_length:
    case Errc::dimension_mismatch:
    case Errc::invalid_argument:
    case Errc::malformed_catalog:
    case Errc::duplicate_name:
      return IETLAB_ERR_INVALID;
    case Errc::out_of_domain:
    case Errc::empty_interval:
    case Errc::empty_discontinuity_set:
    case Errc::not_type_w:
    case Errc::idoc_violation:
      return IETLAB_ERR_DOMAIN;
    case Errc::io_error:
      return IETLAB_ERR_IO;
    default:
      return IETLAB_ERR_INTERNAL;
  }
}

template <typename F>
int guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const ietlab::Error& e) {
    g_last_error = e.what();
    return map_code(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return IETLAB_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return IETLAB_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct ietlab_iet {
  ietlab::Iet value;
};

struct ietlab_catalog {
  ietlab::Catalog value;
};

extern "C" {

const char* ietlab_version(void) { return IETLAB_VERSION; }

const char* ietlab_last_error(void) { return g_last_error.c_str(); }

void ietlab_string_free(char* s) { delete[] s; }

int ietlab_iet_create(const char* perm_text, const char* lengths_text, int normalize,
                      ietlab_iet** out) {
  if (!out || !perm_text || !lengths_text) return IETLAB_ERR_NULL;
  return guarded([&] {
    ietlab::Permutation perm = ietlab::Permutation::parse(perm_text);
    std::vector<ietlab::Scalar> lengths = ietlab::parse_scalar_list(lengths_text);
    ietlab::Iet t(std::move(lengths), std::move(perm));
    if (t.was_normalized() && !normalize)
      throw ietlab::Error(ietlab::Errc::invalid_argument,
                          "lengths do not sum to 1 (pass normalize to rescale)");
    *out = new ietlab_iet{std::move(t)};
    return IETLAB_OK;
  });
}

void ietlab_iet_free(ietlab_iet* t) { delete t; }

int ietlab_catalog_builtin(ietlab_catalog** out) {
  if (!out) return IETLAB_ERR_NULL;
  return guarded([&] {
    *out = new ietlab_catalog{ietlab::Catalog::builtin()};
    return IETLAB_OK;
  });
}

int ietlab_catalog_load(const char* path, ietlab_catalog** out) {
  if (!out || !path) return IETLAB_ERR_NULL;
  return guarded([&] {
    *out = new ietlab_catalog{ietlab::Catalog::load_file(path)};
    return IETLAB_OK;
  });
}

void ietlab_catalog_free(ietlab_catalog* cat) { delete cat; }

int ietlab_catalog_list_json(const ietlab_catalog* cat, char** json_out) {
  if (!cat || !json_out) return IETLAB_ERR_NULL;
  return guarded([&] {
    *json_out = dup_string(ietlab::catalog_json(cat->value).dump(2) + "\n");
    return IETLAB_OK;
  });
}

int ietlab_catalog_build(const ietlab_catalog* cat, const char* name, ietlab_iet** out) {
  if (!cat || !name || !out) return IETLAB_ERR_NULL;
  return guarded([&] {
    const ietlab::CatalogEntry* entry = cat->value.find(name);
    if (!entry)
      throw ietlab::Error(ietlab::Errc::invalid_argument,
                          "no catalog entry named '" + std::string(name) + "'");
    *out = new ietlab_iet{entry->build()};
    return IETLAB_OK;
  });
}

int ietlab_perm_report_json(const char* perm_text, char** json_out) {
  if (!perm_text || !json_out) return IETLAB_ERR_NULL;
  return guarded([&] {
    ietlab::Json j = ietlab::perm_report(ietlab::Permutation::parse(perm_text));
    *json_out = dup_string(j.dump(2) + "\n");
    return IETLAB_OK;
  });
}

int ietlab_analyze_json(const ietlab_iet* t, const char* params_json, char** json_out) {
  if (!t || !json_out) return IETLAB_ERR_NULL;
  return guarded([&] {
    ietlab::AnalyzeParams params;
    std::string provenance;
    if (params_json && *params_json) {
      ietlab::Json p = ietlab::Json::parse(params_json, nullptr, false);
      if (p.is_discarded())
        throw ietlab::Error(ietlab::Errc::parse_error, "params is not valid JSON");
      if (p.contains("N")) params.horizon = p["N"].get<long>();
      if (p.contains("rigidity_N")) params.rigidity_horizon = p["rigidity_N"].get<long>();
      if (p.contains("eps")) params.eps = ietlab::Scalar::parse(p["eps"].get<std::string>());
      if (p.contains("threshold"))
        params.threshold = ietlab::Scalar::parse(p["threshold"].get<std::string>());
      if (p.contains("delta")) params.delta = ietlab::Scalar::parse(p["delta"].get<std::string>());
      if (p.contains("b")) params.window_radius = p["b"].get<long>();
      if (p.contains("digits")) params.digits = p["digits"].get<int>();
      if (p.contains("catalog_name")) provenance = p["catalog_name"].get<std::string>();
    }
    if (params.horizon < 1 || params.window_radius < 0 || params.digits < 1 ||
        params.eps.sign() <= 0 || params.delta.sign() <= 0)
      throw ietlab::Error(ietlab::Errc::invalid_argument, "invalid analysis parameters");
    ietlab::Json j = ietlab::analyze_report(t->value, params, provenance);
    *json_out = dup_string(j.dump(2) + "\n");
    return IETLAB_OK;
  });
}

int ietlab_eps_sweep_csv(const ietlab_iet* t, long N, int digits, char** csv_out) {
  if (!t || !csv_out) return IETLAB_ERR_NULL;
  return guarded([&] {
    if (digits < 1) throw ietlab::Error(ietlab::Errc::invalid_argument, "digits must be >= 1");
    *csv_out = dup_string(ietlab::eps_sweep_csv(t->value, N, digits));
    return IETLAB_OK;
  });
}

int ietlab_eps_sweep_json(const ietlab_iet* t, long N, int digits, char** json_out) {
  if (!t || !json_out) return IETLAB_ERR_NULL;
  return guarded([&] {
    if (digits < 1) throw ietlab::Error(ietlab::Errc::invalid_argument, "digits must be >= 1");
    *json_out = dup_string(ietlab::eps_sweep_json(t->value, N, digits).dump(2) + "\n");
    return IETLAB_OK;
  });
}

int ietlab_rigidity_csv(const ietlab_iet* t, long N, const char* eps, const char* threshold,
                        int digits, char** csv_out) {
  if (!t || !eps || !csv_out) return IETLAB_ERR_NULL;
  return guarded([&] {
    if (digits < 1) throw ietlab::Error(ietlab::Errc::invalid_argument, "digits must be >= 1");
    ietlab::Scalar e = ietlab::Scalar::parse(eps);
    ietlab::Scalar th = (threshold && *threshold) ? ietlab::Scalar::parse(threshold) : e;
    *csv_out = dup_string(ietlab::rigidity_csv(t->value, N, e, th, digits));
    return IETLAB_OK;
  });
}

int ietlab_rigidity_json(const ietlab_iet* t, long N, const char* eps, const char* threshold,
                         int digits, char** json_out) {
  if (!t || !eps || !json_out) return IETLAB_ERR_NULL;
  return guarded([&] {
    if (digits < 1) throw ietlab::Error(ietlab::Errc::invalid_argument, "digits must be >= 1");
    ietlab::Scalar e = ietlab::Scalar::parse(eps);
    ietlab::Scalar th = (threshold && *threshold) ? ietlab::Scalar::parse(threshold) : e;
    *json_out = dup_string(ietlab::rigidity_report(t->value, N, e, th, digits).dump(2) + "\n");
    return IETLAB_OK;
  });
}

int ietlab_tower_json(const ietlab_iet* t, const char* left, const char* right, long n,
                      int digits, char** json_out) {
  if (!t || !json_out) return IETLAB_ERR_NULL;
  if (!!left != !!right) return IETLAB_ERR_NULL;
  return guarded([&] {
    if (digits < 1) throw ietlab::Error(ietlab::Errc::invalid_argument, "digits must be >= 1");
    std::optional<ietlab::Interval> base;
    if (left)
      base = ietlab::Interval{ietlab::Scalar::parse(left), ietlab::Scalar::parse(right)};
    ietlab::Json j = ietlab::tower_report(t->value, base, n, digits);
    *json_out = dup_string(j.dump(2) + "\n");
    return IETLAB_OK;
  });
}

}  // extern "C"
