// ietlab — exact analysis of interval exchange transformations
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ietlab {

enum class Errc {
  ok = 0,
  parse_error,
  division_by_zero,
  incompatible_radicands,
  not_a_bijection,
  empty_input,
  nonpositive_length,
  dimension_mismatch,
  out_of_domain,
  empty_interval,
  empty_discontinuity_set,
  not_type_w,
  idoc_violation,
  malformed_catalog,
  duplicate_name,
  io_error,
  invalid_argument,
  internal,
};

/// Single exception type for the whole library; the code tells callers
/// (and the C boundary) which contract was violated.
class Error : public std::runtime_error {
public:
  static constexpr std::size_t no_position = static_cast<std::size_t>(-1);

  Error(Errc code, std::string message, std::size_t position = no_position)
      : std::runtime_error(std::move(message)), code_(code), position_(position) {}

  Errc code() const noexcept { return code_; }

  /// Byte offset into the offending input for parse errors; no_position otherwise.
  std::size_t position() const noexcept { return position_; }

private:
  Errc code_;
  std::size_t position_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ok: return "ok";
    case Errc::parse_error: return "parse_error";
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::incompatible_radicands: return "incompatible_radicands";
    case Errc::not_a_bijection: return "not_a_bijection";
    case Errc::empty_input: return "empty_input";
    case Errc::nonpositive_length: return "nonpositive_length";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::out_of_domain: return "out_of_domain";
    case Errc::empty_interval: return "empty_interval";
    case Errc::empty_discontinuity_set: return "empty_discontinuity_set";
    case Errc::not_type_w: return "not_type_w";
    case Errc::idoc_violation: return "idoc_violation";
    case Errc::malformed_catalog: return "malformed_catalog";
    case Errc::duplicate_name: return "duplicate_name";
    case Errc::io_error: return "io_error";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace ietlab
