// ietlab — exact analysis of interval exchange transformations
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/error.hpp"

namespace ietlab {

/// Exact element of Q or of a real quadratic field Q(sqrt(D)).
///
/// Stored as a + b*sqrt(D) with rational a, b and a square-free integer
/// D > 1; b == 0 collapses to the rational representation (D dropped).
/// All predicates (sign, order, equality) are decided exactly; there is
/// no floating point anywhere in this class.
///
/// Values are immutable in spirit: every operation returns a fresh
/// Scalar, so instances can be shared freely across threads.
class Scalar {
public:
  Scalar() : a_(0), b_(0), d_(0) {}
  Scalar(long n) : a_(n), b_(0), d_(0) {}
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& q) : a_(q), b_(0), d_(0) { a_.canonicalize(); }
  explicit Scalar(const mpz_class& z) : a_(z), b_(0), d_(0) {}

  /// a + b*sqrt(d). Square factors of d are folded into b; d reduced to
  /// its square-free part (d == 1 after reduction yields a rational).
  static Scalar quadratic(const mpq_class& a, const mpq_class& b, std::uint64_t d);
  static Scalar sqrt_of(std::uint64_t d) { return quadratic(0, 1, d); }

  /// Parses "p/q" or "a+b*sqrt(D)" (whitespace-insensitive).
  /// Throws Error(parse_error) with the byte position of the problem.
  static Scalar parse(std::string_view text);

  bool is_rational() const { return d_ == 0; }
  bool is_integer() const { return d_ == 0 && a_.get_den() == 1; }
  bool is_zero() const { return d_ == 0 && a_ == 0; }

  /// Square-free radicand, or 0 for rationals.
  std::uint64_t radicand() const { return d_; }
  const mpq_class& rational_part() const { return a_; }
  const mpq_class& radical_part() const { return b_; }

  /// Exact sign in {-1, 0, +1}, decided by case analysis on a, b and a
  /// comparison of a^2 against b^2*D. Never approximates.
  int sign() const;

  /// Exact three-way comparison; throws incompatible_radicands for two
  /// irrational operands over different fields.
  static int compare(const Scalar& lhs, const Scalar& rhs);

  Scalar operator-() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);

  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
  Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

  friend bool operator==(const Scalar& x, const Scalar& y) { return compare(x, y) == 0; }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return compare(x, y) != 0; }
  friend bool operator<(const Scalar& x, const Scalar& y) { return compare(x, y) < 0; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return compare(x, y) <= 0; }
  friend bool operator>(const Scalar& x, const Scalar& y) { return compare(x, y) > 0; }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return compare(x, y) >= 0; }

  /// Exact floor; works for irrational values via integer square roots.
  mpz_class floor() const;

  /// x == floor + frac with 0 <= frac < 1, both exact.
  std::pair<mpz_class, Scalar> floor_split() const;
  Scalar frac() const { return floor_split().second; }

  /// Canonical exact text form, re-parseable by parse():
  /// "p", "p/q", "a+b*sqrt(D)", "a-b*sqrt(D)", "b*sqrt(D)", "sqrt(D)", ...
  std::string to_string() const;

  /// Fixed-point decimal with `digits` fractional digits, rounded toward
  /// minus infinity (directed). Computed exactly; no floating point.
  std::string to_decimal(int digits = 12) const;

private:
  // Invariants: b_ == 0  <=>  d_ == 0;  d_ square-free and > 1 otherwise.
  mpq_class a_, b_;
  std::uint64_t d_;

  Scalar(mpq_class a, mpq_class b, std::uint64_t d)
      : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (b_ == 0) d_ = 0;
    if (d_ == 0) b_ = 0;
  }

  static std::uint64_t merged_radicand(const Scalar& x, const Scalar& y);
};

/// Comma-separated scalar list, e.g. "2/3, 1/3" (used by lengths inputs).
std::vector<Scalar> parse_scalar_list(std::string_view text);

}  // namespace ietlab
