// ietlab — exact analysis of interval exchange transformations
// SPDX-License-Identifier: Apache-2.0

#include "core/scalar.hpp"

#include <cctype>
#include <sstream>

namespace ietlab {

namespace {

// Splits d into s^2 * r with r square-free; returns {s, r}. Trial division
// covers every prime factor below 2^16, which fully normalizes any d < 2^32;
// a final perfect-square test catches the remaining large-square case.
std::pair<std::uint64_t, std::uint64_t> extract_square_part(std::uint64_t d) {
  std::uint64_t s = 1, r = 1;
  for (std::uint64_t p = 2; p <= 65536 && p * p <= d; ++p) {
    if (d % p) continue;
    int e = 0;
    while (d % p == 0) { d /= p; ++e; }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) r *= p;
  }
  mpz_class rest(static_cast<unsigned long>(d >> 32));
  rest <<= 32;
  rest += static_cast<unsigned long>(d & 0xffffffffull);
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
    s *= root.get_ui();
  } else {
    r *= d;
  }
  return {s, r};
}

mpq_class rational_square(const mpq_class& q) { return q * q; }

}  // namespace

Scalar::Scalar(long num, long den) : a_(num, den == 0 ? 1 : den), b_(0), d_(0) {
  if (den == 0) throw Error(Errc::division_by_zero, "rational with zero denominator");
  a_.canonicalize();
}

Scalar Scalar::quadratic(const mpq_class& a, const mpq_class& b, std::uint64_t d) {
  // mpq arithmetic presumes canonical operands; user-supplied values may not be.
  mpq_class ca = a, cb = b;
  ca.canonicalize();
  cb.canonicalize();
  if (cb == 0) return Scalar(ca);
  if (d == 0) throw Error(Errc::invalid_argument, "radicand must be positive");
  auto [s, r] = extract_square_part(d);
  mpq_class bb = cb * mpz_class(static_cast<unsigned long>(s));
  if (r == 1) return Scalar(mpq_class(ca + bb));
  return Scalar(ca, bb, r);
}

std::uint64_t Scalar::merged_radicand(const Scalar& x, const Scalar& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
  throw Error(Errc::incompatible_radicands,
              "cannot combine sqrt(" + std::to_string(x.d_) + ") with sqrt(" +
                  std::to_string(y.d_) + ")");
}

int Scalar::sign() const {
  int sa = sgn(a_);
  if (d_ == 0) return sa;
  int sb = sgn(b_);
  if (sa == 0) return sb;
  if (sb == 0) return sa;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 * D. Equality is impossible for a
  // square-free D > 1 with b != 0, so a tie signals a broken invariant.
  mpq_class lhs = rational_square(a_);
  mpq_class rhs = rational_square(b_) * mpz_class(static_cast<unsigned long>(d_));
  int c = cmp(lhs, rhs);
  if (c == 0) throw Error(Errc::internal, "non-square-free radicand slipped through");
  return (c > 0) ? sa : sb;
}

int Scalar::compare(const Scalar& lhs, const Scalar& rhs) {
  return (lhs - rhs).sign();
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-a_), mpq_class(-b_), d_); }

Scalar operator+(const Scalar& x, const Scalar& y) {
  std::uint64_t d = Scalar::merged_radicand(x, y);
  return Scalar(mpq_class(x.a_ + y.a_), mpq_class(x.b_ + y.b_), d);
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  std::uint64_t d = Scalar::merged_radicand(x, y);
  return Scalar(mpq_class(x.a_ - y.a_), mpq_class(x.b_ - y.b_), d);
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  std::uint64_t d = Scalar::merged_radicand(x, y);
  if (d == 0) return Scalar(mpq_class(x.a_ * y.a_));
  mpz_class dz(static_cast<unsigned long>(d));
  mpq_class a = x.a_ * y.a_ + x.b_ * y.b_ * dz;
  mpq_class b = x.a_ * y.b_ + x.b_ * y.a_;
  return Scalar(a, b, d);
}

Scalar operator/(const Scalar& x, const Scalar& y) {
  if (y.sign() == 0) throw Error(Errc::division_by_zero, "division by zero");
  std::uint64_t d = Scalar::merged_radicand(x, y);
  if (y.d_ == 0) return Scalar(mpq_class(x.a_ / y.a_), mpq_class(x.b_ / y.a_), d);
  // Multiply by the conjugate: 1/(a+b*sqrt(D)) = (a-b*sqrt(D)) / (a^2-b^2*D).
  mpz_class dz(static_cast<unsigned long>(y.d_));
  mpq_class norm = y.a_ * y.a_ - y.b_ * y.b_ * dz;
  if (norm == 0) throw Error(Errc::internal, "zero field norm for nonzero divisor");
  Scalar conj(mpq_class(y.a_ / norm), mpq_class(-y.b_ / norm), y.d_);
  return x * conj;
}

mpz_class Scalar::floor() const {
  mpz_class n;
  if (d_ == 0) {
    mpz_fdiv_q(n.get_mpz_t(), a_.get_num_mpz_t(), a_.get_den_mpz_t());
    return n;
  }
  // Write x = (p + q*sqrt(D)) / r with integers p, q and r > 0, then bracket
  // q*sqrt(D) by the integer square root of q^2*D.
  mpz_class r = a_.get_den() * b_.get_den();
  mpz_class p = a_.get_num() * b_.get_den();
  mpz_class q = b_.get_num() * a_.get_den();
  mpz_class s = q * q * mpz_class(static_cast<unsigned long>(d_));
  mpz_class t;
  mpz_sqrt(t.get_mpz_t(), s.get_mpz_t());  // t <= sqrt(s) < t+1
  mpz_class approx_num = (sgn(q) >= 0) ? mpz_class(p + t) : mpz_class(p - t - 1);
  mpz_fdiv_q(n.get_mpz_t(), approx_num.get_mpz_t(), r.get_mpz_t());
  // The estimate is within one of the truth; settle it with exact compares.
  while (*this < Scalar(n)) n -= 1;
  while (*this >= Scalar(mpz_class(n + 1))) n += 1;
  return n;
}

std::pair<mpz_class, Scalar> Scalar::floor_split() const {
  mpz_class n = floor();
  return {n, *this - Scalar(n)};
}

std::string Scalar::to_string() const {
  auto rat = [](const mpq_class& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
  };
  if (d_ == 0) return rat(a_);
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  mpq_class babs = ::abs(b_);
  std::string radical = (babs == 1) ? root : rat(babs) + "*" + root;
  std::string out;
  if (a_ != 0) {
    out = rat(a_);
    out += (sgn(b_) > 0) ? "+" : "-";
  } else if (sgn(b_) < 0) {
    out = "-";
  }
  return out + radical;
}

std::string Scalar::to_decimal(int digits) const {
  if (digits < 0) throw Error(Errc::invalid_argument, "negative digit count");
  mpz_class pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  Scalar scaled = *this * Scalar(pow10);
  mpz_class n = scaled.floor();
  bool neg = sgn(n) < 0;
  mpz_class mag = neg ? mpz_class(-n) : n;
  std::string s = mag.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  return neg ? "-" + s : s;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw Error(Errc::parse_error, what + " at position " + std::to_string(pos), pos);
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return mpz_class(std::string(text.substr(start, pos - start)), 10);
  }

  mpq_class rational() {
    mpz_class num = integer();
    if (accept('/')) {
      mpz_class den = integer();
      if (den == 0) fail("zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    return mpq_class(num);
  }

  bool accept_sqrt() {
    skip_ws();
    if (text.substr(pos, 4) == "sqrt") {
      pos += 4;
      return true;
    }
    return false;
  }

  std::uint64_t radicand() {
    if (!accept('(')) fail("expected '(' after sqrt");
    mpz_class d = integer();
    if (!accept(')')) fail("expected ')'");
    if (d <= 0 || !d.fits_ulong_p()) fail("radicand out of range");
    return d.get_ui();
  }
};

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  Cursor cur{text};
  if (cur.eof()) throw Error(Errc::parse_error, "empty scalar", 0);

  Scalar acc;
  bool first = true;
  while (!cur.eof()) {
    int s = 1;
    if (cur.accept('-')) {
      s = -1;
    } else if (cur.accept('+')) {
      // explicit plus
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    Scalar term;
    if (cur.accept_sqrt()) {
      term = Scalar::sqrt_of(cur.radicand());
    } else {
      mpq_class coeff = cur.rational();
      if (cur.accept('*')) {
        if (!cur.accept_sqrt()) cur.fail("expected sqrt after '*'");
        term = Scalar::quadratic(0, coeff, cur.radicand());
      } else {
        term = Scalar(coeff);
      }
    }
    acc = (s < 0) ? acc - term : acc + term;
    first = false;
  }
  return acc;
}

std::vector<Scalar> parse_scalar_list(std::string_view text) {
  std::vector<Scalar> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    try {
      out.push_back(Scalar::parse(piece));
    } catch (const Error& e) {
      throw Error(e.code(), "item " + std::to_string(out.size() + 1) + ": " + e.what(),
                  e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace ietlab
