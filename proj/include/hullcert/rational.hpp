#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hullcert {

/// Thrown when text cannot be read as an exact rational.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact signed rational with arbitrary-precision numerator and denominator.
///
/// Every value is kept in canonical form: positive denominator and
/// gcd(|num|, den) = 1. Rendering with str() gives "p/q" (always with the
/// slash, "0/1" for zero) and parse(str()) round-trips.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v);  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class q);

  /// Accepts "p/q", an integer "p", or a finite decimal such as "-0.85".
  /// Decimals are converted exactly in base 10.
  static Rational parse(std::string_view text);

  /// Canonical "p/q".
  std::string str() const;
  /// Fixed-point rendering for display only; rounds toward zero.
  std::string to_decimal(int digits = 6) const;
  double to_double() const { return q_.get_d(); }

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  /// Largest integer not exceeding the value.
  mpz_class floor() const;

  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class q_;
};

Rational abs(const Rational& r);
/// Binomial coefficient C(n, 2) style helper: n*(n-1)/2 as a Rational.
Rational choose2(long n);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Parses a comma-separated list of rationals ("0.85,1/2,0").
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace hullcert
