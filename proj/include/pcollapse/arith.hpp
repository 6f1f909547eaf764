// Exact rationals and real quadratic irrationals a + b*sqrt(d).
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pcollapse {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when two irrational operands live in different quadratic fields.
class RadicandMismatch : public std::domain_error {
 public:
  explicit RadicandMismatch(const std::string& what) : std::domain_error(what) {}
};

class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// Rational helpers. mpq_class keeps num/den canonical after every operation.
Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(std::string_view text);  // "n" or "n/d"
std::string to_string(const Rational& r);        // "n/d", or "n" when den is 1
std::string to_string(const Integer& z);
Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);
bool is_integer(const Rational& r);
bool is_perfect_square(const Integer& n);

/// Largest squarefree divisor split: n = square^2 * core.
struct SquarefreeSplit {
  Integer square;
  Integer core;
};
SquarefreeSplit squarefree_split(const Integer& n);

/// Exact value a + b*sqrt(d) with rational a, b and squarefree radicand d.
/// Rational values always carry d = 0 and b = 0.
class QuadNumber {
 public:
  QuadNumber() = default;
  QuadNumber(const Rational& a);  // NOLINT(google-explicit-constructor)
  QuadNumber(long a) : QuadNumber(Rational(a)) {}  // NOLINT(google-explicit-constructor)

  /// Canonicalizes: square factors of d move into b, d in {0,1} or b == 0 folds into a.
  static QuadNumber normalize(const Rational& a, const Rational& b, const Integer& d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& radicand() const { return d_; }
  bool is_rational() const { return d_ == 0; }

  QuadNumber conjugate() const;
  QuadNumber inverse() const;

  /// Exact sign in {-1, 0, +1}.
  int sign() const;

  /// Unique integer n with n <= x < n + 1.
  Integer floor() const;
  Integer ceil() const;

  /// Approximate value, for diagnostics and asymptotic checks only.
  long double approx() const;

  QuadNumber& operator+=(const QuadNumber& y);
  QuadNumber& operator-=(const QuadNumber& y);
  QuadNumber& operator*=(const QuadNumber& y);
  QuadNumber& operator/=(const QuadNumber& y);

  friend QuadNumber operator+(QuadNumber x, const QuadNumber& y) { return x += y; }
  friend QuadNumber operator-(QuadNumber x, const QuadNumber& y) { return x -= y; }
  friend QuadNumber operator*(QuadNumber x, const QuadNumber& y) { return x *= y; }
  friend QuadNumber operator/(QuadNumber x, const QuadNumber& y) { return x /= y; }
  QuadNumber operator-() const;

  friend bool operator==(const QuadNumber& x, const QuadNumber& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Ordering by exact value; throws RadicandMismatch across distinct fields.
  friend std::strong_ordering operator<=>(const QuadNumber& x, const QuadNumber& y);

 private:
  QuadNumber(Rational a, Rational b, Integer d)
      : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}
  const Integer& common_radicand(const QuadNumber& y, const char* op) const;

  Rational a_{0};
  Rational b_{0};
  Integer d_{0};
};

int quad_sign(const QuadNumber& x);
Integer quad_floor(const QuadNumber& x);

/// sqrt(n) for a nonnegative integer n, as an exact QuadNumber.
QuadNumber quad_sqrt(const Integer& n);

/// Parses "n/d" (rational) or "a:b:d" meaning a + b*sqrt(d).
QuadNumber parse_quad(std::string_view text);
std::string to_string(const QuadNumber& x);
std::ostream& operator<<(std::ostream& os, const QuadNumber& x);

}  // namespace pcollapse
