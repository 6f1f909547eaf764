#include "pcollapse/arith.hpp"

#include <cmath>
#include <ostream>

namespace pcollapse {

namespace {

int sgn(const Rational& r) { return ::sgn(r); }

// Sign of a + b*sqrt(d) where d is squarefree (or zero).
int sign_parts(const Rational& a, const Rational& b, const Integer& d) {
  const int sa = sgn(a);
  const int sb = sgn(b);
  if (sb == 0 || d == 0) return sa;
  if (sa >= 0 && sb >= 0) return 1;
  if (sa <= 0 && sb <= 0) return -1;
  const Rational lhs = a * a;
  const Rational rhs = b * b * d;
  // lhs == rhs is impossible for squarefree d > 1 and b != 0.
  return cmp(lhs, rhs) > 0 ? sa : sb;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  Integer z;
  if (z.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("malformed integer literal: " + std::string(text));
  }
  return z;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str(10);
  return r.get_num().get_str(10) + "/" + r.get_den().get_str(10);
}

Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil_of(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

SquarefreeSplit squarefree_split(const Integer& n) {
  if (n < 0) throw std::invalid_argument("squarefree_split of a negative integer");
  SquarefreeSplit out{Integer(1), Integer(1)};
  if (n == 0) {
    out.core = 0;
    return out;
  }
  Integer rest = n;
  for (unsigned long f = 2; Integer(f) * f <= rest; ++f) {
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), f) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), f);
      ++exponent;
    }
    for (unsigned i = 0; i < exponent / 2; ++i) out.square *= f;
    if (exponent % 2 == 1) out.core *= f;
  }
  out.core *= rest;
  return out;
}

QuadNumber::QuadNumber(const Rational& a) : a_(a) {}

QuadNumber QuadNumber::normalize(const Rational& a, const Rational& b, const Integer& d) {
  if (d < 0) throw std::invalid_argument("negative radicand");
  if (b == 0 || d == 0) return QuadNumber(a);
  const auto [square, core] = squarefree_split(d);
  Rational scaled_b = b * square;
  if (core == 1) return QuadNumber(Rational(a + scaled_b));
  return QuadNumber(a, std::move(scaled_b), core);
}

const Integer& QuadNumber::common_radicand(const QuadNumber& y, const char* op) const {
  if (d_ == 0) return y.d_;
  if (y.d_ == 0 || y.d_ == d_) return d_;
  throw RadicandMismatch(std::string("mixed radicands in ") + op + ": sqrt(" + to_string(d_) +
                         ") and sqrt(" + to_string(y.d_) + ")");
}

QuadNumber QuadNumber::conjugate() const { return QuadNumber(a_, -b_, d_); }

QuadNumber QuadNumber::operator-() const {
  if (is_rational()) return QuadNumber(Rational(-a_));
  return QuadNumber(-a_, -b_, d_);
}

QuadNumber QuadNumber::inverse() const {
  if (sign() == 0) throw DivisionByZero("inverse of zero");
  if (is_rational()) return QuadNumber(Rational(1 / a_));
  const Rational norm = a_ * a_ - b_ * b_ * d_;
  return QuadNumber(a_ / norm, -b_ / norm, d_);
}

QuadNumber& QuadNumber::operator+=(const QuadNumber& y) {
  const Integer d = common_radicand(y, "addition");
  a_ += y.a_;
  b_ += y.b_;
  d_ = d;
  if (b_ == 0) d_ = 0;
  return *this;
}

QuadNumber& QuadNumber::operator-=(const QuadNumber& y) {
  const Integer d = common_radicand(y, "subtraction");
  a_ -= y.a_;
  b_ -= y.b_;
  d_ = d;
  if (b_ == 0) d_ = 0;
  return *this;
}

QuadNumber& QuadNumber::operator*=(const QuadNumber& y) {
  const Integer d = common_radicand(y, "multiplication");
  if (d == 0) {
    a_ *= y.a_;
    return *this;
  }
  Rational a = a_ * y.a_ + b_ * y.b_ * d;
  Rational b = a_ * y.b_ + b_ * y.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = b_ == 0 ? Integer(0) : d;
  return *this;
}

QuadNumber& QuadNumber::operator/=(const QuadNumber& y) {
  common_radicand(y, "division");
  if (y.sign() == 0) throw DivisionByZero("division by zero");
  if (y.is_rational()) {
    a_ /= y.a_;
    b_ /= y.a_;
    return *this;
  }
  return *this *= y.inverse();
}

std::strong_ordering operator<=>(const QuadNumber& x, const QuadNumber& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int QuadNumber::sign() const { return sign_parts(a_, b_, d_); }

long double QuadNumber::approx() const {
  if (is_rational()) return static_cast<long double>(a_.get_d());
  return static_cast<long double>(a_.get_d()) +
         static_cast<long double>(b_.get_d()) * std::sqrt(static_cast<long double>(d_.get_d()));
}

Integer QuadNumber::floor() const {
  if (is_rational()) return floor_of(a_);
  Integer n;
  const long double estimate = approx();
  if (std::isfinite(estimate) && std::fabs(estimate) < 1e15L) {
    n = static_cast<double>(std::floor(estimate));
  } else {
    // floor(sqrt(b^2 d)) bounds |b| sqrt(d) to within one unit.
    const Integer root = sqrt(floor_of(b_ * b_ * d_));
    n = floor_of(a_) + (sgn(b_) > 0 ? root : Integer(-root - 1));
  }
  Rational shifted = a_ - n;
  while (sign_parts(shifted, b_, d_) < 0) {
    --n;
    shifted += 1;
  }
  while (sign_parts(shifted - 1, b_, d_) >= 0) {
    ++n;
    shifted -= 1;
  }
  return n;
}

Integer QuadNumber::ceil() const {
  Integer f = floor();
  if (is_rational() && is_integer(a_)) return f;
  return f + 1;
}

int quad_sign(const QuadNumber& x) { return x.sign(); }
Integer quad_floor(const QuadNumber& x) { return x.floor(); }

QuadNumber quad_sqrt(const Integer& n) { return QuadNumber::normalize(0, 1, n); }

QuadNumber parse_quad(std::string_view text) {
  text = trim(text);
  const auto first = text.find(':');
  if (first == std::string_view::npos) return QuadNumber(parse_rational(text));
  const auto second = text.find(':', first + 1);
  if (second == std::string_view::npos) {
    throw std::invalid_argument("quadratic literal must be a:b:d, got " + std::string(text));
  }
  const Integer d = parse_integer(text.substr(second + 1));
  if (d < 0) throw std::invalid_argument("negative radicand in " + std::string(text));
  return QuadNumber::normalize(parse_rational(text.substr(0, first)),
                               parse_rational(text.substr(first + 1, second - first - 1)), d);
}

std::string to_string(const QuadNumber& x) {
  if (x.is_rational()) return to_string(x.a());
  std::string out;
  if (x.a() != 0) out = to_string(x.a());
  if (sgn(x.b()) > 0 && !out.empty()) out += "+";
  if (x.b() == -1) {
    out += "-";
  } else if (x.b() != 1) {
    out += to_string(x.b()) + "*";
  }
  return out + "sqrt(" + to_string(x.radicand()) + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadNumber& x) { return os << to_string(x); }

}  // namespace pcollapse
