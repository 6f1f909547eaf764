#include "pcollapse/sequences.hpp"

#include <array>
#include <stdexcept>

namespace pcollapse {

Integer k_fib(const Integer& k, long n) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (n < 0) throw std::invalid_argument("index must be nonnegative");
  Integer prev = 0;
  Integer cur = 1;
  if (n == 0) return prev;
  for (long i = 1; i < n; ++i) {
    Integer next = k * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool verify_coprimality(const Integer& k, long n) {
  if (n < 1) throw std::invalid_argument("index must be positive");
  const Integer fn = k_fib(k, n);
  return gcd(fn, k_fib(k, n - 1)) == 1 && gcd(fn, k) == 1;
}

bool verify_cassini(const Integer& k, long n) {
  if (n < 1) throw std::invalid_argument("index must be positive");
  const Integer fn = k_fib(k, n);
  const Integer fm = k_fib(k, n - 1);
  const Integer value = fn * fn - k * fm * fn - fm * fm + (n % 2 == 0 ? 1 : -1);
  return value == 0;
}

RationalTriangleParams fib_triangle(const Integer& k, long n) {
  if (n < 2) throw std::invalid_argument("fib_triangle needs n >= 2");
  const Integer fn = k_fib(k, n);
  const Integer fm = k_fib(k, n - 1);
  // u = q/p = F_n/F_{n-1}; v = s/r = F_{n-1}/F_n.
  return RationalTriangleParams::make(fm, fn, fn, fm);
}

Integer a_sequence(long n) {
  if (n < 1) throw std::invalid_argument("a_sequence index starts at 1");
  std::array<Integer, 4> window{Integer(2), Integer(3), Integer(10), Integer(17)};
  if (n <= 4) return window[static_cast<std::size_t>(n - 1)];
  for (long i = 5; i <= n; ++i) {
    Integer next = 6 * window[2] - window[0];
    window = {window[1], window[2], window[3], std::move(next)};
  }
  return window[3];
}

AxisSimplex tetra_family(long n) {
  if (n < 1) throw std::invalid_argument("tetra_family index starts at 1");
  const Integer even = a_sequence(2 * n);
  const Integer odd = a_sequence(2 * n + 1);
  return AxisSimplex::make({QuadNumber(make_rational(1, 2)), QuadNumber(make_rational(odd, even)),
                            QuadNumber(make_rational(2 * even, odd))});
}

AxisSimplex limit_tetrahedron() {
  return AxisSimplex::make({QuadNumber(make_rational(1, 2)), QuadNumber::normalize(2, 1, 2),
                            QuadNumber::normalize(2, -1, 2)});
}

Rational tetra_polynomial(long t) {
  const Rational x(t);
  return x * x * x / 6 + x * x + 11 * x / 6 + 1;
}

}  // namespace pcollapse
