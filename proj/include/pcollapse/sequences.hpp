// k-Fibonacci numbers, the tetrahedron sequence a_n, and the triangle and
// tetrahedron families built from them.
#pragma once

#include "pcollapse/arith.hpp"
#include "pcollapse/polytopes.hpp"

namespace pcollapse {

/// F_0 = 0, F_1 = 1, F_n = k F_{n-1} + F_{n-2}.
Integer k_fib(const Integer& k, long n);

/// gcd(F_n, F_{n-1}) = 1 and gcd(F_n, k) = 1.
bool verify_coprimality(const Integer& k, long n);

/// F_n^2 - k F_{n-1} F_n - F_{n-1}^2 + (-1)^n == 0.
bool verify_cassini(const Integer& k, long n);

/// u = F_n/F_{n-1}, v = F_{n-1}/F_n.
RationalTriangleParams fib_triangle(const Integer& k, long n);

/// a_1..a_4 = 2, 3, 10, 17 and a_n = 6 a_{n-2} - a_{n-4}.
Integer a_sequence(long n);

/// Legs (1/2, a_{2n+1}/a_{2n}, 2 a_{2n}/a_{2n+1}).
AxisSimplex tetra_family(long n);

/// Legs (1/2, 2+sqrt(2), 2-sqrt(2)).
AxisSimplex limit_tetrahedron();

/// t^3/6 + t^2 + 11t/6 + 1.
Rational tetra_polynomial(long t);

}  // namespace pcollapse
