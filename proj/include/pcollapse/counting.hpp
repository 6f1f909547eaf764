// Exact lattice-point counts for the polytopes in polytopes.hpp, plus the
// closed form for admissible triangles.
#pragma once

#include <cstdint>
#include <span>

#include "pcollapse/arith.hpp"
#include "pcollapse/polytopes.hpp"

namespace pcollapse {

/// #{(x,y) >= 0 integral : u x + v y <= t}. Rational pairs with machine-sized
/// parameters take the integer kernel; everything else uses exact quadratic floors.
Integer count_triangle(const TrianglePair& pair, std::int64_t t);

/// Column sum with QuadNumber floors only. Reference for the integer kernel.
Integer count_triangle_quad(const TrianglePair& pair, std::int64_t t);

/// Column sum over the shorter leg with 128-bit integer floors. Returns false
/// (and leaves `out` untouched) when the parameters do not fit the kernel.
bool count_rational_triangle_int(const RationalTriangleParams& params, std::int64_t t, Integer& out);

/// #{(x,y) > 0 integral : u x + v y < t}.
Integer count_triangle_interior(const TrianglePair& pair, std::int64_t t);

/// #{x >= 0 integral : sum_i coeffs[i] x_i <= scale}, by slicing on the first coordinate.
Integer count_scaled_simplex(std::span<const QuadNumber> coeffs, const QuadNumber& scale);

Integer count_axis_simplex(const AxisSimplex& simplex, std::int64_t t);

/// #([t lo, t hi] intersected with Z).
Integer count_interval(const Interval& interval, std::int64_t t);

/// Row scan over a triangle with rational vertices, boundary included.
Integer count_rational_triangle2d(const RationalTriangle2D& triangle);

/// z = t mod alpha in [0, alpha); sigma = 1 iff alpha | t.
struct ClosedFormContext {
  Integer z;
  int sigma = 0;
};

ClosedFormContext closed_form_context(const Integer& alpha, std::int64_t t);

/// (t^2 beta + t alpha beta + z beta (alpha - z) + 2 alpha sigma) / (2 alpha).
/// Defined for negative t through the residue representative z in [0, alpha).
Rational closed_form_admissible(const AdmissiblePair& pair, std::int64_t t);

/// |I(t) - t^2/(2uv) - (1/u + 1/v) t / 2| / t. The only approximate quantity in the library.
long double asymptotic_deficit(const TrianglePair& pair, std::int64_t t);

}  // namespace pcollapse
