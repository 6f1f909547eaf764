// Parameter objects for the polytopes whose lattice points we count.
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcollapse/arith.hpp"

namespace pcollapse {

/// The pair (u, v) is outside the admissible hypothesis: u/v would be rational or u, v complex.
class NotIrrational : public std::domain_error {
 public:
  explicit NotIrrational(const std::string& what) : std::domain_error(what) {}
};

class DegenerateTriangle : public std::domain_error {
 public:
  explicit DegenerateTriangle(const std::string& what) : std::domain_error(what) {}
};

enum class PairClass { rational, admissible, other };

std::string to_string(PairClass c);
PairClass parse_pair_class(const std::string& text);

/// Triangle T_{u,v} with vertices (0,0), (1/u,0), (0,1/v).
struct TrianglePair {
  QuadNumber u;
  QuadNumber v;
  PairClass kind = PairClass::other;

  /// Validates u, v > 0 and derives the class.
  static TrianglePair make(const QuadNumber& u, const QuadNumber& v);

  friend bool operator==(const TrianglePair&, const TrianglePair&) = default;
};

/// u = q/p and v = s/r in lowest terms.
struct RationalTriangleParams {
  Integer p;
  Integer q;
  Integer r;
  Integer s;

  /// Throws std::invalid_argument unless all entries are positive with gcd(p,q) = gcd(r,s) = 1.
  static RationalTriangleParams make(const Integer& p, const Integer& q, const Integer& r,
                                     const Integer& s);
  /// Reduces u and v to lowest terms; rejects irrational or nonpositive values.
  static RationalTriangleParams from_uv(const QuadNumber& u, const QuadNumber& v);

  Rational u() const { return make_rational(q, p); }
  Rational v() const { return make_rational(s, r); }
  TrianglePair pair() const;

  friend bool operator==(const RationalTriangleParams&, const RationalTriangleParams&) = default;
};

/// Positive u >= v with u + v = alpha and 1/u + 1/v = beta, u/v irrational.
struct AdmissiblePair {
  Integer alpha;
  Integer beta;
  QuadNumber u;
  QuadNumber v;

  TrianglePair pair() const { return TrianglePair{u, v, PairClass::admissible}; }
};

/// alpha*beta*(alpha*beta - 4): positive and non-square exactly when the pair is admissible.
Integer admissible_discriminant(const Integer& alpha, const Integer& beta);

/// Roots of beta x^2 - alpha beta x + alpha = 0. Throws NotIrrational outside the hypothesis.
AdmissiblePair admissible_from_alpha_beta(const Integer& alpha, const Integer& beta);

/// T_{u,v} with u + v = sum and 1/u + 1/v = reciprocal_sum, u >= v. Throws
/// NotIrrational unless u/v is a real irrational.
TrianglePair triangle_from_sums(const Rational& sum, const Rational& reciprocal_sum);

/// Smallest m >= 1 with T = m T' for an admissible T', i.e. m*sum and
/// reciprocal_sum/m both positive integers; nullopt when none exists.
std::optional<Integer> admissible_scaling_factor(const Rational& sum, const Rational& reciprocal_sum);

/// Least D with D*T integral: lcm(q, s).
Integer denominator(const RationalTriangleParams& params);

/// u = 1/p, v = p/(p-1): the triangle with vertices (0,0), (p,0), (0,(p-1)/p).
RationalTriangleParams mcallister_woods_pair(const Integer& p);

/// Right simplex with vertex L_i on axis i; lattice points satisfy sum x_i / L_i <= t.
struct AxisSimplex {
  std::vector<QuadNumber> legs;

  static AxisSimplex make(std::vector<QuadNumber> legs);
  std::size_t dim() const { return legs.size(); }
  /// Coefficients 1/L_i of the defining inequality.
  std::vector<QuadNumber> coefficients() const;

  friend bool operator==(const AxisSimplex&, const AxisSimplex&) = default;
};

/// Closed interval [lo, hi] with hi - lo exactly representable.
struct Interval {
  QuadNumber lo;
  QuadNumber hi;

  static Interval make(const QuadNumber& lo, const QuadNumber& hi);
};

struct RationalPoint {
  Rational x;
  Rational y;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

struct RationalTriangle2D {
  std::array<RationalPoint, 3> vertices;

  /// Throws DegenerateTriangle when the signed area is zero.
  static RationalTriangle2D make(const RationalPoint& a, const RationalPoint& b,
                                 const RationalPoint& c);
  Rational doubled_signed_area() const;
  RationalTriangle2D dilate(const Integer& t) const;
};

/// t-dilate of the triangle (0,0), (p,0), (1,(p-1)/p).
RationalTriangle2D mcallister_woods_image(const Integer& p, const Integer& t);

}  // namespace pcollapse
