#include <doctest.h>

#include "pcollapse/criteria.hpp"
#include "pcollapse/polytopes.hpp"

using namespace pcollapse;

namespace {
QuadNumber q(long a_num, long a_den, long b_num, long b_den, long d) {
  return QuadNumber::normalize(make_rational(a_num, a_den), make_rational(b_num, b_den), d);
}
}  // namespace

TEST_CASE("admissible pairs from (alpha, beta)") {
  const auto golden = admissible_from_alpha_beta(3, 3);
  CHECK(golden.u == q(3, 2, 1, 2, 5));
  CHECK(golden.v == q(3, 2, -1, 2, 5));

  const auto sq2 = admissible_from_alpha_beta(2, 4);
  CHECK(sq2.u == q(1, 1, 1, 2, 2));
  CHECK(sq2.v == q(1, 1, -1, 2, 2));
  CHECK(sq2.v.inverse() == q(2, 1, 1, 1, 2));
  CHECK(sq2.u.inverse() == q(2, 1, -1, 1, 2));

  CHECK_THROWS_AS(admissible_from_alpha_beta(1, 1), NotIrrational);
  CHECK_THROWS_AS(admissible_from_alpha_beta(2, 2), NotIrrational);   // double root
  CHECK_THROWS_AS(admissible_from_alpha_beta(1, 4), NotIrrational);   // zero discriminant
  CHECK_NOTHROW(admissible_from_alpha_beta(1, 5));
}

TEST_CASE("admissible pairs satisfy both sums exactly") {
  for (long alpha = 1; alpha <= 100; ++alpha) {
    for (long beta = 1; alpha * beta <= 100; ++beta) {
      const Integer disc = admissible_discriminant(alpha, beta);
      if (disc <= 0 || is_perfect_square(disc)) {
        REQUIRE_THROWS_AS(admissible_from_alpha_beta(alpha, beta), NotIrrational);
        continue;
      }
      const auto pair = admissible_from_alpha_beta(alpha, beta);
      REQUIRE(pair.u + pair.v == QuadNumber(alpha));
      REQUIRE(pair.u.inverse() + pair.v.inverse() == QuadNumber(beta));
      REQUIRE(pair.u * pair.v == QuadNumber(make_rational(alpha, beta)));
      REQUIRE(pair.u.sign() > 0);
      REQUIRE(pair.v.sign() > 0);
      REQUIRE(pair.v < pair.u);
      REQUIRE(pair.pair().kind == PairClass::admissible);
    }
  }
}

TEST_CASE("triangle pair classification") {
  CHECK(TrianglePair::make(QuadNumber(make_rational(3, 2)), QuadNumber(make_rational(2, 3))).kind ==
        PairClass::rational);
  CHECK(TrianglePair::make(q(3, 2, 1, 2, 5), q(3, 2, -1, 2, 5)).kind == PairClass::admissible);
  CHECK(TrianglePair::make(QuadNumber(1), quad_sqrt(2)).kind == PairClass::other);
  CHECK_THROWS(TrianglePair::make(QuadNumber(0), QuadNumber(1)));
  CHECK_THROWS(TrianglePair::make(QuadNumber(1), q(1, 1, -1, 1, 2)));
  CHECK(parse_pair_class(to_string(PairClass::admissible)) == PairClass::admissible);
}

TEST_CASE("rational triangle parameters") {
  CHECK(denominator(RationalTriangleParams::make(1, 2, 2, 1)) == 2);
  CHECK(denominator(RationalTriangleParams::make(3, 1, 2, 3)) == 3);
  CHECK(denominator(RationalTriangleParams::make(1, 1, 1, 1)) == 1);
  CHECK_THROWS_AS(RationalTriangleParams::make(2, 4, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(RationalTriangleParams::make(0, 1, 1, 1), std::invalid_argument);
  const auto from = RationalTriangleParams::from_uv(QuadNumber(make_rational(6, 4)), QuadNumber(make_rational(2, 3)));
  CHECK(from == RationalTriangleParams::make(2, 3, 3, 2));
  // Irrational vertices have no denominator.
  const auto golden = admissible_from_alpha_beta(3, 3);
  CHECK_THROWS(RationalTriangleParams::from_uv(golden.u, golden.v));
  const auto sq2 = admissible_from_alpha_beta(2, 4);
  CHECK_THROWS(RationalTriangleParams::from_uv(sq2.u, sq2.v));
}

TEST_CASE("McAllister-Woods family") {
  CHECK(mcallister_woods_pair(3) == RationalTriangleParams::make(3, 1, 2, 3));
  CHECK(mcallister_woods_pair(2) == RationalTriangleParams::make(2, 1, 1, 2));
  CHECK(denominator(mcallister_woods_pair(5)) == 5);
  for (long p = 2; p <= 50; ++p) {
    const auto params = mcallister_woods_pair(p);
    REQUIRE(params.u() == make_rational(1, p));
    REQUIRE(params.v() == make_rational(p, p - 1));
    REQUIRE(check_collapse_criterion(params).all_hold());
  }

  const auto img = mcallister_woods_image(2, 1);
  CHECK(img.vertices[0] == RationalPoint{0, 0});
  CHECK(img.vertices[1] == RationalPoint{2, 0});
  CHECK(img.vertices[2] == RationalPoint{1, make_rational(1, 2)});
  const auto img32 = mcallister_woods_image(3, 2);
  CHECK(img32.vertices[1] == RationalPoint{6, 0});
  CHECK(img32.vertices[2] == RationalPoint{2, make_rational(4, 3)});
  const auto img23 = mcallister_woods_image(2, 3);
  CHECK(img23.vertices[1] == RationalPoint{6, 0});
  CHECK(img23.vertices[2] == RationalPoint{3, make_rational(3, 2)});
}

TEST_CASE("simplices, intervals and 2-D triangles") {
  const auto simplex = AxisSimplex::make({make_rational(1, 2), 3, 2});
  CHECK(simplex.dim() == 3);
  CHECK(simplex.coefficients()[0] == QuadNumber(2));
  CHECK_THROWS(AxisSimplex::make({}));
  CHECK_THROWS(AxisSimplex::make({1, -1}));
  CHECK_THROWS(Interval::make(QuadNumber(2), QuadNumber(1)));
  CHECK_NOTHROW(Interval::make(quad_sqrt(2), QuadNumber(3) + quad_sqrt(2)));
  CHECK_THROWS_AS(RationalTriangle2D::make({0, 0}, {1, 1}, {2, 2}), DegenerateTriangle);
  const auto tri = RationalTriangle2D::make({0, 0}, {2, 0}, {1, make_rational(1, 2)});
  CHECK(tri.doubled_signed_area() == 1);
  CHECK(tri.dilate(2).vertices[2] == RationalPoint{2, 1});
}

TEST_CASE("non-admissible pair from (2, 5/2)") {
  const Rational sum = 2;
  const Rational reciprocal_sum = make_rational(5, 2);
  const TrianglePair pair = triangle_from_sums(sum, reciprocal_sum);
  CHECK(pair.u == q(1, 1, 1, 5, 5));
  CHECK(pair.v == q(1, 1, -1, 5, 5));
  CHECK(pair.u + pair.v == QuadNumber(sum));
  CHECK(pair.u.inverse() + pair.v.inverse() == QuadNumber(reciprocal_sum));
  CHECK_FALSE((pair.u / pair.v).is_rational());
  CHECK_FALSE(admissible_scaling_factor(sum, reciprocal_sum).has_value());
  // An admissible pair scaled by 1/2 is recognized as such.
  CHECK(admissible_scaling_factor(make_rational(3, 2), 6) == Integer(2));
  CHECK(admissible_scaling_factor(3, 3) == Integer(1));
  CHECK_THROWS_AS(triangle_from_sums(2, 2), NotIrrational);
}
