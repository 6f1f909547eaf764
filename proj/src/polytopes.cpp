#include "pcollapse/polytopes.hpp"

namespace pcollapse {

std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::rational:
      return "rational";
    case PairClass::admissible:
      return "admissible";
    case PairClass::other:
      return "other";
  }
  return "other";
}

PairClass parse_pair_class(const std::string& text) {
  if (text == "rational") return PairClass::rational;
  if (text == "admissible") return PairClass::admissible;
  if (text == "other") return PairClass::other;
  throw std::invalid_argument("unknown triangle class: " + text);
}

TrianglePair TrianglePair::make(const QuadNumber& u, const QuadNumber& v) {
  if (u.sign() <= 0 || v.sign() <= 0) throw std::invalid_argument("triangle parameters must be positive");
  if (u.is_rational() && v.is_rational()) return TrianglePair{u, v, PairClass::rational};
  PairClass kind = PairClass::other;
  try {
    const QuadNumber sum = u + v;
    const QuadNumber reciprocal_sum = u.inverse() + v.inverse();
    const QuadNumber ratio = u / v;
    const bool integral = sum.is_rational() && is_integer(sum.a()) && reciprocal_sum.is_rational() &&
                          is_integer(reciprocal_sum.a());
    if (integral && !ratio.is_rational()) kind = PairClass::admissible;
  } catch (const RadicandMismatch&) {
    // u and v in different fields: sums cannot both be rational.
  }
  return TrianglePair{u, v, kind};
}

RationalTriangleParams RationalTriangleParams::make(const Integer& p, const Integer& q,
                                                    const Integer& r, const Integer& s) {
  if (p <= 0 || q <= 0 || r <= 0 || s <= 0) {
    throw std::invalid_argument("triangle parameters p, q, r, s must be positive");
  }
  if (gcd(p, q) != 1 || gcd(r, s) != 1) {
    throw std::invalid_argument("triangle parameters must be in lowest terms");
  }
  return RationalTriangleParams{p, q, r, s};
}

RationalTriangleParams RationalTriangleParams::from_uv(const QuadNumber& u, const QuadNumber& v) {
  if (!u.is_rational() || !v.is_rational()) {
    throw std::invalid_argument("irrational vertices have no denominator");
  }
  const Rational& ru = u.a();
  const Rational& rv = v.a();
  return make(ru.get_den(), ru.get_num(), rv.get_den(), rv.get_num());
}

TrianglePair RationalTriangleParams::pair() const {
  return TrianglePair{QuadNumber(u()), QuadNumber(v()), PairClass::rational};
}

Integer admissible_discriminant(const Integer& alpha, const Integer& beta) {
  const Integer product = alpha * beta;
  return product * (product - 4);
}

AdmissiblePair admissible_from_alpha_beta(const Integer& alpha, const Integer& beta) {
  if (alpha < 1 || beta < 1) throw std::invalid_argument("alpha and beta must be positive");
  const Integer disc = admissible_discriminant(alpha, beta);
  if (disc <= 0) {
    throw NotIrrational("alpha*beta <= 4: no real pair with u/v irrational");
  }
  if (is_perfect_square(disc)) {
    throw NotIrrational("alpha*beta*(alpha*beta-4) is a perfect square: u/v rational");
  }
  const Rational half_over_beta = make_rational(1, 2 * beta);
  const Rational center = Rational(alpha * beta) * half_over_beta;
  const QuadNumber root = QuadNumber::normalize(0, half_over_beta, disc);
  return AdmissiblePair{alpha, beta, QuadNumber(center) + root, QuadNumber(center) - root};
}

TrianglePair triangle_from_sums(const Rational& sum, const Rational& reciprocal_sum) {
  if (sum <= 0 || reciprocal_sum <= 0) throw std::invalid_argument("sums must be positive");
  // Roots of b x^2 - a b x + a = 0 with a = sum, b = reciprocal_sum.
  const Rational product = sum * reciprocal_sum;
  const Rational disc = product * product - 4 * product;
  if (disc <= 0) throw NotIrrational("no real pair with u/v irrational");
  if (is_perfect_square(disc.get_num()) && is_perfect_square(disc.get_den())) {
    throw NotIrrational("discriminant is a rational square: u/v rational");
  }
  // sqrt(n/d) = sqrt(n d) / d
  const Rational scale = make_rational(1, 2 * disc.get_den()) / reciprocal_sum;
  const QuadNumber root = QuadNumber::normalize(0, scale, Integer(disc.get_num() * disc.get_den()));
  const QuadNumber center(Rational(sum / 2));
  return TrianglePair::make(center + root, center - root);
}

std::optional<Integer> admissible_scaling_factor(const Rational& sum, const Rational& reciprocal_sum) {
  if (sum <= 0 || reciprocal_sum <= 0) throw std::invalid_argument("sums must be positive");
  if (!is_integer(reciprocal_sum)) return std::nullopt;
  const Integer top = reciprocal_sum.get_num();
  for (Integer m = 1; m <= top; ++m) {
    if (mpz_divisible_p(top.get_mpz_t(), m.get_mpz_t()) == 0) continue;
    if (is_integer(Rational(sum * m))) return m;
  }
  return std::nullopt;
}

Integer denominator(const RationalTriangleParams& params) { return lcm(params.q, params.s); }

RationalTriangleParams mcallister_woods_pair(const Integer& p) {
  if (p < 2) throw std::invalid_argument("McAllister-Woods family needs p >= 2");
  return RationalTriangleParams::make(p, 1, p - 1, p);
}

AxisSimplex AxisSimplex::make(std::vector<QuadNumber> legs) {
  if (legs.empty()) throw std::invalid_argument("simplex needs at least one leg");
  for (const auto& leg : legs) {
    if (leg.sign() <= 0) throw std::invalid_argument("simplex legs must be positive");
  }
  return AxisSimplex{std::move(legs)};
}

std::vector<QuadNumber> AxisSimplex::coefficients() const {
  std::vector<QuadNumber> out;
  out.reserve(legs.size());
  for (const auto& leg : legs) out.push_back(leg.inverse());
  return out;
}

Interval Interval::make(const QuadNumber& lo, const QuadNumber& hi) {
  // Throws RadicandMismatch when hi - lo is not representable.
  if ((hi - lo).sign() <= 0) throw std::invalid_argument("interval needs lo < hi");
  return Interval{lo, hi};
}

RationalTriangle2D RationalTriangle2D::make(const RationalPoint& a, const RationalPoint& b,
                                            const RationalPoint& c) {
  RationalTriangle2D tri{{a, b, c}};
  if (tri.doubled_signed_area() == 0) throw DegenerateTriangle("triangle has zero area");
  return tri;
}

Rational RationalTriangle2D::doubled_signed_area() const {
  const auto& [a, b, c] = vertices;
  return (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
}

RationalTriangle2D RationalTriangle2D::dilate(const Integer& t) const {
  RationalTriangle2D out = *this;
  for (auto& vertex : out.vertices) {
    vertex.x *= t;
    vertex.y *= t;
  }
  return out;
}

RationalTriangle2D mcallister_woods_image(const Integer& p, const Integer& t) {
  if (p < 2) throw std::invalid_argument("McAllister-Woods family needs p >= 2");
  const RationalTriangle2D base = RationalTriangle2D::make(
      {0, 0}, {Rational(p), 0}, {1, make_rational(p - 1, p)});
  return base.dilate(t);
}

}  // namespace pcollapse
