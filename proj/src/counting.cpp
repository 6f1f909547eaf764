#include "pcollapse/counting.hpp"

#include <algorithm>
#include <vector>

namespace pcollapse {

namespace {

void require_nonnegative(std::int64_t t) {
  if (t < 0) throw std::invalid_argument("dilation factor must be nonnegative");
}

// Inner 1-D count: #{y >= 0 : y <= residual * inverse_coeff}.
Integer count_line(const QuadNumber& residual, const QuadNumber& inverse_coeff) {
  if (residual.sign() < 0) return 0;
  return (residual * inverse_coeff).floor() + 1;
}

Integer count_sliced(std::span<const QuadNumber> coeffs, std::span<const QuadNumber> inverses,
                     const QuadNumber& scale) {
  if (scale.sign() < 0) return 0;
  if (coeffs.size() == 1) return count_line(scale, inverses[0]);
  const Integer last = (scale * inverses[0]).floor();
  Integer total = 0;
  QuadNumber residual = scale;
  for (Integer x = 0; x <= last; ++x) {
    total += count_sliced(coeffs.subspan(1), inverses.subspan(1), residual);
    residual -= coeffs[0];
  }
  return total;
}

constexpr std::int64_t kIntKernelLimit = std::int64_t{1} << 40;

bool fits_kernel(const Integer& z) { return z.fits_slong_p() && z.get_si() < kIntKernelLimit; }

}  // namespace

bool count_rational_triangle_int(const RationalTriangleParams& params, std::int64_t t, Integer& out) {
  require_nonnegative(t);
  if (t >= kIntKernelLimit || !fits_kernel(params.p) || !fits_kernel(params.q) ||
      !fits_kernel(params.r) || !fits_kernel(params.s)) {
    return false;
  }
  using i128 = __int128;
  i128 p = params.p.get_si();
  i128 q = params.q.get_si();
  i128 r = params.r.get_si();
  i128 s = params.s.get_si();
  // Columns along x number t p / q; along y, t r / s. Scan the shorter axis.
  if (p * s > r * q) {
    std::swap(p, r);
    std::swap(q, s);
  }
  // sum_{x=0}^{floor(tp/q)} (floor((t p r - q r x) / (p s)) + 1)
  const i128 last = (t * p) / q;
  const i128 numerator0 = i128{t} * p * r;
  const i128 step = q * r;
  const i128 divisor = p * s;
  i128 total = 0;
  for (i128 x = 0; x <= last; ++x) total += (numerator0 - step * x) / divisor + 1;
  const unsigned __int128 magnitude = static_cast<unsigned __int128>(total);
  const std::uint64_t words[2] = {static_cast<std::uint64_t>(magnitude),
                                  static_cast<std::uint64_t>(magnitude >> 64)};
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  return true;
}

Integer count_triangle_quad(const TrianglePair& pair, std::int64_t t) {
  require_nonnegative(t);
  const std::vector<QuadNumber> coeffs{pair.u, pair.v};
  const std::vector<QuadNumber> inverses{pair.u.inverse(), pair.v.inverse()};
  return count_sliced(coeffs, inverses, QuadNumber(t));
}

Integer count_triangle(const TrianglePair& pair, std::int64_t t) {
  require_nonnegative(t);
  if (pair.u.is_rational() && pair.v.is_rational()) {
    Integer out;
    if (count_rational_triangle_int(RationalTriangleParams::from_uv(pair.u, pair.v), t, out)) return out;
  }
  return count_triangle_quad(pair, t);
}

Integer count_triangle_interior(const TrianglePair& pair, std::int64_t t) {
  require_nonnegative(t);
  const QuadNumber v_inverse = pair.v.inverse();
  Integer total = 0;
  QuadNumber residual = QuadNumber(t) - pair.u;  // x = 1
  while (residual.sign() > 0) {
    const QuadNumber ratio = residual * v_inverse;
    Integer below = ratio.floor();
    if (ratio.is_rational() && is_integer(ratio.a())) --below;  // y < ratio strictly
    if (below > 0) total += below;
    residual -= pair.u;
  }
  return total;
}

Integer count_scaled_simplex(std::span<const QuadNumber> coeffs, const QuadNumber& scale) {
  if (coeffs.empty()) throw std::invalid_argument("simplex needs at least one coordinate");
  std::vector<QuadNumber> inverses;
  inverses.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (c.sign() <= 0) throw std::invalid_argument("simplex coefficients must be positive");
    inverses.push_back(c.inverse());
  }
  return count_sliced(coeffs, inverses, scale);
}

Integer count_axis_simplex(const AxisSimplex& simplex, std::int64_t t) {
  require_nonnegative(t);
  if (simplex.dim() == 2) {
    return count_triangle(TrianglePair::make(simplex.legs[0].inverse(), simplex.legs[1].inverse()), t);
  }
  const auto coeffs = simplex.coefficients();
  return count_sliced(coeffs, simplex.legs, QuadNumber(t));
}

Integer count_interval(const Interval& interval, std::int64_t t) {
  require_nonnegative(t);
  const QuadNumber lo = interval.lo * QuadNumber(t);
  const QuadNumber hi = interval.hi * QuadNumber(t);
  Integer count = hi.floor() - lo.floor();
  if (lo.is_rational() && is_integer(lo.a())) ++count;
  return count;
}

Integer count_rational_triangle2d(const RationalTriangle2D& triangle) {
  if (triangle.doubled_signed_area() == 0) throw DegenerateTriangle("triangle has zero area");
  const auto& vs = triangle.vertices;
  const auto [lowest, highest] =
      std::minmax({vs[0].y, vs[1].y, vs[2].y}, [](const Rational& a, const Rational& b) { return a < b; });
  Integer total = 0;
  const Integer top = floor_of(highest);
  for (Integer y = ceil_of(lowest); y <= top; ++y) {
    const Rational row(y);
    std::vector<Rational> xs;
    for (std::size_t i = 0; i < 3; ++i) {
      const RationalPoint& a = vs[i];
      const RationalPoint& b = vs[(i + 1) % 3];
      if (a.y == b.y) {
        if (a.y == row) {
          xs.push_back(a.x);
          xs.push_back(b.x);
        }
        continue;
      }
      if ((row - a.y) * (row - b.y) > 0) continue;
      xs.push_back(a.x + (row - a.y) * (b.x - a.x) / (b.y - a.y));
    }
    if (xs.empty()) continue;
    const auto [left, right] = std::minmax_element(xs.begin(), xs.end());
    const Integer width = floor_of(*right) - ceil_of(*left) + 1;
    if (width > 0) total += width;
  }
  return total;
}

ClosedFormContext closed_form_context(const Integer& alpha, std::int64_t t) {
  if (alpha < 1) throw std::invalid_argument("alpha must be positive");
  Integer z;
  mpz_fdiv_r(z.get_mpz_t(), Integer(static_cast<long>(t)).get_mpz_t(), alpha.get_mpz_t());
  return ClosedFormContext{z, z == 0 ? 1 : 0};
}

Rational closed_form_admissible(const AdmissiblePair& pair, std::int64_t t) {
  const Integer& alpha = pair.alpha;
  const Integer& beta = pair.beta;
  const auto ctx = closed_form_context(alpha, t);
  const Integer tt = static_cast<long>(t);
  const Integer numerator =
      tt * tt * beta + tt * alpha * beta + ctx.z * beta * (alpha - ctx.z) + 2 * alpha * ctx.sigma;
  return make_rational(numerator, 2 * alpha);
}

long double asymptotic_deficit(const TrianglePair& pair, std::int64_t t) {
  if (t <= 0) throw std::invalid_argument("asymptotic deficit needs t > 0");
  const long double u = pair.u.approx();
  const long double v = pair.v.approx();
  const long double tt = static_cast<long double>(t);
  const long double count = static_cast<long double>(count_triangle(pair, t).get_d());
  const long double leading = tt * tt / (2.0L * u * v) + (1.0L / u + 1.0L / v) * tt / 2.0L;
  const long double gap = count - leading;
  return (gap < 0 ? -gap : gap) / tt;
}

}  // namespace pcollapse
