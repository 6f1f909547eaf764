#include <doctest.h>

#include "oracles.hpp"
#include "pcollapse/counting.hpp"
#include "pcollapse/criteria.hpp"
#include "pcollapse/kernels.hpp"
#include "pcollapse/quasipoly.hpp"

using namespace pcollapse;

namespace {

std::vector<Sample> samples_of(const TrianglePair& pair, std::int64_t n) {
  return collect_samples_serial([&pair](std::int64_t t) { return count_triangle(pair, t); }, 0, n);
}

const std::vector<Rational> kUnitSimplex{1, make_rational(3, 2), make_rational(1, 2)};

}  // namespace

TEST_CASE("fit a polynomial") {
  std::vector<Sample> samples;
  for (long t = 0; t <= 8; ++t) samples.push_back({t, Integer((t + 1) * (t + 2) / 2)});
  const auto qp = fit_quasipolynomial(samples, 1, 2);
  REQUIRE(qp);
  CHECK(qp->coeffs[0] == kUnitSimplex);
  CHECK(qp->is_minimal());
}

TEST_CASE("golden counts at period 3 have equal constituents") {
  const auto qp = fit_quasipolynomial(samples_of(admissible_from_alpha_beta(3, 3).pair(), 12), 3, 2);
  REQUIRE(qp);
  for (const auto& c : qp->coeffs) CHECK(c == kUnitSimplex);
  CHECK_FALSE(qp->is_minimal());
  CHECK(reduced_period(*qp) == 1);
  CHECK(regroup(*qp, 1).coeffs[0] == kUnitSimplex);
}

TEST_CASE("a non-admissible irrational pair has no fit") {
  CHECK_FALSE(fit_quasipolynomial(samples_of(TrianglePair::make(1, quad_sqrt(2)), 12), 3, 2));
}

TEST_CASE("insufficient samples") {
  std::vector<Sample> samples{{0, 1}, {1, 3}, {2, 6}};
  CHECK_THROWS_AS(fit_quasipolynomial(samples, 2, 2), InsufficientSamples);
  CHECK_THROWS_AS(fit_quasipolynomial(samples, 0, 2), std::invalid_argument);
}

TEST_CASE("minimal periods") {
  const auto r = minimal_period(RationalTriangleParams::make(1, 2, 2, 1));
  CHECK(r.guaranteed_period == 2);
  CHECK(r.minimal_period == 1);
  CHECK(r.quasipolynomial.coeffs[0] == kUnitSimplex);

  CHECK(minimal_period(admissible_from_alpha_beta(3, 3)).minimal_period == 1);
  CHECK(minimal_period(admissible_from_alpha_beta(2, 4)).minimal_period == 1);

  const auto fib = minimal_period(RationalTriangleParams::make(2, 3, 3, 2));
  CHECK(fib.guaranteed_period == 6);
  CHECK(3 % fib.minimal_period == 0);

  // An integral triangle has period 1; a triangle with a lone rational vertex keeps its denominator.
  CHECK(minimal_period(RationalTriangleParams::make(1, 1, 1, 1)).minimal_period == 1);
  CHECK(minimal_period(RationalTriangleParams::make(1, 2, 1, 1)).minimal_period == 2);
}

TEST_CASE("evaluate uses the residue in [0, period)") {
  const auto golden = minimal_period(admissible_from_alpha_beta(3, 3)).quasipolynomial;
  CHECK(evaluate(golden, -1) == 0);
  CHECK(evaluate(golden, -3) == 1);
  const auto qp = minimal_period(admissible_from_alpha_beta(4, 2)).quasipolynomial;
  CHECK(qp.period == 2);
  const auto pair = admissible_from_alpha_beta(4, 2).pair();
  for (long t = 0; t <= 30; ++t) REQUIRE(evaluate(qp, t) == Rational(count_triangle(pair, t)));
  // t = -1 selects the last constituent, t = -2 the first.
  const auto& last = qp.coeffs[1];
  CHECK(evaluate(qp, -1) == last[0] - last[1] + last[2]);
  const auto& first = qp.coeffs[0];
  CHECK(evaluate(qp, -2) == first[0] - 2 * first[1] + 4 * first[2]);
}

TEST_CASE("series numerators") {
  CHECK(series_numerator(3, 6) == SeriesNumerator{1, 0, 0});
  CHECK(series_numerator(4, 9) == SeriesNumerator{1, 1, 0});
  const auto golden = admissible_from_alpha_beta(3, 3).pair();
  const auto sq2 = admissible_from_alpha_beta(2, 4).pair();
  const auto g = series_numerator(count_triangle(golden, 1), count_triangle(golden, 2));
  const auto h = series_numerator(count_triangle(sq2, 1), count_triangle(sq2, 2));
  CHECK(g == SeriesNumerator{1, 0, 0});
  CHECK(h == SeriesNumerator{1, 1, 0});
  CHECK(g.a1 <= h.a1);
  CHECK(g.a2 <= h.a2);
  // Every pseudo-integral pair has nonnegative numerator coefficients.
  for (long alpha = 1; alpha <= 60; ++alpha) {
    for (long beta = 1; alpha * beta <= 60; ++beta) {
      if (classify_admissible(alpha, beta) != AdmissibleClass::pseudo_integral) continue;
      const auto pair = admissible_from_alpha_beta(alpha, beta).pair();
      const auto n = series_numerator(count_triangle(pair, 1), count_triangle(pair, 2));
      REQUIRE(n.a1 >= 0);
      REQUIRE(n.a2 >= 0);
    }
  }
}

TEST_CASE("reciprocity reports") {
  const auto golden = admissible_from_alpha_beta(3, 3);
  const auto gqp = minimal_period(golden).quasipolynomial;
  const auto r1 = reciprocity_report(golden, gqp, 1);
  CHECK(r1.lhs == 0);
  CHECK(r1.interior == 0);
  CHECK(r1.mu_observed == 0);
  CHECK_FALSE(r1.alpha_divides_t);
  const auto r3 = reciprocity_report(golden, gqp, 3);
  CHECK(r3.lhs == 1);
  CHECK(r3.interior == 0);
  CHECK(r3.mu_observed == 1);
  CHECK(r3.alpha_divides_t);

  const auto sq2 = admissible_from_alpha_beta(2, 4);
  const auto r2 = reciprocity_report(sq2, minimal_period(sq2).quasipolynomial, 2);
  CHECK(r2.lhs == 1);
  CHECK(r2.interior == 0);
  CHECK(r2.mu_observed == 1);
  CHECK(r2.alpha_divides_t);
}

TEST_CASE("reciprocity pattern over every admissible pair with alpha*beta <= 30") {
  for (long alpha = 1; alpha <= 30; ++alpha) {
    for (long beta = 1; alpha * beta <= 30; ++beta) {
      if (classify_admissible(alpha, beta) == AdmissibleClass::not_admissible) continue;
      const auto pair = admissible_from_alpha_beta(alpha, beta);
      const auto qp = minimal_period(pair).quasipolynomial;
      for (long t = 1; t <= 50; ++t) {
        const auto report = reciprocity_report(pair, qp, t);
        REQUIRE(report.mu_observed == (t % alpha == 0 ? 1 : 0));
      }
    }
  }
}

TEST_CASE("minimal period divides alpha and the constant term is 1") {
  for (long alpha = 1; alpha <= 60; ++alpha) {
    for (long beta = 1; alpha * beta <= 60; ++beta) {
      if (classify_admissible(alpha, beta) == AdmissibleClass::not_admissible) continue;
      const auto result = minimal_period(admissible_from_alpha_beta(alpha, beta));
      REQUIRE(alpha % result.minimal_period == 0);
      REQUIRE(evaluate(result.quasipolynomial, 0) == 1);
      const bool integral = classify_admissible(alpha, beta) == AdmissibleClass::pseudo_integral;
      if (integral) {
        for (const auto& c : result.quasipolynomial.coeffs) REQUIRE(c[0] == 1);
      }
    }
  }
}

TEST_CASE("fit-then-verify on held-out values, denominators up to 150") {
  // Rational triangles with q, s chosen so lcm(q, s) spans the range; 10 unseen t each.
  int checked = 0;
  for (long q = 1; q <= 15; ++q) {
    for (long s = 1; s <= 15; s += 2) {
      const long p = q + 1, r = s + 2;
      if (std::gcd(p, q) != 1 || std::gcd(r, s) != 1) continue;
      const auto params = RationalTriangleParams::make(p, q, r, s);
      const long d = denominator(params).get_si();
      if (d > 150) continue;
      const auto result = minimal_period(params);
      const std::int64_t first_unseen = 4 * d;
      for (std::int64_t t = first_unseen; t < first_unseen + 10; ++t) {
        REQUIRE(evaluate(result.quasipolynomial, t) == Rational(oracle::rational_triangle(p, q, r, s, t)));
      }
      // The minimal period divides every period with a verified fit.
      const auto samples = samples_of(params.pair(), 4 * d);
      for (long div = 1; div <= d; ++div) {
        if (d % div != 0) continue;
        if (fit_quasipolynomial(samples, div, 2)) REQUIRE(div % result.minimal_period == 0);
      }
      ++checked;
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("minimal_period_from is scheduling independent") {
  const auto pair = admissible_from_alpha_beta(6, 2).pair();
  const CountFunction count = [&pair](std::int64_t t) { return count_triangle(pair, t); };
  const auto one = minimal_period_from(count, 6, 2, 1);
  const auto many = minimal_period_from(count, 6, 2, 4);
  CHECK(one.minimal_period == many.minimal_period);
  CHECK(one.quasipolynomial == many.quasipolynomial);
  // A wrong guaranteed period is reported, not hidden.
  const auto irrational = TrianglePair::make(1, quad_sqrt(2));
  CHECK_THROWS_AS(minimal_period_from([&](std::int64_t t) { return count_triangle(irrational, t); }, 3, 2, 1),
                  FitFailure);
}
