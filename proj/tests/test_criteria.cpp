#include <doctest.h>

#include "pcollapse/criteria.hpp"
#include "pcollapse/quasipoly.hpp"
#include "pcollapse/search.hpp"

using namespace pcollapse;

TEST_CASE("collapse criterion") {
  const auto mw = check_collapse_criterion(RationalTriangleParams::make(3, 1, 2, 3));
  CHECK(mw.all_hold());
  CHECK(mw.predicted_period_divisor == Integer(1));
  CHECK(mw.verdict == Verdict::pseudo_integral_predicted);

  const auto fib = check_collapse_criterion(RationalTriangleParams::make(2, 3, 3, 2));
  REQUIRE(fib.conditions.size() == 3);
  for (const auto& c : fib.conditions) CHECK(c.holds);
  CHECK(fib.predicted_period_divisor == Integer(3));
  CHECK(fib.verdict == Verdict::collapse_predicted);

  const auto unit = check_collapse_criterion(RationalTriangleParams::make(1, 1, 1, 1));
  CHECK(unit.all_hold());
  CHECK(unit.predicted_period_divisor == Integer(1));

  const auto miss = check_collapse_criterion(RationalTriangleParams::make(1, 1, 1, 2));
  CHECK_FALSE(miss.all_hold());
  CHECK_FALSE(miss.predicted_period_divisor.has_value());
  CHECK(miss.verdict == Verdict::no_prediction);
}

TEST_CASE("pseudo-integral criterion") {
  CHECK(check_pseudo_integral_criterion(RationalTriangleParams::make(1, 2, 2, 1)).all_hold());
  CHECK(check_pseudo_integral_criterion(RationalTriangleParams::make(3, 1, 2, 3)).all_hold());
  const auto fib = check_pseudo_integral_criterion(RationalTriangleParams::make(2, 3, 3, 2));
  CHECK_FALSE(fib.all_hold());
  CHECK(fib.verdict == Verdict::no_prediction);
  const auto ok = check_pseudo_integral_criterion(RationalTriangleParams::make(1, 2, 2, 1));
  CHECK(ok.verdict == Verdict::pseudo_integral_predicted);
  CHECK(ok.predicted_period_divisor == Integer(1));
}

TEST_CASE("reciprocal criterion") {
  CHECK(check_reciprocal_criterion(2, 5).all_hold());
  CHECK(check_reciprocal_criterion(2, 5).predicted_period_divisor == Integer(5));
  CHECK_FALSE(check_reciprocal_criterion(3, 2).all_hold());
  CHECK(check_reciprocal_criterion(1, 1).all_hold());
  CHECK_THROWS(check_reciprocal_criterion(2, 4));
  // 25 | 50 and gcd(2, 25) = 1.
  CHECK(check_reciprocal_criterion(25, 7).all_hold());
  // 5 | 50 but gcd(10, 5) = 5.
  CHECK_FALSE(check_reciprocal_criterion(5, 7).all_hold());
}

TEST_CASE("admissible classification") {
  CHECK(classify_admissible(3, 3) == AdmissibleClass::pseudo_integral);
  CHECK(classify_admissible(2, 4) == AdmissibleClass::pseudo_integral);
  CHECK(classify_admissible(1, 7) == AdmissibleClass::pseudo_integral);
  CHECK(classify_admissible(4, 2) == AdmissibleClass::pseudo_rational_only);
  CHECK(classify_admissible(1, 1) == AdmissibleClass::not_admissible);
  CHECK(classify_admissible(2, 2) == AdmissibleClass::not_admissible);
  CHECK(to_string(AdmissibleClass::pseudo_rational_only) == "pseudo-rational-only");
}

TEST_CASE("beta equation") {
  const auto solutions = solve_beta_equation(100);
  REQUIRE(solutions.size() == 2);
  CHECK(solutions[0] == std::pair<Integer, Integer>{2, 4});
  CHECK(solutions[1] == std::pair<Integer, Integer>{3, 3});
  CHECK(solve_beta_equation(2) == std::vector<std::pair<Integer, Integer>>{{2, 4}});
  CHECK(solve_beta_equation(5) == solutions);  // alpha = 5 gives 5/2
}

TEST_CASE("verdict strings round-trip") {
  for (auto v : {Verdict::collapse_predicted, Verdict::pseudo_integral_predicted, Verdict::no_prediction}) {
    CHECK(parse_verdict(to_string(v)) == v);
  }
  CHECK(to_string(Verdict::collapse_predicted) == "collapse-predicted");
}

TEST_CASE("predictions agree with computed minimal periods, entries <= 7") {
  for (const auto& params : search_tuples(7)) {
    const auto period = minimal_period(params, 2, 1).minimal_period;
    REQUIRE(denominator(params) % period == 0);
    const auto collapse = check_collapse_criterion(params);
    if (collapse.all_hold()) REQUIRE(*collapse.predicted_period_divisor % period == 0);
    if (check_pseudo_integral_criterion(params).all_hold()) REQUIRE(period == 1);
  }
}

TEST_CASE("classification matches the fitted period, alpha*beta <= 60") {
  for (long alpha = 1; alpha <= 60; ++alpha) {
    for (long beta = 1; alpha * beta <= 60; ++beta) {
      const auto cls = classify_admissible(alpha, beta);
      if (cls == AdmissibleClass::not_admissible) continue;
      const auto result = minimal_period(admissible_from_alpha_beta(alpha, beta), 2, 1);
      REQUIRE((cls == AdmissibleClass::pseudo_integral) == (result.minimal_period == 1));
    }
  }
}
