#include <doctest.h>

#include "pcollapse/criteria.hpp"
#include "pcollapse/json_io.hpp"
#include "pcollapse/precursive.hpp"
#include "pcollapse/quasipoly.hpp"
#include "pcollapse/search.hpp"
#include "pcollapse/verify.hpp"

using namespace pcollapse;

TEST_CASE("QuadNumber JSON uses decimal strings") {
  const QuadNumber x = QuadNumber::normalize(make_rational(3, 2), make_rational(1, 2), 5);
  const json j = to_json(x);
  CHECK(j == json{{"a_num", "3"}, {"a_den", "2"}, {"b_num", "1"}, {"b_den", "2"}, {"d", "5"}});
  CHECK(quad_from_json(j) == x);
  const QuadNumber big(Rational(Integer("123456789012345678901234567890")));
  CHECK(quad_from_json(json::parse(to_json(big).dump())) == big);
  // Non-canonical input is normalized on the way in.
  CHECK(quad_from_json(json{{"a_num", "0"}, {"a_den", "1"}, {"b_num", "1"}, {"b_den", "1"}, {"d", "8"}}) ==
        QuadNumber::normalize(0, 2, 2));
}

TEST_CASE("round trips") {
  const auto pair = admissible_from_alpha_beta(2, 4).pair();
  CHECK(triangle_pair_from_json(json::parse(to_json(pair).dump())) == pair);
  CHECK(to_json(pair)["class"] == "admissible");

  const auto params = RationalTriangleParams::make(2, 3, 3, 2);
  CHECK(rational_params_from_json(json::parse(to_json(params).dump())) == params);

  const auto simplex = AxisSimplex::make({make_rational(1, 2), QuadNumber(2) + quad_sqrt(2), QuadNumber(2) - quad_sqrt(2)});
  const json sj = to_json(simplex);
  CHECK(sj["dim"] == 3);
  CHECK(axis_simplex_from_json(json::parse(sj.dump())) == simplex);

  const auto qp = minimal_period(RationalTriangleParams::make(2, 3, 3, 2)).quasipolynomial;
  const json qj = to_json(qp);
  CHECK(qj["coeffs"][0][1] == "7/6");
  CHECK(quasipolynomial_from_json(json::parse(qj.dump())) == qp);

  const auto report = check_collapse_criterion(params);
  const json rj = to_json(report);
  CHECK(rj["verdict"] == "collapse-predicted");
  CHECK(rj["predicted_period_divisor"] == "3");
  CHECK(criterion_report_from_json(json::parse(rj.dump())) == report);
  const auto miss = check_collapse_criterion(RationalTriangleParams::make(1, 1, 1, 2));
  CHECK(to_json(miss)["predicted_period_divisor"].is_null());
  CHECK(criterion_report_from_json(to_json(miss)) == miss);

  const auto rec = difference_recurrence(3);
  const json recj = to_json(rec);
  CHECK(recj == json{{"order", 3}, {"degree", 0}, {"polys", {{"-1"}, {"3"}, {"-3"}, {"1"}}}});
  CHECK(recurrence_from_json(json::parse(recj.dump())) == rec);

  CHECK(to_json(series_numerator(4, 9)) == json{{"a0", "1"}, {"a1", "1"}, {"a2", "0"}});
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS(quad_from_json(json{{"a_num", "1"}}));
  CHECK_THROWS(rational_params_from_json(json{{"p", "2"}, {"q", "4"}, {"r", "1"}, {"s", "1"}}));
  CHECK_THROWS(quasipolynomial_from_json(json{{"period", 2}, {"degree", 1}, {"coeffs", {{"1", "2"}}}}));
}

TEST_CASE("search tuples") {
  CHECK(search_tuples(1).size() == 1);
  const auto two = search_tuples(2);
  CHECK(two.size() == 9);
  CHECK(std::is_sorted(two.begin(), two.end(), [](const auto& a, const auto& b) {
    return std::tie(a.p, a.q, a.r, a.s) < std::tie(b.p, b.q, b.r, b.s);
  }));
  CHECK_THROWS(search_tuples(0));
}

TEST_CASE("search records") {
  std::vector<SearchRecord> one;
  run_search(1, [&](const SearchRecord& r) { one.push_back(r); }, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].params == RationalTriangleParams::make(1, 1, 1, 1));
  CHECK(one[0].denominator == 1);
  CHECK(one[0].minimal_period == 1);
  CHECK_FALSE(one[0].collapse);

  std::vector<SearchRecord> two;
  run_search(2, [&](const SearchRecord& r) { two.push_back(r); }, 2);
  const auto it = std::find_if(two.begin(), two.end(),
                               [](const auto& r) { return r.params == RationalTriangleParams::make(1, 2, 2, 1); });
  REQUIRE(it != two.end());
  CHECK(it->denominator == 2);
  CHECK(it->minimal_period == 1);
  CHECK(it->collapse);

  const auto fib = search_record(RationalTriangleParams::make(2, 3, 3, 2));
  CHECK(fib.denominator == 6);
  CHECK(3 % fib.minimal_period == 0);
  CHECK(fib.criterion_predicted);

  CHECK(search_csv_header() == "p,q,r,s,denominator,minimal_period,criterion_predicted,collapse");
  CHECK(to_csv(*it) == "1,2,2,1,2,1,true,true");
  CHECK(search_record_from_json(json::parse(to_json(fib).dump())) == fib);
}

TEST_CASE("parallel search matches the serial reference and is ordered") {
  std::vector<SearchRecord> serial, parallel;
  run_search_serial(5, [&](const SearchRecord& r) { serial.push_back(r); });
  run_search(5, [&](const SearchRecord& r) { parallel.push_back(r); }, 4);
  CHECK(serial == parallel);
  for (const auto& r : serial) REQUIRE(r.denominator % r.minimal_period == 0);
}

TEST_CASE("verify front end") {
  CHECK(is_suite_name("all"));
  CHECK(is_suite_name("closed-form"));
  CHECK_FALSE(is_suite_name("bogus"));
  CHECK_THROWS_AS(run_verify("bogus"), std::invalid_argument);
  const auto report = run_verify("arith", 2);
  CHECK(report.passed());
  CHECK(report.checks.size() == 4);
  const json j = to_json(report.checks.front());
  CHECK(j["status"] == "pass");
  CHECK(j["counterexample"].is_null());
}
