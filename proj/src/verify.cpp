#include "pcollapse/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "pcollapse/counting.hpp"
#include "pcollapse/criteria.hpp"
#include "pcollapse/precursive.hpp"
#include "pcollapse/quasipoly.hpp"
#include "pcollapse/search.hpp"
#include "pcollapse/sequences.hpp"

namespace pcollapse {

namespace {

// A check returns nullopt on success or a counterexample payload.
using Check = std::function<std::optional<json>()>;

class SuiteRunner {
 public:
  explicit SuiteRunner(std::string suite) : suite_(std::move(suite)) {}

  void run(const std::string& tag, const std::string& detail, const Check& check) {
    CheckOutcome outcome{suite_, tag, true, detail, nullptr};
    try {
      if (auto failure = check()) {
        outcome.passed = false;
        outcome.counterexample = std::move(*failure);
      }
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.counterexample = json{{"exception", e.what()}};
    }
    outcomes_.push_back(std::move(outcome));
  }

  std::vector<CheckOutcome> take() { return std::move(outcomes_); }

 private:
  std::string suite_;
  std::vector<CheckOutcome> outcomes_;
};

std::vector<AdmissiblePair> admissible_pairs_up_to(long product_bound) {
  std::vector<AdmissiblePair> out;
  for (long alpha = 1; alpha <= product_bound; ++alpha) {
    for (long beta = 1; alpha * beta <= product_bound; ++beta) {
      if (classify_admissible(alpha, beta) != AdmissibleClass::not_admissible) {
        out.push_back(admissible_from_alpha_beta(alpha, beta));
      }
    }
  }
  return out;
}

json pair_json(const AdmissiblePair& pair) {
  return json{{"alpha", to_string(pair.alpha)}, {"beta", to_string(pair.beta)}};
}

std::vector<Integer> triangle_counts(const TrianglePair& pair, std::int64_t last, int jobs) {
  const auto samples = collect_samples([&pair](std::int64_t t) { return count_triangle(pair, t); }, 0, last + 1,
                                       jobs);
  std::vector<Integer> values;
  values.reserve(samples.size());
  for (const auto& s : samples) values.push_back(s.value);
  return values;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 50);
  return make_rational(num(rng), den(rng));
}

QuadNumber random_quad(std::mt19937_64& rng, long radicand) {
  return QuadNumber::normalize(random_rational(rng), random_rational(rng), radicand);
}

// ---------------------------------------------------------------------------

void arith_suite(SuiteRunner& runner) {
  runner.run("normalize-examples", "sqrt(8) = 2 sqrt(2); b = 0 folds d; 1 + sqrt(12)/2 = 1 + sqrt(3)",
             []() -> std::optional<json> {
               const QuadNumber a = QuadNumber::normalize(0, 1, 8);
               const QuadNumber b = QuadNumber::normalize(3, 0, 17);
               const QuadNumber c = QuadNumber::normalize(1, make_rational(1, 2), 12);
               if (a.b() != 2 || a.radicand() != 2 || b.radicand() != 0 || b.a() != 3 || c.b() != 1 ||
                   c.radicand() != 3) {
                 return json{{"results", {to_json(a), to_json(b), to_json(c)}}};
               }
               return std::nullopt;
             });
  runner.run("floor-bracket", "floor(x) <= x < floor(x)+1 exactly, 10^4 random x", []() -> std::optional<json> {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<long> radicand(2, 200);
    for (int i = 0; i < 10000; ++i) {
      const QuadNumber x = random_quad(rng, radicand(rng));
      const Integer n = x.floor();
      if ((x - QuadNumber(Rational(n))).sign() < 0 || (x - QuadNumber(Rational(n + 1))).sign() >= 0) {
        return json{{"x", to_json(x)}, {"floor", to_string(n)}};
      }
    }
    return std::nullopt;
  });
  runner.run("field-axioms", "associativity, distributivity and inverses on shared radicands",
             []() -> std::optional<json> {
               std::mt19937_64 rng(7);
               std::uniform_int_distribution<long> radicand(2, 60);
               for (int i = 0; i < 2000; ++i) {
                 const long d = radicand(rng);
                 const QuadNumber x = random_quad(rng, d);
                 const QuadNumber y = random_quad(rng, d);
                 const QuadNumber z = random_quad(rng, d);
                 const bool ok = (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) &&
                                 x * (y + z) == x * y + x * z && (x.sign() == 0 || x * x.inverse() == QuadNumber(1));
                 if (!ok) return json{{"x", to_json(x)}, {"y", to_json(y)}, {"z", to_json(z)}};
               }
               return std::nullopt;
             });
  runner.run("sign-vs-float", "exact sign agrees with 128-bit evaluation beyond a 2^-20 margin",
             []() -> std::optional<json> {
               std::mt19937_64 rng(99);
               std::uniform_int_distribution<long> radicand(2, 500);
               const mpf_class margin(std::ldexp(1.0, -20), 128);
               for (int i = 0; i < 10000; ++i) {
                 const QuadNumber x = random_quad(rng, radicand(rng));
                 mpf_class root(x.radicand(), 128);
                 root = sqrt(root);
                 mpf_class value(x.a(), 128);
                 value += mpf_class(x.b(), 128) * root;
                 if (abs(value) <= margin) continue;
                 if (sgn(value) != x.sign()) return json{{"x", to_json(x)}};
               }
               return std::nullopt;
             });
}

void closed_form_suite(SuiteRunner& runner, int jobs) {
  runner.run("closed-form-oracle", "count_triangle equals the closed form, alpha*beta <= 60, t <= 12 alpha",
             [jobs]() -> std::optional<json> {
               for (const auto& pair : admissible_pairs_up_to(60)) {
                 const auto last = 12 * pair.alpha.get_si();
                 const auto counts = triangle_counts(pair.pair(), last, jobs);
                 for (std::int64_t t = 0; t <= last; ++t) {
                   const Rational closed = closed_form_admissible(pair, t);
                   if (closed != Rational(counts[static_cast<std::size_t>(t)])) {
                     return json{{"pair", pair_json(pair)}, {"t", t}, {"count", to_string(counts[t])},
                                 {"closed_form", to_string(closed)}};
                   }
                 }
               }
               return std::nullopt;
             });
  runner.run("swap-symmetry", "I_{u,v}(t) = I_{v,u}(t)", []() -> std::optional<json> {
    for (const auto& pair : admissible_pairs_up_to(60)) {
      const TrianglePair swapped{pair.v, pair.u, PairClass::admissible};
      for (std::int64_t t = 0; t <= 3 * pair.alpha.get_si(); ++t) {
        if (count_triangle(pair.pair(), t) != count_triangle(swapped, t)) {
          return json{{"pair", pair_json(pair)}, {"t", t}};
        }
      }
    }
    return std::nullopt;
  });
  runner.run("golden-polynomial", "golden triangle counts are (t+1)(t+2)/2 for t <= 200",
             [jobs]() -> std::optional<json> {
               const auto counts = triangle_counts(admissible_from_alpha_beta(3, 3).pair(), 200, jobs);
               for (long t = 0; t <= 200; ++t) {
                 if (counts[static_cast<std::size_t>(t)] != (t + 1) * (t + 2) / 2) return json{{"t", t}};
               }
               return std::nullopt;
             });
}

void criteria_suite(SuiteRunner& runner, int jobs) {
  const long bound = 12;
  runner.run("collapse-criterion-soundness", "criterion holds => minimal period divides q, entries <= 12",
             [jobs]() -> std::optional<json> {
               for (const auto& params : search_tuples(bound)) {
                 if (!check_collapse_criterion(params).all_hold()) continue;
                 const auto period = minimal_period(params, 2, jobs).minimal_period;
                 if (params.q % period != 0) return json{{"params", to_json(params)}, {"minimal_period", period}};
               }
               return std::nullopt;
             });
  runner.run("reciprocal-criterion-iff", "criterion <=> minimal period of T_{q/p,p/q} divides q, p,q <= 12",
             [jobs]() -> std::optional<json> {
               for (long p = 1; p <= bound; ++p) {
                 for (long q = 1; q <= bound; ++q) {
                   if (std::gcd(p, q) != 1) continue;
                   const auto params = RationalTriangleParams::make(p, q, q, p);
                   const auto period = minimal_period(params, 2, jobs).minimal_period;
                   const bool predicted = check_reciprocal_criterion(p, q).all_hold();
                   if (predicted != (q % period == 0)) {
                     return json{{"p", p}, {"q", q}, {"minimal_period", period}, {"criterion", predicted}};
                   }
                 }
               }
               return std::nullopt;
             });
  runner.run("pseudo-integral-criterion-soundness", "both-axis criterion => minimal period 1, entries <= 12",
             [jobs]() -> std::optional<json> {
               for (const auto& params : search_tuples(bound)) {
                 if (!check_pseudo_integral_criterion(params).all_hold()) continue;
                 const auto period = minimal_period(params, 2, jobs).minimal_period;
                 if (period != 1) return json{{"params", to_json(params)}, {"minimal_period", period}};
               }
               return std::nullopt;
             });
  runner.run("mcallister-woods-criterion", "criterion predicts period 1 for the family, p = 2..50",
             []() -> std::optional<json> {
               for (long p = 2; p <= 50; ++p) {
                 const auto report = check_collapse_criterion(mcallister_woods_pair(p));
                 if (!report.predicted_period_divisor || *report.predicted_period_divisor != 1) {
                   return json{{"p", p}, {"report", to_json(report)}};
                 }
               }
               return std::nullopt;
             });
  runner.run("classification-matches-fit", "pseudo-integral <=> fitted minimal period 1, alpha*beta <= 60",
             [jobs]() -> std::optional<json> {
               for (const auto& pair : admissible_pairs_up_to(60)) {
                 const auto result = minimal_period(pair, 2, jobs);
                 const bool integral = classify_admissible(pair.alpha, pair.beta) == AdmissibleClass::pseudo_integral;
                 if (integral != (result.minimal_period == 1) || pair.alpha.get_si() % result.minimal_period != 0) {
                   return json{{"pair", pair_json(pair)}, {"minimal_period", result.minimal_period}};
                 }
               }
               return std::nullopt;
             });
  runner.run("beta-equation-solutions", "beta = 2 alpha/(alpha-1) has integer solutions (2,4), (3,3) only",
             []() -> std::optional<json> {
               const auto solutions = solve_beta_equation(1000);
               const std::vector<std::pair<Integer, Integer>> expected{{2, 4}, {3, 3}};
               if (solutions != expected) return json{{"found", solutions.size()}};
               return std::nullopt;
             });
}

void fibonacci_suite(SuiteRunner& runner, int jobs) {
  runner.run("gcd-coprimality", "gcd(F_n, F_{n-1}) = gcd(F_n, k) = 1 for k <= 6, n <= 30", []() -> std::optional<json> {
    for (long k = 1; k <= 6; ++k) {
      for (long n = 1; n <= 30; ++n) {
        if (!verify_coprimality(k, n)) return json{{"k", k}, {"n", n}};
      }
    }
    return std::nullopt;
  });
  runner.run("gcd-odd-index", "gcd(F_m, k) = 1 for odd m, k <= 6, m <= 31", []() -> std::optional<json> {
    for (long k = 1; k <= 6; ++k) {
      for (long m = 1; m <= 31; m += 2) {
        if (gcd(k_fib(k, m), Integer(k)) != 1) return json{{"k", k}, {"m", m}};
      }
    }
    return std::nullopt;
  });
  runner.run("cassini-identity", "F_n^2 - k F_{n-1} F_n - F_{n-1}^2 + (-1)^n = 0 for k <= 6, n <= 30",
             []() -> std::optional<json> {
               for (long k = 1; k <= 6; ++k) {
                 for (long n = 1; n <= 30; ++n) {
                   if (!verify_cassini(k, n)) return json{{"k", k}, {"n", n}};
                 }
               }
               return std::nullopt;
             });
  runner.run("reciprocal-consistency", "(F_{n-1}, F_n) and (F_{n+1}, F_n) pass the reciprocal criterion, n even",
             []() -> std::optional<json> {
               for (long k = 1; k <= 6; ++k) {
                 for (long n = 2; n <= 30; n += 2) {
                   const Integer fn = k_fib(k, n);
                   if (!check_reciprocal_criterion(k_fib(k, n - 1), fn).all_hold() ||
                       !check_reciprocal_criterion(k_fib(k, n + 1), fn).all_hold()) {
                     return json{{"k", k}, {"n", n}};
                   }
                 }
               }
               return std::nullopt;
             });
  runner.run("common-quasiperiod", "F_n(k) is a quasiperiod of I_{k,n} and I_{k,n+1}, n even, F_n(k) <= 30",
             [jobs]() -> std::optional<json> {
               for (long k = 1; k <= 30; ++k) {
                 for (long n = 2; k_fib(k, n) <= 30; n += 2) {
                   const long period = k_fib(k, n).get_si();
                   for (long m : {n, n + 1}) {
                     const TrianglePair pair = fib_triangle(k, m).pair();
                     const auto samples = collect_samples(
                         [&pair](std::int64_t t) { return count_triangle(pair, t); }, 0, 6 * period, jobs);
                     if (!fit_quasipolynomial(samples, period, 2)) {
                       return json{{"k", k}, {"n", m}, {"period", period}};
                     }
                   }
                 }
               }
               return std::nullopt;
             });
}

void tetrahedra_suite(SuiteRunner& runner, int jobs) {
  const auto polynomial_matches = [jobs](const AxisSimplex& simplex) -> std::optional<json> {
    const auto samples =
        collect_samples([&simplex](std::int64_t t) { return count_axis_simplex(simplex, t); }, 0, 41, jobs);
    for (const auto& s : samples) {
      if (Rational(s.value) != tetra_polynomial(s.t)) {
        return json{{"simplex", to_json(simplex)}, {"t", s.t}, {"count", to_string(s.value)}};
      }
    }
    return std::nullopt;
  };
  runner.run("tetra-family-polynomial", "T_n counts are t^3/6 + t^2 + 11t/6 + 1, n = 1..3, t <= 40",
             [&]() -> std::optional<json> {
               for (long n = 1; n <= 3; ++n) {
                 if (auto failure = polynomial_matches(tetra_family(n))) return failure;
               }
               return std::nullopt;
             });
  runner.run("limit-tetrahedron-polynomial", "legs (1/2, 2+sqrt2, 2-sqrt2) give the same polynomial, t <= 40",
             [&]() -> std::optional<json> { return polynomial_matches(limit_tetrahedron()); });
  runner.run("slice-consistency", "3-simplex count equals the sum of its triangle slices",
             []() -> std::optional<json> {
               for (long n = 1; n <= 2; ++n) {
                 const AxisSimplex simplex = tetra_family(n);
                 const TrianglePair slice =
                     TrianglePair::make(simplex.legs[1].inverse(), simplex.legs[2].inverse());
                 for (std::int64_t t = 0; t <= 20; ++t) {
                   Integer total = 0;
                   for (std::int64_t x = 0; 2 * x <= t; ++x) total += count_triangle(slice, t - 2 * x);
                   if (total != count_axis_simplex(simplex, t)) return json{{"n", n}, {"t", t}};
                 }
               }
               return std::nullopt;
             });
  runner.run("unit-extension-polynomial", "legs (1, tau^2, tau^-2) give a polynomial Ehrhart function",
             [jobs]() -> std::optional<json> {
               const auto golden = admissible_from_alpha_beta(3, 3);
               const AxisSimplex simplex = AxisSimplex::make({QuadNumber(1), golden.u, golden.v});
               const auto samples = collect_samples(
                   [&simplex](std::int64_t t) { return count_axis_simplex(simplex, t); }, 0, 30, jobs);
               if (!fit_quasipolynomial(samples, 1, 3)) return json{{"simplex", to_json(simplex)}};
               return std::nullopt;
             });
  runner.run("interval-length-count", "[sqrt2, 3+sqrt2] holds 3t lattice points for 1 <= t <= 1000",
             []() -> std::optional<json> {
               const Interval interval = Interval::make(quad_sqrt(2), QuadNumber(3) + quad_sqrt(2));
               for (std::int64_t t = 1; t <= 1000; ++t) {
                 if (count_interval(interval, t) != 3 * t) return json{{"t", t}};
               }
               return std::nullopt;
             });
}

void reciprocity_suite(SuiteRunner& runner, int jobs) {
  runner.run("reciprocity-pattern", "I(-t) - interior(t) = 1 iff alpha | t, else 0; t = 1..50",
             [jobs]() -> std::optional<json> {
               const std::vector<std::pair<long, long>> pairs{{3, 3}, {2, 4}, {1, 5}, {4, 2}, {5, 1}};
               for (const auto& [alpha, beta] : pairs) {
                 const auto pair = admissible_from_alpha_beta(alpha, beta);
                 const auto qp = minimal_period(pair, 2, jobs).quasipolynomial;
                 for (std::int64_t t = 1; t <= 50; ++t) {
                   const auto report = reciprocity_report(pair, qp, t);
                   if (report.mu_observed != (report.alpha_divides_t ? 1 : 0)) {
                     return json{{"pair", pair_json(pair)}, {"report", to_json(report)}};
                   }
                 }
               }
               return std::nullopt;
             });
  runner.run("series-nonnegativity", "Ehrhart series numerators of pseudo-integral pairs are nonnegative",
             []() -> std::optional<json> {
               for (const auto& pair : admissible_pairs_up_to(60)) {
                 if (classify_admissible(pair.alpha, pair.beta) != AdmissibleClass::pseudo_integral) continue;
                 const TrianglePair triangle = pair.pair();
                 if (count_triangle(triangle, 0) != 1) return json{{"pair", pair_json(pair)}, {"I(0)", "!= 1"}};
                 const auto g = series_numerator(count_triangle(triangle, 1), count_triangle(triangle, 2));
                 if (g.a0 != 1 || g.a1 < 0 || g.a2 < 0) return json{{"pair", pair_json(pair)}, {"g", to_json(g)}};
               }
               return std::nullopt;
             });
  runner.run("series-monotonicity", "golden triangle inside the (2,4) triangle: numerators ordered",
             []() -> std::optional<json> {
               const TrianglePair inner = admissible_from_alpha_beta(3, 3).pair();
               const TrianglePair outer = admissible_from_alpha_beta(2, 4).pair();
               const auto g = series_numerator(count_triangle(inner, 1), count_triangle(inner, 2));
               const auto h = series_numerator(count_triangle(outer, 1), count_triangle(outer, 2));
               if (g.a0 > h.a0 || g.a1 > h.a1 || g.a2 > h.a2) return json{{"inner", to_json(g)}, {"outer", to_json(h)}};
               return std::nullopt;
             });
}

void recurrence_suite(SuiteRunner& runner, int jobs) {
  runner.run("golden-recurrence", "golden counts satisfy a constant-coefficient recurrence of order <= 3",
             [jobs]() -> std::optional<json> {
               const auto values = triangle_counts(admissible_from_alpha_beta(3, 3).pair(), 60, jobs);
               const auto rec = guess_recurrence(values, 4, 0);
               if (!rec || rec->order > 3) return json{{"found", rec.has_value()}};
               return std::nullopt;
             });
  runner.run("quasipolynomial-recurrence", "period-4 counts of the (4,2) pair admit order <= 12, degree 0",
             [jobs]() -> std::optional<json> {
               const auto values = triangle_counts(admissible_from_alpha_beta(4, 2).pair(), 80, jobs);
               const auto rec = guess_recurrence(values, 12, 0);
               if (!rec) return json{{"found", false}};
               return std::nullopt;
             });
  runner.run("non-admissible-no-recurrence",
             "u+v = 2, 1/u+1/v = 5/2: not a scaled admissible pair, no recurrence with k, d <= 4 on t <= 400",
             [jobs]() -> std::optional<json> {
               const Rational sum(2);
               const Rational reciprocal_sum = make_rational(5, 2);
               if (admissible_scaling_factor(sum, reciprocal_sum)) return json{{"hypothesis", "scaled admissible"}};
               const TrianglePair pair = triangle_from_sums(sum, reciprocal_sum);
               if ((pair.u / pair.v).is_rational()) return json{{"hypothesis", "u/v rational"}};
               const auto values = triangle_counts(pair, 400, jobs);
               if (auto rec = guess_recurrence(values, 4, 4)) return json{{"recurrence", to_json(*rec)}};
               return std::nullopt;
             });
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"arith",      "closed-form", "criteria",   "fibonacci",
                                              "tetrahedra", "reciprocity", "recurrence", "all"};
  return names;
}

bool is_suite_name(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_verify(const std::string& suite, int jobs) {
  if (!is_suite_name(suite)) throw std::invalid_argument("unknown suite: " + suite);
  const std::vector<std::pair<std::string, std::function<void(SuiteRunner&)>>> suites{
      {"arith", [](SuiteRunner& r) { arith_suite(r); }},
      {"closed-form", [jobs](SuiteRunner& r) { closed_form_suite(r, jobs); }},
      {"criteria", [jobs](SuiteRunner& r) { criteria_suite(r, jobs); }},
      {"fibonacci", [jobs](SuiteRunner& r) { fibonacci_suite(r, jobs); }},
      {"tetrahedra", [jobs](SuiteRunner& r) { tetrahedra_suite(r, jobs); }},
      {"reciprocity", [jobs](SuiteRunner& r) { reciprocity_suite(r, jobs); }},
      {"recurrence", [jobs](SuiteRunner& r) { recurrence_suite(r, jobs); }},
  };
  SuiteReport report;
  for (const auto& [name, body] : suites) {
    if (suite != "all" && suite != name) continue;
    SuiteRunner runner(name);
    body(runner);
    auto outcomes = runner.take();
    report.checks.insert(report.checks.end(), std::make_move_iterator(outcomes.begin()),
                         std::make_move_iterator(outcomes.end()));
  }
  return report;
}

json to_json(const CheckOutcome& outcome) {
  return json{{"suite", outcome.suite},
              {"tag", outcome.tag},
              {"status", outcome.passed ? "pass" : "fail"},
              {"detail", outcome.detail},
              {"counterexample", outcome.counterexample}};
}

}  // namespace pcollapse
