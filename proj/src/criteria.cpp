#include "pcollapse/criteria.hpp"

#include <algorithm>

namespace pcollapse {

namespace {

bool divides(const Integer& a, const Integer& b) { return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0; }

// Conditions of the collapse criterion for u = q/p, v = s/r, with names keyed by the letters used.
std::vector<Condition> collapse_conditions(const Integer& p, const Integer& q, const Integer& r, const Integer& s,
                                           const std::string& pn, const std::string& qn, const std::string& rn,
                                           const std::string& sn) {
  const Integer shifted = r * q + 1;
  const bool second = divides(p, shifted);
  const bool third = second && gcd(Integer(shifted / p), s) == 1;
  return {
      {sn + "|" + pn, divides(s, p)},
      {pn + "|(" + rn + qn + "+1)", second},
      {"gcd((" + rn + qn + "+1)/" + pn + "," + sn + ")=1", third},
  };
}

CriterionReport finish(std::vector<Condition> conditions, const Integer& divisor) {
  CriterionReport report{std::move(conditions), std::nullopt, Verdict::no_prediction};
  if (report.all_hold()) {
    report.predicted_period_divisor = divisor;
    report.verdict = divisor == 1 ? Verdict::pseudo_integral_predicted : Verdict::collapse_predicted;
  }
  return report;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::collapse_predicted:
      return "collapse-predicted";
    case Verdict::pseudo_integral_predicted:
      return "pseudo-integral-predicted";
    case Verdict::no_prediction:
      return "no-prediction";
  }
  return "no-prediction";
}

Verdict parse_verdict(const std::string& text) {
  if (text == "collapse-predicted") return Verdict::collapse_predicted;
  if (text == "pseudo-integral-predicted") return Verdict::pseudo_integral_predicted;
  if (text == "no-prediction") return Verdict::no_prediction;
  throw std::invalid_argument("unknown verdict: " + text);
}

bool CriterionReport::all_hold() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.holds; });
}

CriterionReport check_collapse_criterion(const RationalTriangleParams& params) {
  const auto& [p, q, r, s] = params;
  return finish(collapse_conditions(p, q, r, s, "p", "q", "r", "s"), q);
}

CriterionReport check_pseudo_integral_criterion(const RationalTriangleParams& params) {
  const auto& [p, q, r, s] = params;
  auto conditions = collapse_conditions(p, q, r, s, "p", "q", "r", "s");
  // Swapping the axes exchanges (p,q) with (r,s); q and s are then both quasiperiods, and gcd(q,s) = 1.
  auto swapped = collapse_conditions(r, s, p, q, "r", "s", "p", "q");
  conditions.insert(conditions.end(), swapped.begin(), swapped.end());
  return finish(std::move(conditions), 1);
}

CriterionReport check_reciprocal_criterion(const Integer& p, const Integer& q) {
  if (p <= 0 || q <= 0) throw std::invalid_argument("p and q must be positive");
  if (gcd(p, q) != 1) throw std::invalid_argument("p and q must be coprime");
  const Integer shifted = q * q + 1;
  const bool first = divides(p, shifted);
  const bool second = first && gcd(Integer(shifted / p), p) == 1;
  return finish({{"p|(q^2+1)", first}, {"gcd((q^2+1)/p,p)=1", second}}, q);
}

std::string to_string(AdmissibleClass c) {
  switch (c) {
    case AdmissibleClass::pseudo_integral:
      return "pseudo-integral";
    case AdmissibleClass::pseudo_rational_only:
      return "pseudo-rational-only";
    case AdmissibleClass::not_admissible:
      return "not-admissible";
  }
  return "not-admissible";
}

AdmissibleClass classify_admissible(const Integer& alpha, const Integer& beta) {
  if (alpha < 1 || beta < 1) return AdmissibleClass::not_admissible;
  const Integer disc = admissible_discriminant(alpha, beta);
  if (disc <= 0 || is_perfect_square(disc)) return AdmissibleClass::not_admissible;
  if (alpha == 1 || (alpha == 3 && beta == 3) || (alpha == 2 && beta == 4)) {
    return AdmissibleClass::pseudo_integral;
  }
  return AdmissibleClass::pseudo_rational_only;
}

std::vector<std::pair<Integer, Integer>> solve_beta_equation(long bound) {
  std::vector<std::pair<Integer, Integer>> out;
  for (long alpha = 2; alpha <= bound; ++alpha) {
    const Rational beta = make_rational(2 * alpha, alpha - 1);
    if (is_integer(beta)) out.emplace_back(Integer(alpha), beta.get_num());
  }
  return out;
}

}  // namespace pcollapse
