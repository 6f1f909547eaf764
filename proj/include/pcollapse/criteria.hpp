// Divisibility criteria for period collapse. Reports carry the predicted period
// divisor; they never assert, so a falsified prediction shows up as data.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcollapse/arith.hpp"
#include "pcollapse/polytopes.hpp"

namespace pcollapse {

enum class Verdict { collapse_predicted, pseudo_integral_predicted, no_prediction };

std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& text);

struct Condition {
  std::string name;
  bool holds = false;
  friend bool operator==(const Condition&, const Condition&) = default;
};

struct CriterionReport {
  std::vector<Condition> conditions;
  std::optional<Integer> predicted_period_divisor;
  Verdict verdict = Verdict::no_prediction;

  bool all_hold() const;
  friend bool operator==(const CriterionReport&, const CriterionReport&) = default;
};

/// s | p, p | (rq+1), gcd((rq+1)/p, s) = 1  implies the period divides q.
CriterionReport check_collapse_criterion(const RationalTriangleParams& params);

/// The collapse criterion for (p,q,r,s) and for the swapped triangle (r,s,p,q).
CriterionReport check_pseudo_integral_criterion(const RationalTriangleParams& params);

/// For T_{q/p, p/q}: q is a quasiperiod iff p | q^2+1 and gcd((q^2+1)/p, p) = 1.
CriterionReport check_reciprocal_criterion(const Integer& p, const Integer& q);

enum class AdmissibleClass { pseudo_integral, pseudo_rational_only, not_admissible };

std::string to_string(AdmissibleClass c);

AdmissibleClass classify_admissible(const Integer& alpha, const Integer& beta);

/// Integer solutions of beta = 2 alpha / (alpha - 1) with 1 < alpha <= bound, by scanning.
std::vector<std::pair<Integer, Integer>> solve_beta_equation(long bound = 100);

}  // namespace pcollapse
