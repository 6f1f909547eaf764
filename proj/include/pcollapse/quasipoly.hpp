// Quasipolynomials: exact fitting from counted samples, minimal periods,
// evaluation at negative arguments and the degree-2 Ehrhart series numerator.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcollapse/arith.hpp"
#include "pcollapse/kernels.hpp"
#include "pcollapse/polytopes.hpp"

namespace pcollapse {

class InsufficientSamples : public std::invalid_argument {
 public:
  explicit InsufficientSamples(const std::string& what) : std::invalid_argument(what) {}
};

/// A fit at a period guaranteed by theory failed. Indicates a counting bug.
class FitFailure : public std::logic_error {
 public:
  explicit FitFailure(const std::string& what) : std::logic_error(what) {}
};

/// c_z(t) = sum_j coeffs[z][j] t^j for t = z (mod period).
struct Quasipolynomial {
  std::int64_t period = 1;
  int degree = 0;
  std::vector<std::vector<Rational>> coeffs;

  /// No proper divisor of the period yields identical constituents.
  bool is_minimal() const;

  friend bool operator==(const Quasipolynomial&, const Quasipolynomial&) = default;
};

/// Interpolates each residue class from its first degree+1 distinct samples and
/// checks every other sample. nullopt means the data is not a quasipolynomial of
/// this period and degree. Throws InsufficientSamples if a class is short.
std::optional<Quasipolynomial> fit_quasipolynomial(std::span<const Sample> samples, std::int64_t period,
                                                    int degree);

/// Constituent for the residue of t in [0, period).
Rational evaluate(const Quasipolynomial& qp, std::int64_t t);

/// Least divisor of qp.period under which all constituents coincide.
std::int64_t reduced_period(const Quasipolynomial& qp);

/// Re-expresses qp with a divisor of its period. Throws if the constituents disagree.
Quasipolynomial regroup(const Quasipolynomial& qp, std::int64_t period);

struct PeriodResult {
  std::int64_t guaranteed_period = 1;
  std::int64_t minimal_period = 1;
  Quasipolynomial quasipolynomial;  // expressed at the minimal period
};

/// Fits at a period known to be valid, using t = 0 .. (degree+2)*period - 1,
/// then scans divisors for the minimal period.
PeriodResult minimal_period_from(const CountFunction& count, std::int64_t guaranteed_period, int degree,
                                 int jobs = 0);

/// Guaranteed period is the denominator lcm(q, s).
PeriodResult minimal_period(const RationalTriangleParams& params, int degree = 2, int jobs = 0);

/// Guaranteed period is alpha.
PeriodResult minimal_period(const AdmissiblePair& pair, int degree = 2, int jobs = 0);

/// g(z) = a0 + a1 z + a2 z^2 with sum_t I(t) z^t = g(z) / (1 - z)^3.
struct SeriesNumerator {
  Rational a0;
  Rational a1;
  Rational a2;
  friend bool operator==(const SeriesNumerator&, const SeriesNumerator&) = default;
};

/// From I(1) and I(2) of a pseudo-integral triangle with I(0) = 1.
SeriesNumerator series_numerator(const Integer& i1, const Integer& i2);

struct ReciprocityReport {
  std::int64_t t = 0;
  Rational lhs;        // evaluate(qp, -t)
  Integer interior;    // lattice points strictly inside t T
  Rational mu_observed;
  bool alpha_divides_t = false;
};

/// Records evaluate(qp, -t) against the interior count; asserts nothing.
ReciprocityReport reciprocity_report(const AdmissiblePair& pair, const Quasipolynomial& qp, std::int64_t t);

}  // namespace pcollapse
