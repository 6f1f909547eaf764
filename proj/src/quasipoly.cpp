#include "pcollapse/quasipoly.hpp"

#include <map>

#include "pcollapse/counting.hpp"
#include "pcollapse/linalg.hpp"

namespace pcollapse {

namespace {

std::int64_t residue(std::int64_t t, std::int64_t period) {
  const std::int64_t z = t % period;
  return z < 0 ? z + period : z;
}

Rational horner(const std::vector<Rational>& coeffs, std::int64_t t) {
  Rational acc = 0;
  const Rational x(static_cast<long>(t));
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool constituents_repeat(const Quasipolynomial& qp, std::int64_t divisor) {
  for (std::int64_t z = divisor; z < qp.period; ++z) {
    if (qp.coeffs[static_cast<std::size_t>(z)] != qp.coeffs[static_cast<std::size_t>(z % divisor)]) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool Quasipolynomial::is_minimal() const { return reduced_period(*this) == period; }

std::optional<Quasipolynomial> fit_quasipolynomial(std::span<const Sample> samples, std::int64_t period,
                                                    int degree) {
  if (period < 1) throw std::invalid_argument("period must be positive");
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  const auto points = static_cast<std::size_t>(degree) + 1;

  // Distinct abscissae per residue class, first occurrence wins; repeats are verified later.
  std::vector<std::map<std::int64_t, const Sample*>> classes(static_cast<std::size_t>(period));
  for (const auto& sample : samples) {
    auto& cls = classes[static_cast<std::size_t>(residue(sample.t, period))];
    if (cls.size() < points) cls.emplace(sample.t, &sample);
  }
  for (std::int64_t z = 0; z < period; ++z) {
    if (classes[static_cast<std::size_t>(z)].size() < points) {
      throw InsufficientSamples("residue class " + std::to_string(z) + " mod " + std::to_string(period) +
                                " has fewer than " + std::to_string(points) + " distinct samples");
    }
  }

  Quasipolynomial qp{period, degree, {}};
  qp.coeffs.reserve(static_cast<std::size_t>(period));
  for (const auto& cls : classes) {
    RationalMatrix vandermonde;
    std::vector<Rational> rhs;
    for (const auto& [t, sample] : cls) {
      std::vector<Rational> row(points);
      Rational power = 1;
      for (std::size_t j = 0; j < points; ++j) {
        row[j] = power;
        power *= static_cast<long>(t);
      }
      vandermonde.push_back(std::move(row));
      rhs.emplace_back(sample->value);
    }
    auto solution = solve_unique(vandermonde, rhs);
    if (!solution) return std::nullopt;
    qp.coeffs.push_back(std::move(*solution));
  }

  for (const auto& sample : samples) {
    if (evaluate(qp, sample.t) != Rational(sample.value)) return std::nullopt;
  }
  return qp;
}

Rational evaluate(const Quasipolynomial& qp, std::int64_t t) {
  return horner(qp.coeffs.at(static_cast<std::size_t>(residue(t, qp.period))), t);
}

std::int64_t reduced_period(const Quasipolynomial& qp) {
  for (std::int64_t divisor = 1; divisor < qp.period; ++divisor) {
    if (qp.period % divisor == 0 && constituents_repeat(qp, divisor)) return divisor;
  }
  return qp.period;
}

Quasipolynomial regroup(const Quasipolynomial& qp, std::int64_t period) {
  if (period < 1 || qp.period % period != 0) throw std::invalid_argument("regroup needs a divisor of the period");
  if (!constituents_repeat(qp, period)) throw std::invalid_argument("constituents differ under the new period");
  Quasipolynomial out{period, qp.degree, {}};
  out.coeffs.assign(qp.coeffs.begin(), qp.coeffs.begin() + period);
  return out;
}

PeriodResult minimal_period_from(const CountFunction& count, std::int64_t guaranteed_period, int degree,
                                 int jobs) {
  if (guaranteed_period < 1) throw std::invalid_argument("period must be positive");
  const std::int64_t sample_count = (static_cast<std::int64_t>(degree) + 2) * guaranteed_period;
  const auto samples = collect_samples(count, 0, sample_count, jobs);
  const auto fitted = fit_quasipolynomial(samples, guaranteed_period, degree);
  if (!fitted) {
    throw FitFailure("counts do not fit a quasipolynomial of period " + std::to_string(guaranteed_period));
  }
  const std::int64_t minimal = reduced_period(*fitted);
  return PeriodResult{guaranteed_period, minimal, regroup(*fitted, minimal)};
}

PeriodResult minimal_period(const RationalTriangleParams& params, int degree, int jobs) {
  const Integer d = denominator(params);
  if (!d.fits_slong_p()) throw std::invalid_argument("denominator too large to sample");
  const TrianglePair pair = params.pair();
  return minimal_period_from([&pair](std::int64_t t) { return count_triangle(pair, t); }, d.get_si(), degree,
                             jobs);
}

PeriodResult minimal_period(const AdmissiblePair& pair, int degree, int jobs) {
  if (!pair.alpha.fits_slong_p()) throw std::invalid_argument("alpha too large to sample");
  const TrianglePair triangle = pair.pair();
  return minimal_period_from([&triangle](std::int64_t t) { return count_triangle(triangle, t); },
                             pair.alpha.get_si(), degree, jobs);
}

SeriesNumerator series_numerator(const Integer& i1, const Integer& i2) {
  return SeriesNumerator{Rational(1), Rational(i1 - 3), Rational(3 - 3 * i1 + i2)};
}

ReciprocityReport reciprocity_report(const AdmissiblePair& pair, const Quasipolynomial& qp, std::int64_t t) {
  if (t < 1) throw std::invalid_argument("reciprocity needs t >= 1");
  ReciprocityReport report;
  report.t = t;
  report.lhs = evaluate(qp, -t);
  report.interior = count_triangle_interior(pair.pair(), t);
  report.mu_observed = report.lhs - report.interior;
  report.alpha_divides_t = closed_form_context(pair.alpha, t).sigma == 1;
  return report;
}

}  // namespace pcollapse
