#include "pcollapse/precursive.hpp"

#include "pcollapse/linalg.hpp"

namespace pcollapse {

namespace {

// Row for index n: coefficient of unknown (j, i) is (n+j)^i f(n+j).
std::vector<Rational> recurrence_row(std::span<const Integer> values, std::size_t n, int order, int degree) {
  std::vector<Rational> row;
  row.reserve(static_cast<std::size_t>((order + 1) * (degree + 1)));
  for (int j = 0; j <= order; ++j) {
    const std::size_t idx = n + static_cast<std::size_t>(j);
    Integer power = 1;
    for (int i = 0; i <= degree; ++i) {
      row.emplace_back(power * values[idx]);
      power *= static_cast<unsigned long>(idx);
    }
  }
  return row;
}

Recurrence unpack(const std::vector<Rational>& v, int order, int degree) {
  Recurrence rec{order, degree, {}};
  const auto width = static_cast<std::size_t>(degree + 1);
  for (int j = 0; j <= order; ++j) {
    const auto start = v.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(j) * width);
    rec.polys.emplace_back(start, start + static_cast<std::ptrdiff_t>(width));
  }
  return rec;
}

}  // namespace

bool verify_recurrence(const Recurrence& rec, std::span<const Integer> values) {
  const auto order = static_cast<std::size_t>(rec.order);
  if (values.size() <= order) throw std::invalid_argument("sequence shorter than the recurrence order");
  for (std::size_t n = 0; n + order < values.size(); ++n) {
    Rational sum = 0;
    for (std::size_t j = 0; j <= order; ++j) {
      const Rational x(static_cast<unsigned long>(n + j));
      Rational p = 0;
      const auto& poly = rec.polys[j];
      for (auto it = poly.rbegin(); it != poly.rend(); ++it) p = p * x + *it;
      sum += p * values[n + j];
    }
    if (sum != 0) return false;
  }
  return true;
}

std::optional<Recurrence> guess_recurrence(std::span<const Integer> values, int max_order, int max_degree) {
  if (max_order < 0 || max_degree < 0) throw std::invalid_argument("bounds must be nonnegative");
  const long needed = 2L * (max_order + 1) * (max_degree + 1) + max_order;
  const long last_index = static_cast<long>(values.size()) - 1;
  if (last_index < needed) {
    throw InsufficientData("need f(0.." + std::to_string(needed) + "), got f(0.." + std::to_string(last_index) +
                           ")");
  }
  const std::size_t half = values.size() / 2;
  const auto fit_window = values.first(half);
  for (int order = 0; order <= max_order; ++order) {
    for (int degree = 0; degree <= max_degree; ++degree) {
      const auto unknowns = static_cast<std::size_t>((order + 1) * (degree + 1));
      RationalMatrix system;
      for (std::size_t n = 0; n + static_cast<std::size_t>(order) < fit_window.size(); ++n) {
        system.push_back(recurrence_row(fit_window, n, order, degree));
      }
      if (system.empty()) continue;
      for (auto& candidate : nullspace_basis(std::move(system), unknowns)) {
        Recurrence rec = unpack(primitive_integer_vector(std::move(candidate)), order, degree);
        if (verify_recurrence(rec, values)) return rec;
      }
    }
  }
  return std::nullopt;
}

Recurrence difference_recurrence(int order) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  // Coefficient of S^j in (S - 1)^order is C(order, j) (-1)^(order - j).
  Recurrence rec{order, 0, {}};
  Integer binom = 1;
  for (int j = 0; j <= order; ++j) {
    const int sign = (order - j) % 2 == 0 ? 1 : -1;
    rec.polys.push_back({Rational(binom * sign)});
    binom = binom * (order - j) / (j + 1);
  }
  return rec;
}

}  // namespace pcollapse
