#include "pcollapse/linalg.hpp"

#include <stdexcept>

namespace pcollapse {

std::vector<std::size_t> reduce_row_echelon(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t i = row; i < rows; ++i) {
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(m[row], m[pivot]);
    const Rational scale = 1 / m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= scale;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational factor = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Rational>> nullspace_basis(RationalMatrix m, std::size_t columns) {
  for (const auto& r : m) {
    if (r.size() != columns) throw std::invalid_argument("ragged matrix");
  }
  const auto pivots = reduce_row_echelon(m);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(columns, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve_unique(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("right-hand side length mismatch");
  if (a.empty()) return std::nullopt;
  const std::size_t n = a.front().size();
  RationalMatrix augmented = a;
  for (std::size_t i = 0; i < augmented.size(); ++i) augmented[i].push_back(b[i]);
  const auto pivots = reduce_row_echelon(augmented);
  if (pivots.size() != n) return std::nullopt;
  for (auto c : pivots) {
    if (c == n) return std::nullopt;  // inconsistent row 0 = 1
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = augmented[i][n];
  return x;
}

std::vector<Rational> primitive_integer_vector(std::vector<Rational> v) {
  Integer den_lcm = 1;
  for (const auto& x : v) den_lcm = lcm(den_lcm, x.get_den());
  Integer num_gcd = 0;
  for (const auto& x : v) num_gcd = gcd(num_gcd, Integer(x.get_num() * (den_lcm / x.get_den())));
  if (num_gcd == 0) throw std::invalid_argument("zero vector has no primitive form");
  for (auto& x : v) x = Rational(x * den_lcm / num_gcd);
  return v;
}

}  // namespace pcollapse
