// Exact guessing of P-recurrences
//   p_k(n+k) f(n+k) + ... + p_0(n) f(n) = 0
// for integer sequences. Absence of a recurrence within the bounds is evidence,
// not proof, that a sequence is not P-recursive.
#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcollapse/arith.hpp"

namespace pcollapse {

class InsufficientData : public std::invalid_argument {
 public:
  explicit InsufficientData(const std::string& what) : std::invalid_argument(what) {}
};

struct Recurrence {
  int order = 0;
  int degree = 0;
  /// polys[j][i] is the coefficient of x^i in p_j; p_j is evaluated at n + j.
  std::vector<std::vector<Rational>> polys;

  friend bool operator==(const Recurrence&, const Recurrence&) = default;
};

/// Exact check at every n with n + order inside the data.
bool verify_recurrence(const Recurrence& rec, std::span<const Integer> values);

/// Scans (order, degree) lexicographically, fits on the first half of the data
/// and verifies on all of it. Requires values.size() - 1 >= 2 (k+1)(d+1) + k
/// for the bounds (k, d); throws InsufficientData otherwise.
std::optional<Recurrence> guess_recurrence(std::span<const Integer> values, int max_order, int max_degree);

/// Annihilator (S - 1)^order with constant coefficients.
Recurrence difference_recurrence(int order);

}  // namespace pcollapse
