// Dense exact linear algebra over the rationals.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pcollapse/arith.hpp"

namespace pcollapse {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// In-place reduced row echelon form. Returns the pivot column of each nonzero row.
std::vector<std::size_t> reduce_row_echelon(RationalMatrix& m);

/// One basis vector per free column, in column order: that free variable is 1,
/// the other free variables are 0.
std::vector<std::vector<Rational>> nullspace_basis(RationalMatrix m, std::size_t columns);

/// Unique solution of a x = b, or nullopt when the system is singular or inconsistent.
std::optional<std::vector<Rational>> solve_unique(const RationalMatrix& a, const std::vector<Rational>& b);

/// Scales a nonzero vector to coprime integer entries, keeping the sign of the first nonzero entry.
std::vector<Rational> primitive_integer_vector(std::vector<Rational> v);

}  // namespace pcollapse
