#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "freediv/ring/rational.hpp"

namespace freediv::linalg {

/// Dense row-major rational matrix.
using Matrix = std::vector<std::vector<Rational>>;
using Vector = std::vector<Rational>;

/// Reduced row echelon form in place; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(Matrix& m, std::size_t ncols);

/// Basis of {v : m v = 0}.
std::vector<Vector> nullspace(const Matrix& m, std::size_t ncols);

/// Some solution of m v = rhs, if the system is consistent.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs, std::size_t ncols);

/// A point v with m v = 0 and every v_i >= 1, if one exists (exact phase-one simplex, Bland's rule).
std::optional<Vector> strictly_positive_kernel_point(const Matrix& m, std::size_t ncols);

}  // namespace freediv::linalg
