#include "freediv/ring/linalg.hpp"

#include "freediv/error.hpp"

namespace freediv::linalg {

std::vector<std::size_t> rref(Matrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<Vector> nullspace(const Matrix& m, std::size_t ncols) {
  Matrix a = m;
  auto pivots = rref(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(ncols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs, std::size_t ncols) {
  if (rhs.size() != m.size()) throw StructuralError("linalg::solve: rhs length mismatch");
  Matrix a = m;
  for (std::size_t r = 0; r < a.size(); ++r) {
    a[r].resize(ncols);
    a[r].push_back(rhs[r]);
  }
  auto pivots = rref(a, ncols);
  for (std::size_t r = pivots.size(); r < a.size(); ++r)
    if (a[r][ncols] != 0) return std::nullopt;
  Vector v(ncols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = a[r][ncols];
  return v;
}

std::optional<Vector> strictly_positive_kernel_point(const Matrix& m, std::size_t ncols) {
  // v = 1 + u with u >= 0:  A u = -A 1.  Phase one with one artificial per row.
  const std::size_t rows = m.size();
  const std::size_t width = ncols + rows;
  Matrix t(rows, Vector(width + 1, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    Rational b = 0;
    for (std::size_t c = 0; c < ncols; ++c) b -= m[r][c];
    Rational sign = b < 0 ? -1 : 1;
    for (std::size_t c = 0; c < ncols; ++c) t[r][c] = sign * m[r][c];
    t[r][ncols + r] = 1;
    t[r][width] = sign * b;
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = ncols + r;
  auto cost = [&](std::size_t j) { return j >= ncols ? Rational(1) : Rational(0); };

  while (true) {
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j < width && !enter; ++j) {
      Rational rc = cost(j);
      for (std::size_t r = 0; r < rows; ++r) rc -= cost(basis[r]) * t[r][j];
      if (rc < 0) enter = j;
    }
    if (!enter) break;
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][*enter] <= 0) continue;
      Rational ratio = t[r][width] / t[r][*enter];
      if (!leave || ratio < best || (ratio == best && basis[r] < basis[*leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (!leave) throw InvariantError("phase-one simplex unbounded");
    std::size_t pr = *leave;
    Rational inv = 1 / t[pr][*enter];
    for (auto& x : t[pr]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || t[r][*enter] == 0) continue;
      Rational f = t[r][*enter];
      for (std::size_t c = 0; c <= width; ++c) t[r][c] -= f * t[pr][c];
    }
    basis[pr] = *enter;
  }
  for (std::size_t r = 0; r < rows; ++r)
    if (basis[r] >= ncols && t[r][width] != 0) return std::nullopt;
  Vector v(ncols, 1);
  for (std::size_t r = 0; r < rows; ++r)
    if (basis[r] < ncols) v[basis[r]] += t[r][width];
  return v;
}

}  // namespace freediv::linalg
