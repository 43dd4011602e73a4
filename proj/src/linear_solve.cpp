#include "qf/linear_solve.hpp"

#include "qf/error.hpp"

namespace qf {

LinearSolution solve_linear(Matrix a, std::vector<Scalar> b, std::size_t cols) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw DomainError("solve_linear: rhs size mismatch");
  for (const auto& row : a)
    if (row.size() != cols) throw DomainError("solve_linear: ragged matrix");

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Scalar inv = a[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!a[r][k].is_zero()) a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  LinearSolution sol;
  sol.rank = r;
  sol.consistent = true;
  for (std::size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) sol.consistent = false;

  sol.particular.assign(cols, Scalar());
  if (sol.consistent)
    for (std::size_t i = 0; i < r; ++i) sol.particular[pivot_cols[i]] = b[i];

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < r; ++i) v[pivot_cols[i]] = -a[i][f];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

}  // namespace qf
