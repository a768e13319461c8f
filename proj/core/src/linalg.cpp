#include "shifted_poisson/linalg.hpp"

#include <stdexcept>

namespace shifted_poisson {

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  for (const auto& row : m)
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t selected = pivot_row;
    while (selected < rows && m[selected][col] == 0) ++selected;
    if (selected == rows) continue;
    std::swap(m[pivot_row], m[selected]);
    const Rational inv = Rational(1) / m[pivot_row][col];
    for (std::size_t c = col; c < cols; ++c) m[pivot_row][c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[pivot_row][c];
    }
    pivots.push_back(static_cast<int>(col));
    ++pivot_row;
  }
  return pivots;
}

std::vector<Vector> kernel_basis(const Matrix& a) {
  if (a.empty()) return {};
  Matrix m = a;
  const std::size_t cols = m[0].size();
  std::vector<int> pivots = rref(m);
  std::vector<char> is_pivot(cols, 0);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = 1;

  std::vector<Vector> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vector v(cols, Rational(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[static_cast<std::size_t>(pivots[i])] = -m[i][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const Matrix& a) {
  if (a.empty()) return 0;
  Matrix m = a;
  return static_cast<int>(rref(m).size());
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: row count mismatch");
  if (a.empty()) return Vector{};
  const std::size_t cols = a[0].size();
  Matrix augmented = a;
  for (std::size_t r = 0; r < a.size(); ++r) augmented[r].push_back(b[r]);
  std::vector<int> pivots = rref(augmented);
  for (int p : pivots)
    if (p == static_cast<int>(cols)) return std::nullopt;  // pivot in the constants column
  Vector x(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[static_cast<std::size_t>(pivots[i])] = augmented[i][cols];
  return x;
}

Vector reduce_against(const std::vector<Vector>& rows, Vector candidate) {
  for (const auto& row : rows) {
    std::size_t lead = 0;
    while (lead < row.size() && row[lead] == 0) ++lead;
    if (lead == row.size()) continue;
    if (candidate[lead] == 0) continue;
    const Rational factor = candidate[lead] / row[lead];
    for (std::size_t c = lead; c < row.size(); ++c) candidate[c] -= factor * row[c];
  }
  return candidate;
}

}  // namespace shifted_poisson
