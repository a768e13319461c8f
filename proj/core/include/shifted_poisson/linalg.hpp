#pragma once

#include "shifted_poisson/rational.hpp"

#include <optional>
#include <vector>

namespace shifted_poisson {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major, rows of equal length

/// In-place reduced row echelon form; returns the pivot column indices in order.
std::vector<int> rref(Matrix& m);

/// Basis of the right kernel {x : A x = 0}, one vector per free column, in
/// ascending free-column order with the free coordinate set to 1.
std::vector<Vector> kernel_basis(const Matrix& a);

/// Rank of the matrix.
int rank(const Matrix& a);

/// One solution of A x = b if the system is consistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Reduces `candidate` against the row space spanned by `rows` (each already
/// reduced); returns the reduced vector (zero iff dependent).
Vector reduce_against(const std::vector<Vector>& rows, Vector candidate);

}  // namespace shifted_poisson
