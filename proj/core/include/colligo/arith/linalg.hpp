#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "colligo/arith/matrix.hpp"
#include "colligo/arith/rational.hpp"

namespace colligo::arith {

using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;

/// Row-reduced echelon form together with its pivot columns.
struct Rref {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};

Rref rref(QMatrix m);
std::size_t rank(const QMatrix& m);
Rational det(QMatrix m);

/// Throws SingularMatrixError.
QMatrix inverse(const QMatrix& m);
/// Solves m x = rhs for square nonsingular m; throws SingularMatrixError.
QVector solve(const QMatrix& m, const QVector& rhs);
QMatrix solve(const QMatrix& m, const QMatrix& rhs);

/// Basis of the right null space, one column per basis vector (n x k, possibly k = 0).
QMatrix kernel_basis(const QMatrix& m);

/// Coordinates of v in the column basis `basis` (independent columns), or
/// nothing when v is outside their span.
std::optional<QVector> coordinates(const QMatrix& basis, const QVector& v);

/// Reduced column echelon form of the column span: columns ordered by their
/// pivot row, pivot entry 1, every other basis column zero in that row.
QMatrix column_space_basis(const QMatrix& m);

/// Pivot rows of a matrix already in reduced column echelon form.
std::vector<std::size_t> column_pivots(const QMatrix& echelon);

/// Extends independent columns to a basis of Q^n with standard vectors;
/// the appended columns come after the given ones.
QMatrix complete_basis(const QMatrix& independent);

}  // namespace colligo::arith
