#include "colligo/arith/linalg.hpp"

#include "colligo/errors.hpp"

namespace colligo::arith {

Rref rref(QMatrix m) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, r);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

Rational det(QMatrix m) {
  if (m.rows() != m.cols()) throw ShapeError("det: matrix not square");
  Rational d = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && is_zero(m(piv, c))) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      m.swap_rows(piv, c);
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

QMatrix solve(const QMatrix& m, const QMatrix& rhs) {
  if (m.rows() != m.cols() || rhs.rows() != m.rows()) throw ShapeError("solve: shape mismatch");
  const std::size_t n = m.rows();
  Rref r = rref(hconcat(m, rhs));
  if (r.pivots.size() < n || (n > 0 && r.pivots[n - 1] != n - 1)) {
    throw SingularMatrixError("solve: singular matrix");
  }
  return r.reduced.block(0, n, n, rhs.cols());
}

QVector solve(const QMatrix& m, const QVector& rhs) { return solve(m, QMatrix::column(rhs)).col(0); }

QMatrix inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse: matrix not square");
  return solve(m, QMatrix::identity(m.rows()));
}

QMatrix kernel_basis(const QMatrix& m) {
  const Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  QMatrix out(m.cols(), m.cols() - r.pivots.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    out(free, k) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) out(r.pivots[i], k) = -r.reduced(i, free);
    ++k;
  }
  return out;
}

std::optional<QVector> coordinates(const QMatrix& basis, const QVector& v) {
  if (basis.rows() != v.size()) throw ShapeError("coordinates: dimension mismatch");
  const std::size_t k = basis.cols();
  const Rref r = rref(hconcat(basis, QMatrix::column(v)));
  if (!r.pivots.empty() && r.pivots.back() == k) return std::nullopt;
  if (r.pivots.size() != k) throw PreconditionError("coordinates: basis columns are dependent");
  QVector c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = r.reduced(i, k);
  return c;
}

QMatrix column_space_basis(const QMatrix& m) {
  const Rref r = rref(m.transpose());
  return r.reduced.block(0, 0, r.pivots.size(), m.rows()).transpose();
}

std::vector<std::size_t> column_pivots(const QMatrix& echelon) {
  std::vector<std::size_t> piv;
  for (std::size_t j = 0; j < echelon.cols(); ++j) {
    std::size_t i = 0;
    while (i < echelon.rows() && is_zero(echelon(i, j))) ++i;
    piv.push_back(i);
  }
  return piv;
}

QMatrix complete_basis(const QMatrix& independent) {
  const std::size_t n = independent.rows();
  QMatrix out = independent;
  std::size_t r = rank(out);
  if (r != independent.cols()) throw PreconditionError("complete_basis: columns are dependent");
  for (std::size_t i = 0; i < n && r < n; ++i) {
    QMatrix e(n, 1);
    e(i, 0) = 1;
    QMatrix trial = hconcat(out, e);
    if (rank(trial) > r) {
      out = std::move(trial);
      ++r;
    }
  }
  return out;
}

}  // namespace colligo::arith
