#include "colligo/colligation/colligation.hpp"

#include "colligo/errors.hpp"

namespace colligo::coll {

Colligation::Colligation(QMatrix entries, std::size_t alpha, std::size_t m, std::size_t inner)
    : entries_(std::move(entries)), alpha_(alpha), m_(m), inner_(inner) {
  if (m_ == 0) throw ShapeError("Colligation: m must be at least 1");
  if (entries_.rows() != entries_.cols() || entries_.rows() != alpha_ + m_ * inner_) {
    throw ShapeError("Colligation: matrix of size " + std::to_string(entries_.rows()) + "x" +
                     std::to_string(entries_.cols()) + " does not match alpha + m*N = " +
                     std::to_string(alpha_ + m_ * inner_));
  }
}

Colligation Colligation::from_blocks(const QMatrix& a, const QMatrix& b, const QMatrix& c, const QMatrix& d) {
  const std::size_t al = a.rows();
  const std::size_t n = d.rows();
  if (a.cols() != al || b.rows() != al || b.cols() != n || c.rows() != n || c.cols() != al || d.cols() != n) {
    throw ShapeError("Colligation: block shapes do not fit");
  }
  QMatrix e(al + n, al + n);
  e.set_block(0, 0, a);
  e.set_block(0, al, b);
  e.set_block(al, 0, c);
  e.set_block(al, al, d);
  return Colligation(std::move(e), al, 1, n);
}

Colligation Colligation::square(QMatrix entries, std::size_t alpha) {
  if (entries.rows() < alpha) throw ShapeError("Colligation: corner larger than matrix");
  const std::size_t n = entries.rows() - alpha;
  return Colligation(std::move(entries), alpha, 1, n);
}

Colligation circ(const Colligation& g, const Colligation& h) {
  if (g.alpha() != h.alpha() || g.m() != h.m()) throw ShapeError("circ: corner sizes or block counts differ");
  const std::size_t al = g.alpha();
  const std::size_t m = g.m();
  const std::size_t n1 = g.inner();
  const std::size_t n2 = h.inner();
  const std::size_t n = n1 + n2;
  const QMatrix a = g.a();
  const QMatrix p = h.a();

  QMatrix e(al + m * n, al + m * n);
  auto g_off = [&](std::size_t i) { return al + i * n; };
  auto h_off = [&](std::size_t i) { return al + i * n + n1; };
  e.set_block(0, 0, a * p);
  for (std::size_t j = 0; j < m; ++j) {
    e.set_block(0, g_off(j), g.b(j));
    e.set_block(0, h_off(j), a * h.b(j));
  }
  for (std::size_t i = 0; i < m; ++i) {
    const QMatrix ci = g.c(i);
    e.set_block(g_off(i), 0, ci * p);
    e.set_block(h_off(i), 0, h.c(i));
    for (std::size_t j = 0; j < m; ++j) {
      e.set_block(g_off(i), g_off(j), g.d(i, j));
      e.set_block(g_off(i), h_off(j), ci * h.b(j));
      e.set_block(h_off(i), h_off(j), h.d(i, j));
    }
  }
  return Colligation(std::move(e), al, m, n);
}

Colligation conjugate(const Colligation& g, const QMatrix& u) {
  if (u.rows() != g.inner() || u.cols() != g.inner()) throw ShapeError("conjugate: wrong size of u");
  const QMatrix ui = arith::inverse(u);
  QMatrix big = QMatrix::identity(g.alpha());
  QMatrix big_inv = big;
  for (std::size_t i = 0; i < g.m(); ++i) {
    big = arith::direct_sum(big, u);
    big_inv = arith::direct_sum(big_inv, ui);
  }
  return Colligation(big * g.entries() * big_inv, g.alpha(), g.m(), g.inner());
}

Colligation embed(const Colligation& g) {
  if (g.m() != 1) throw PreconditionError("embed: defined for m = 1");
  return Colligation(arith::direct_sum(g.entries(), QMatrix::identity(1)), g.alpha(), 1, g.inner() + 1);
}

Colligation mobius(const Colligation& g, const QMatrix& coeffs) {
  if (coeffs.rows() != 2 || coeffs.cols() != 2) throw ShapeError("mobius: coefficients must be 2x2");
  if (arith::is_zero(coeffs(0, 0) * coeffs(1, 1) - coeffs(0, 1) * coeffs(1, 0))) {
    throw SingularMatrixError("mobius: degenerate coefficient matrix");
  }
  const QMatrix& x = g.entries();
  const QMatrix one = QMatrix::identity(x.rows());
  const QMatrix num = coeffs(0, 0) * x + coeffs(0, 1) * one;
  const QMatrix den = coeffs(1, 0) * x + coeffs(1, 1) * one;
  return Colligation(num * arith::inverse(den), g.alpha(), g.m(), g.inner());
}

}  // namespace colligo::coll
