#pragma once

#include <cstddef>

#include "colligo/arith/linalg.hpp"

namespace colligo::coll {

using arith::QMatrix;
using arith::Rational;

/// Square matrix of size alpha + m*N split into a corner block a (alpha x alpha),
/// row blocks b_i (alpha x N), column blocks c_i (N x alpha) and inner blocks d_ij.
///
/// Coordinates: [corner | block 0 | block 1 | ... | block m-1].
class Colligation {
 public:
  Colligation() = default;
  /// Throws ShapeError unless entries is square of size alpha + m * inner.
  Colligation(QMatrix entries, std::size_t alpha, std::size_t m, std::size_t inner);
  /// m = 1 from the four blocks.
  static Colligation from_blocks(const QMatrix& a, const QMatrix& b, const QMatrix& c, const QMatrix& d);
  /// m = 1 with inner size = size - alpha.
  static Colligation square(QMatrix entries, std::size_t alpha);

  std::size_t alpha() const noexcept { return alpha_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t inner() const noexcept { return inner_; }
  std::size_t size() const noexcept { return entries_.rows(); }
  const QMatrix& entries() const noexcept { return entries_; }

  QMatrix a() const { return entries_.block(0, 0, alpha_, alpha_); }
  QMatrix b(std::size_t i) const { return entries_.block(0, offset(i), alpha_, inner_); }
  QMatrix c(std::size_t i) const { return entries_.block(offset(i), 0, inner_, alpha_); }
  QMatrix d(std::size_t i, std::size_t j) const { return entries_.block(offset(i), offset(j), inner_, inner_); }
  /// All row blocks side by side (alpha x mN), and so on.
  QMatrix b() const { return entries_.block(0, alpha_, alpha_, m_ * inner_); }
  QMatrix c() const { return entries_.block(alpha_, 0, m_ * inner_, alpha_); }
  QMatrix d() const { return entries_.block(alpha_, alpha_, m_ * inner_, m_ * inner_); }

  bool operator==(const Colligation&) const = default;

 private:
  std::size_t offset(std::size_t i) const { return alpha_ + i * inner_; }

  QMatrix entries_;
  std::size_t alpha_ = 0;
  std::size_t m_ = 1;
  std::size_t inner_ = 0;
};

/// The product: g acts on (corner, g-blocks), h on (corner, h-blocks); the inner
/// block i of the result is (g block i, h block i). Requires equal alpha and m.
Colligation circ(const Colligation& g, const Colligation& h);

/// diag(1, u, ..., u) g diag(1, u, ..., u)^{-1} for invertible u of size N.
Colligation conjugate(const Colligation& g, const QMatrix& u);

/// Appends one inner coordinate carrying 1 on the diagonal (m = 1).
Colligation embed(const Colligation& g);

/// (A g + B)(C g + D)^{-1} for coeffs = [[A, B], [C, D]]; throws
/// SingularMatrixError when C g + D is singular or coeffs is degenerate.
Colligation mobius(const Colligation& g, const QMatrix& coeffs);

}  // namespace colligo::coll
