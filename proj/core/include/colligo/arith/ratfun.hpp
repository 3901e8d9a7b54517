#pragma once

#include <cstddef>

#include "colligo/arith/linalg.hpp"
#include "colligo/arith/matrix.hpp"
#include "colligo/arith/poly.hpp"
#include "colligo/arith/rational.hpp"

namespace colligo::arith {

/// Scalar rational function num/den over Q, reduced with monic denominator.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(int c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(const Poly& p) : num_(p), den_(1) {}      // NOLINT(google-explicit-constructor)
  RatFun(Poly num, Poly den);

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  /// Throws PoleError at a root of the denominator.
  Rational operator()(const Rational& at) const;

  /// Order of vanishing at `point` (negative at a pole, +infinity for zero).
  Valuation order_at(const Rational& point) const;

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend RatFun operator-(RatFun a) {
    a.num_ = -a.num_;
    return a;
  }

  bool operator==(const RatFun&) const = default;

 private:
  void canonicalize();

  Poly num_;
  Poly den_;
};

inline bool is_zero(const RatFun& f) { return f.is_zero(); }

/// f((a x + b) / (c x + d)) for a nondegenerate substitution.
RatFun compose_mobius(const RatFun& f, const Rational& a, const Rational& b, const Rational& c, const Rational& d);

using PolyMatrix = Matrix<Poly>;

/// Determinant of a polynomial matrix (fraction-free Bareiss elimination).
Poly det(const PolyMatrix& m);

/// Matrix of rational functions stored as (polynomial matrix) / (one common denominator).
///
/// Canonical: the denominator is monic and shares no factor with all numerator
/// entries jointly; the zero matrix has denominator 1.
class RatFunMat {
 public:
  RatFunMat() : den_(1) {}
  RatFunMat(PolyMatrix num, Poly den);

  static RatFunMat constant(const QMatrix& m);

  std::size_t rows() const noexcept { return num_.rows(); }
  std::size_t cols() const noexcept { return num_.cols(); }
  const PolyMatrix& numerator() const noexcept { return num_; }
  const Poly& denominator() const noexcept { return den_; }
  RatFun entry(std::size_t i, std::size_t j) const { return RatFun(num_(i, j), den_); }

  /// Entrywise evaluation; throws PoleError when the denominator vanishes.
  QMatrix eval(const Rational& at) const;

  /// F(1/x), used to inspect the point at infinity.
  RatFunMat inverted_argument() const;

  friend RatFunMat operator*(const RatFunMat& a, const RatFunMat& b);
  friend RatFunMat operator+(const RatFunMat& a, const RatFunMat& b);

  bool operator==(const RatFunMat&) const = default;

 private:
  void canonicalize();

  PolyMatrix num_;
  Poly den_;
};

/// Polynomial matrix entries evaluated at a point.
QMatrix eval(const PolyMatrix& m, const Rational& at);

}  // namespace colligo::arith
