#include "colligo/arith/ratfun.hpp"

#include <algorithm>

#include "colligo/errors.hpp"

namespace colligo::arith {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PreconditionError("RatFun: zero denominator");
  canonicalize();
}

void RatFun::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    num_ *= Rational(1) / lead;
    den_ *= Rational(1) / lead;
  }
}

Rational RatFun::operator()(const Rational& at) const {
  const Rational d = den_(at);
  if (arith::is_zero(d)) throw PoleError("rational function has a pole at " + to_string(at));
  return num_(at) / d;
}

Valuation RatFun::order_at(const Rational& point) const {
  if (num_.is_zero()) return Valuation::infinity();
  return Valuation(root_multiplicity(num_, point) - root_multiplicity(den_, point));
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  canonicalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw PreconditionError("RatFun: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  canonicalize();
  return *this;
}

Poly det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("det: polynomial matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return Poly(1);
  PolyMatrix a = m;
  Poly prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k).is_zero()) ++piv;
      if (piv == n) return Poly();
      a.swap_rows(piv, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = exact_div(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      }
      a(i, k) = Poly();
    }
    prev = a(k, k);
  }
  Poly d = a(n - 1, n - 1);
  if (sign < 0) d = -d;
  return d;
}

QMatrix eval(const PolyMatrix& m, const Rational& at) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j)(at);
  }
  return out;
}

RatFunMat::RatFunMat(PolyMatrix num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PreconditionError("RatFunMat: zero denominator");
  canonicalize();
}

RatFunMat RatFunMat::constant(const QMatrix& m) {
  PolyMatrix num(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) num(i, j) = Poly(m(i, j));
  }
  return RatFunMat(std::move(num), Poly(1));
}

void RatFunMat::canonicalize() {
  if (num_.is_zero_matrix()) {
    den_ = Poly(1);
    return;
  }
  Poly g = den_;
  for (const auto& e : num_.data()) {
    if (g.degree() == 0) break;
    g = gcd(g, e);
  }
  if (g.degree() > 0) {
    den_ = exact_div(den_, g);
    for (std::size_t i = 0; i < num_.rows(); ++i) {
      for (std::size_t j = 0; j < num_.cols(); ++j) num_(i, j) = exact_div(num_(i, j), g);
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational s = Rational(1) / lead;
    den_ *= s;
    for (std::size_t i = 0; i < num_.rows(); ++i) {
      for (std::size_t j = 0; j < num_.cols(); ++j) num_(i, j) *= s;
    }
  }
}

QMatrix RatFunMat::eval(const Rational& at) const {
  const Rational d = den_(at);
  if (is_zero(d)) throw PoleError("characteristic function has a pole at " + to_string(at));
  QMatrix out = arith::eval(num_, at);
  out *= Rational(1) / d;
  return out;
}

namespace {

Poly homogenized(const Poly& p, const Poly& top, const Poly& bottom, std::size_t n) {
  Poly out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    Poly term = top.pow(static_cast<unsigned>(k)) * bottom.pow(static_cast<unsigned>(n - k));
    term *= p.coeff(k);
    out += term;
  }
  return out;
}

}  // namespace

RatFun compose_mobius(const RatFun& f, const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  if (is_zero(a * d - b * c)) throw PreconditionError("compose_mobius: degenerate substitution");
  const auto n = static_cast<std::size_t>(std::max({f.num().degree(), f.den().degree(), 0}));
  const Poly top(std::vector<Rational>{b, a});
  const Poly bottom(std::vector<Rational>{d, c});
  return RatFun(homogenized(f.num(), top, bottom, n), homogenized(f.den(), top, bottom, n));
}

RatFunMat RatFunMat::inverted_argument() const {
  int deg = den_.degree();
  for (const auto& e : num_.data()) deg = std::max(deg, e.degree());
  const auto n = static_cast<std::size_t>(deg);
  PolyMatrix num(num_.rows(), num_.cols());
  for (std::size_t i = 0; i < num_.rows(); ++i) {
    for (std::size_t j = 0; j < num_.cols(); ++j) num(i, j) = num_(i, j).reversed(n);
  }
  return RatFunMat(std::move(num), den_.reversed(n));
}

RatFunMat operator*(const RatFunMat& a, const RatFunMat& b) {
  return RatFunMat(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunMat operator+(const RatFunMat& a, const RatFunMat& b) {
  PolyMatrix lhs = a.num_;
  PolyMatrix rhs = b.num_;
  lhs *= b.den_;
  rhs *= a.den_;
  return RatFunMat(lhs + rhs, a.den_ * b.den_);
}

}  // namespace colligo::arith
