#include "colligo/colligation/realize.hpp"

#include <optional>
#include <vector>

#include "colligo/arith/factor.hpp"
#include "colligo/colligation/characteristic.hpp"
#include "colligo/errors.hpp"

namespace colligo::coll {

using arith::Poly;
using arith::RatFun;

namespace {

// Everything below works in the coordinate s = 1/lambda, where a colligation
// [[A, B], [1, sigma]] has characteristic function A + B / (s - sigma).

std::optional<Rational> rational_root(const Poly& f) {
  if (f.degree() < 1) return std::nullopt;
  if (arith::is_zero(f.coeff(0))) return Rational(0);
  for (const auto& factor : arith::factor_over_q(f)) {
    if (factor.poly.degree() == 1) return -factor.poly.coeff(0);
  }
  return std::nullopt;
}

Colligation one_by_one(const Rational& corner, const Rational& row, const Rational& col, const Rational& inner) {
  QMatrix e(2, 2);
  e(0, 0) = corner;
  e(0, 1) = row;
  e(1, 0) = col;
  e(1, 1) = inner;
  return Colligation::square(std::move(e), 1);
}

std::optional<Rational> value_at(const RatFun& f, const Rational& s) {
  if (arith::is_zero(f.den()(s))) return std::nullopt;
  return f(s);
}

const std::vector<Rational>& sample_points() {
  static const std::vector<Rational> pts = [] {
    std::vector<Rational> out;
    for (long den = 1; den <= 4; ++den) {
      for (long num = -6; num <= 6; ++num) {
        Rational x(num, den);
        x.canonicalize();
        bool seen = false;
        for (const auto& y : out) seen = seen || y == x;
        if (!seen) out.push_back(x);
      }
    }
    return out;
  }();
  return pts;
}

Colligation realize_proper(const RatFun& f);

std::optional<Colligation> peel(const RatFun& f) {
  const auto pole = rational_root(f.den());
  if (!pole) return std::nullopt;
  const int dn = f.num().degree();
  const int dd = f.den().degree();
  const Poly pole_factor = Poly::linear_root(*pole);
  if (const auto zero = rational_root(f.num())) {
    const RatFun rest = f * RatFun(pole_factor, Poly::linear_root(*zero));
    return circ(one_by_one(1, *pole - *zero, 1, *pole), realize_proper(rest));
  }
  if (dn < dd) {
    const RatFun rest = f * RatFun(pole_factor);
    return circ(one_by_one(0, 1, 1, *pole), realize_proper(rest));
  }
  return std::nullopt;
}

std::optional<Colligation> via_mobius(const RatFun& f) {
  const auto& pts = sample_points();
  for (const auto& s0 : pts) {
    const auto w0 = value_at(f, s0);
    if (!w0) continue;
    const auto f_w0 = value_at(f, *w0);
    if (!f_w0 || *f_w0 == *w0 || s0 == *w0) continue;
    for (const auto& s1 : pts) {
      const auto w1 = value_at(f, s1);
      if (!w1 || *w1 == *w0 || s1 == *w0) continue;
      // M(z) = (z - w1) / (z - w0) sends w0 to infinity and w1 to 0.
      const RatFun inner = arith::compose_mobius(f, -*w0, *w1, Rational(-1), Rational(1));
      const RatFun top = inner - RatFun(*w1);
      const RatFun bottom = inner - RatFun(*w0);
      if (bottom.is_zero()) continue;
      const RatFun target = top / bottom;
      if (target.num().degree() > target.den().degree()) continue;
      try {
        const Colligation g = realize_proper(target);
        QMatrix back(2, 2);
        back(0, 0) = -*w0;
        back(0, 1) = *w1;
        back(1, 0) = -1;
        back(1, 1) = 1;
        Colligation h = mobius(g, back);
        if (char_fun(h).entry(0, 0) == arith::compose_mobius(f, 0, 1, 1, 0)) return h;
      } catch (const Error&) {
      }
    }
  }
  return std::nullopt;
}

Colligation realize_proper(const RatFun& f) {
  const int dd = f.den().degree();
  if (dd == 0) return Colligation::square(QMatrix(1, 1, Rational(f.num().coeff(0) / f.den().coeff(0))), 1);
  if (auto g = peel(f)) return *g;
  if (auto g = via_mobius(f)) return *g;
  throw RealizationError("realize: no rational degree-one factor reachable for " + f.num().to_string("s") + " / " +
                         f.den().to_string("s"));
}

}  // namespace

Colligation realize(const RatFun& w) {
  if (arith::is_zero(w.den().coeff(0))) throw PoleError("realize: pole at 0");
  const RatFun f = arith::compose_mobius(w, 0, 1, 1, 0);
  return realize_proper(f);
}

}  // namespace colligo::coll
