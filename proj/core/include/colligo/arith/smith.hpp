#pragma once

#include <cstddef>
#include <vector>

#include "colligo/arith/matrix.hpp"
#include "colligo/arith/ratfun.hpp"
#include "colligo/arith/rational.hpp"

namespace colligo::arith {

/// Q with the p-adic valuation; the valuation ring is Z localized at p.
struct PAdicDvr {
  using Elem = Rational;

  explicit PAdicDvr(const PAdicContext& ctx) : p(ctx.prime()) {}

  Valuation valuation(const Elem& x) const {
    if (is_zero(x)) return Valuation::infinity();
    return Valuation(val_p(x.get_num(), p) - val_p(x.get_den(), p));
  }
  Elem uniformizer_power(long e) const { return pow_p(p, e); }

  long p;
};

/// Q(x) with the order of vanishing at a rational point x0; uniformizer x - x0.
struct LocalFunctionDvr {
  using Elem = RatFun;

  explicit LocalFunctionDvr(Rational point) : point(std::move(point)) {}

  Valuation valuation(const Elem& f) const { return f.order_at(point); }
  Elem uniformizer_power(long e) const {
    const Poly t = Poly::linear_root(point).pow(static_cast<unsigned>(e < 0 ? -e : e));
    return e >= 0 ? RatFun(t) : RatFun(Poly(1), t);
  }

  Rational point;
};

/// M = U * D * V with U, V invertible over the valuation ring and D diagonal.
///
/// D(i, i) = t^exponents[i] for i < exponents.size() (the rank), zero elsewhere;
/// exponents are non-decreasing and are the invariant factors of M.
template <class Elem>
struct SmithForm {
  Matrix<Elem> U;
  Matrix<Elem> D;
  Matrix<Elem> V;
  std::vector<long> exponents;
};

/// Smith normal form over a discrete valuation ring.
///
/// Pivot: the entry of minimal valuation in the remaining block, ties broken by
/// the lowest (row, column) index.
template <class Dvr>
SmithForm<typename Dvr::Elem> smith_dvr(const Matrix<typename Dvr::Elem>& m, const Dvr& dvr) {
  using Elem = typename Dvr::Elem;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Matrix<Elem> a = m;
  Matrix<Elem> u = Matrix<Elem>::identity(rows);
  Matrix<Elem> v = Matrix<Elem>::identity(cols);
  std::vector<long> exps;

  // Invariant: m == u * a * v.
  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    bool found = false;
    Valuation best;
    std::size_t pi = t;
    std::size_t pj = t;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (is_zero(a(i, j))) continue;
        const Valuation val = dvr.valuation(a(i, j));
        if (!found || val < best) {
          found = true;
          best = val;
          pi = i;
          pj = j;
        }
      }
    }
    if (!found) break;

    // a <- P a : u <- u P^{-1}; swapping rows of a swaps columns of u.
    a.swap_rows(t, pi);
    u.swap_cols(t, pi);
    a.swap_cols(t, pj);
    v.swap_rows(t, pj);

    // Normalize the pivot to t^e: divide row t of a by the unit, multiply column t of u.
    const Elem target = dvr.uniformizer_power(best.value());
    const Elem unit = a(t, t) / target;
    if (!(unit == Elem(1))) {
      const Elem inv = Elem(1) / unit;
      for (std::size_t j = t; j < cols; ++j) a(t, j) = a(t, j) * inv;
      for (std::size_t i = 0; i < rows; ++i) u(i, t) = u(i, t) * unit;
    }

    // Clear column t below the pivot: row_i -= f row_t; u: col_t += f col_i.
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (is_zero(a(i, t))) continue;
      const Elem f = a(i, t) / a(t, t);
      for (std::size_t j = t; j < cols; ++j) a(i, j) = a(i, j) - f * a(t, j);
      for (std::size_t r = 0; r < rows; ++r) u(r, t) = u(r, t) + f * u(r, i);
    }
    // Clear row t right of the pivot: col_j -= f col_t; v: row_t += f row_j.
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (is_zero(a(t, j))) continue;
      const Elem f = a(t, j) / a(t, t);
      a(t, j) = Elem(0);
      for (std::size_t c = 0; c < cols; ++c) v(t, c) = v(t, c) + f * v(j, c);
    }
    exps.push_back(best.value());
  }
  return SmithForm<Elem>{std::move(u), std::move(a), std::move(v), std::move(exps)};
}

}  // namespace colligo::arith
