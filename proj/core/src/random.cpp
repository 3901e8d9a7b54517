#include "colligo/random.hpp"

#include <algorithm>

namespace colligo::sample {

using arith::QMatrix;
using arith::Rational;
using lattice::Exponent;
using lattice::QuasiLattice;

Rational rational(Rng& rng, long range, const std::vector<long>& dens) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<std::size_t> pick(0, dens.size() - 1);
  Rational r(num(rng), dens[pick(rng)]);
  r.canonicalize();
  return r;
}

QMatrix matrix(Rng& rng, std::size_t rows, std::size_t cols, long range, const std::vector<long>& dens) {
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(rng, range, dens);
  }
  return m;
}

QMatrix unimodular(Rng& rng, std::size_t n, long p, long range) {
  const arith::PAdicContext ctx(p);
  while (true) {
    QMatrix m = matrix(rng, n, n, range);
    const Rational d = arith::det(m);
    if (!arith::is_zero(d) && arith::val_p(d, ctx) == arith::Valuation(0)) return m;
  }
}

QuasiLattice full_lattice(Rng& rng, const lattice::PAdicContext& ctx, std::size_t n, long spread, long range) {
  std::uniform_int_distribution<long> ex(-spread, spread);
  while (true) {
    QMatrix m = matrix(rng, n, n, range);
    if (arith::is_zero(arith::det(m))) continue;
    std::vector<Exponent> e;
    for (std::size_t j = 0; j < n; ++j) e.emplace_back(ex(rng));
    return QuasiLattice(ctx, m, e);
  }
}

QuasiLattice quasi_lattice(Rng& rng, const lattice::PAdicContext& ctx, std::size_t n, std::size_t lines,
                           std::size_t finite, long spread, long range) {
  std::uniform_int_distribution<long> ex(-spread, spread);
  const QMatrix m = matrix(rng, n, lines + finite, range);
  std::vector<Exponent> e(lines, Exponent::whole_line());
  for (std::size_t j = 0; j < finite; ++j) e.emplace_back(ex(rng));
  return QuasiLattice(ctx, m, e);
}

coll::Colligation colligation(Rng& rng, std::size_t alpha, std::size_t n, long range, const std::vector<long>& dens) {
  return coll::Colligation::square(matrix(rng, alpha + n, alpha + n, range, dens), alpha);
}

coll::Colligation diagonal_colligation(Rng& rng, std::size_t n, std::vector<Rational>& taken, long range) {
  QMatrix e = matrix(rng, 1 + n, 1 + n, range);
  for (std::size_t i = 0; i < n; ++i) {
    Rational v;
    do {
      v = rational(rng, range, {1, 2});
    } while (std::find(taken.begin(), taken.end(), v) != taken.end());
    taken.push_back(v);
    for (std::size_t j = 0; j < n; ++j) e(1 + i, 1 + j) = i == j ? v : Rational(0);
  }
  return coll::Colligation::square(std::move(e), 1);
}

arith::RatFun scalar_function(Rng& rng, int max_degree, long range) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  arith::Poly num(rational(rng, range, {1, 2}));
  while (num.is_zero()) num = arith::Poly(rational(rng, range, {1, 2}));
  arith::Poly den(1);
  for (int k = deg(rng); k > 0; --k) num *= arith::Poly::linear_root(rational(rng, range, {1, 2, 3}));
  for (int k = deg(rng); k > 0; --k) {
    Rational pole;
    while (arith::is_zero(pole)) pole = rational(rng, range, {1, 2, 3});
    den *= arith::Poly::linear_root(pole);
  }
  return arith::RatFun(num, den);
}

}  // namespace colligo::sample
