#include "colligo/colligation/characteristic.hpp"

#include "colligo/arith/smith.hpp"
#include "colligo/errors.hpp"

namespace colligo::coll {

using arith::PolyMatrix;
using arith::RatFun;

namespace {

void require_single_block(const Colligation& g, const char* what) {
  if (g.m() != 1) throw PreconditionError(std::string(what) + ": defined for m = 1");
}

PolyMatrix constant_poly(const QMatrix& m) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Poly(m(i, j));
  }
  return out;
}

}  // namespace

CharPolyData faddeev_leverrier(const QMatrix& d) {
  if (d.rows() != d.cols()) throw ShapeError("faddeev_leverrier: matrix not square");
  const std::size_t n = d.rows();
  CharPolyData out;
  out.coeffs.push_back(Rational(1));
  QMatrix m = QMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    out.adjugate_terms.push_back(m);
    const QMatrix dm = d * m;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += dm(i, i);
    const Rational ck = -tr / static_cast<long>(k);
    out.coeffs.push_back(ck);
    m = dm;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += ck;
  }
  return out;
}

Poly inner_determinant(const QMatrix& d) { return Poly(faddeev_leverrier(d).coeffs); }

RatFunMat char_fun(const Colligation& g) {
  require_single_block(g, "char_fun");
  const QMatrix a = g.a();
  const QMatrix b = g.b();
  const QMatrix c = g.c();
  const CharPolyData fl = faddeev_leverrier(g.d());
  const Poly den(fl.coeffs);
  PolyMatrix num = constant_poly(a);
  num *= den;
  for (std::size_t k = 0; k < fl.adjugate_terms.size(); ++k) {
    const QMatrix term = b * fl.adjugate_terms[k] * c;
    for (std::size_t i = 0; i < term.rows(); ++i) {
      for (std::size_t j = 0; j < term.cols(); ++j) num(i, j) += Poly::monomial(term(i, j), k + 1);
    }
  }
  return RatFunMat(std::move(num), den);
}

QMatrix char_at_infty(const Colligation& g) {
  require_single_block(g, "char_at_infty");
  if (g.inner() == 0) return g.a();
  return g.a() - g.b() * arith::solve(g.d(), g.c());
}

bool det_char_check(const Colligation& g) {
  require_single_block(g, "det_char_check");
  const std::size_t al = g.alpha();
  const std::size_t n = g.inner();
  const RatFunMat chi = char_fun(g);
  const Poly pg = inner_determinant(g.d());

  PolyMatrix block(al + n, al + n);
  const Poly x = Poly::x();
  const QMatrix& e = g.entries();
  for (std::size_t i = 0; i < al + n; ++i) {
    for (std::size_t j = 0; j < al + n; ++j) {
      const bool row_inner = i >= al;
      const bool col_inner = j >= al;
      if (!col_inner) {
        block(i, j) = Poly(e(i, j));
      } else {
        block(i, j) = -(x * Poly(e(i, j)));
        if (row_inner && i == j) block(i, j) += Poly(1);
      }
    }
  }
  const Poly lhs = arith::det(chi.numerator()) * pg;
  const Poly rhs = arith::det(block) * chi.denominator().pow(static_cast<unsigned>(al));
  return lhs == rhs;
}

lattice::SubspaceRep graph_of(const QMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("graph_of: matrix not square");
  return lattice::SubspaceRep(2 * m.rows(), vconcat(m, QMatrix::identity(m.rows())));
}

lattice::SubspaceRep graph_at(const Colligation& g, const ProjectivePoint& point) {
  require_single_block(g, "graph_at");
  const std::size_t al = g.alpha();
  RatFunMat chi = char_fun(g);
  if (!point) chi = chi.inverted_argument();
  const Rational at = point ? *point : Rational(0);

  const Poly& den = chi.denominator();
  const int pole = arith::root_multiplicity(den, at);
  const Poly unit_den = arith::exact_div(den, Poly::linear_root(at).pow(static_cast<unsigned>(pole)));
  const Rational h = Rational(1) / unit_den(at);

  arith::Matrix<RatFun> num(al, al);
  for (std::size_t i = 0; i < al; ++i) {
    for (std::size_t j = 0; j < al; ++j) num(i, j) = RatFun(chi.numerator()(i, j));
  }
  const auto s = arith::smith_dvr(num, arith::LocalFunctionDvr(at));

  QMatrix u(al, al);
  QMatrix v(al, al);
  for (std::size_t i = 0; i < al; ++i) {
    for (std::size_t j = 0; j < al; ++j) {
      u(i, j) = s.U(i, j)(at);
      v(i, j) = s.V(i, j)(at);
    }
  }
  const QMatrix v_inv = arith::inverse(v);

  // Limit of {(U D V p, p)}: in the coordinates (U^{-1} q, V p) each diagonal
  // entry t^e h contributes one limit line.
  QMatrix span(2 * al, al);
  for (std::size_t i = 0; i < al; ++i) {
    QMatrix q_part(al, 1);
    QMatrix p_part(al, 1);
    if (i < s.exponents.size()) {
      const long e = s.exponents[i] - pole;
      if (e < 0) {
        q_part(i, 0) = 1;
      } else if (e == 0) {
        q_part(i, 0) = h;
        p_part(i, 0) = 1;
      } else {
        p_part(i, 0) = 1;
      }
    } else {
      p_part(i, 0) = 1;
    }
    span.set_block(0, i, u * q_part);
    span.set_block(al, i, v_inv * p_part);
  }
  return lattice::SubspaceRep(2 * al, span);
}

}  // namespace colligo::coll
