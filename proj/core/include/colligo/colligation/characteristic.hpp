#pragma once

#include <optional>
#include <vector>

#include "colligo/arith/poly.hpp"
#include "colligo/arith/ratfun.hpp"
#include "colligo/colligation/colligation.hpp"
#include "colligo/lattice/quasi_lattice.hpp"

namespace colligo::coll {

using arith::Poly;
using arith::RatFunMat;

/// A point of the projective line: a rational number, or nothing for infinity.
using ProjectivePoint = std::optional<Rational>;

/// Characteristic polynomial data of a square matrix d by Faddeev-LeVerrier:
/// det(x - d) = sum coeffs[k] x^(n-k) with coeffs[0] = 1, and
/// adj(x - d) = sum_k x^(n-1-k) adjugate_terms[k].
struct CharPolyData {
  std::vector<Rational> coeffs;
  std::vector<QMatrix> adjugate_terms;
};
CharPolyData faddeev_leverrier(const QMatrix& d);

/// det(1 - x d) as a polynomial in x.
Poly inner_determinant(const QMatrix& d);

/// a + x b (1 - x d)^{-1} c with denominator dividing det(1 - x d); requires m = 1.
RatFunMat char_fun(const Colligation& g);

/// a - b d^{-1} c; throws SingularMatrixError when d is singular.
QMatrix char_at_infty(const Colligation& g);

/// det(char_fun) * det(1 - x d) == det [[a, -x b], [c, 1 - x d]] as polynomials.
bool det_char_check(const Colligation& g);

/// Limit at the point of the graphs {(chi p, p)} (coordinates (q-part, p-part)),
/// well defined at poles and at rank drops.
lattice::SubspaceRep graph_at(const Colligation& g, const ProjectivePoint& point);

/// Graph {(m p, p)} of a constant matrix.
lattice::SubspaceRep graph_of(const QMatrix& m);

}  // namespace colligo::coll
