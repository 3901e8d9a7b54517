#pragma once

#include <vector>

#include "colligo/arith/poly.hpp"

namespace colligo::arith {

struct PolyFactor {
  Poly poly;  // monic, irreducible over Q, degree >= 1
  int multiplicity = 0;

  bool operator==(const PolyFactor&) const = default;
};

/// Square-free decomposition p = c * prod f_i^i (Yun); returns (f_i, i) with
/// f_i monic, square-free and pairwise coprime. Constant factors are dropped.
std::vector<PolyFactor> squarefree_decomposition(const Poly& p);

/// Complete factorization over Q into monic irreducibles (Zassenhaus: modular
/// factorization, Hensel lifting, subset recombination). Sorted by Poly order.
std::vector<PolyFactor> factor_over_q(const Poly& p);

}  // namespace colligo::arith
