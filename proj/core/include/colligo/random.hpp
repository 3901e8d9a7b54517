#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "colligo/arith/linalg.hpp"
#include "colligo/arith/ratfun.hpp"
#include "colligo/colligation/colligation.hpp"
#include "colligo/lattice/quasi_lattice.hpp"

namespace colligo::sample {

using Rng = std::mt19937_64;

/// n / d with n uniform in [-range, range] and d drawn from `dens`.
arith::Rational rational(Rng& rng, long range, const std::vector<long>& dens = {1});
arith::QMatrix matrix(Rng& rng, std::size_t rows, std::size_t cols, long range,
                      const std::vector<long>& dens = {1});

/// Integer matrix whose determinant is a p-adic unit (an element of GL(n, O)).
arith::QMatrix unimodular(Rng& rng, std::size_t n, long p, long range = 3);

/// Full lattice: random integer basis of nonzero determinant scaled column-wise
/// by p^e, e in [-spread, spread].
lattice::QuasiLattice full_lattice(Rng& rng, const lattice::PAdicContext& ctx, std::size_t n, long spread = 2,
                                   long range = 3);

/// Module of the general shape: `lines` whole-line generators and `finite`
/// generators, all random (possibly dependent).
lattice::QuasiLattice quasi_lattice(Rng& rng, const lattice::PAdicContext& ctx, std::size_t n, std::size_t lines,
                                    std::size_t finite, long spread = 2, long range = 3);

/// m = 1 colligation with random entries.
coll::Colligation colligation(Rng& rng, std::size_t alpha, std::size_t n, long range = 3,
                              const std::vector<long>& dens = {1});

/// alpha = 1 colligation with diagonal inner block; the diagonal avoids `taken`
/// and has distinct entries (which are appended to `taken`).
coll::Colligation diagonal_colligation(Rng& rng, std::size_t n, std::vector<arith::Rational>& taken, long range = 4);

/// c * prod (x - zero_i) / prod (x - pole_j) with rational zeros and nonzero rational
/// poles, at most `max_degree` of each.
arith::RatFun scalar_function(Rng& rng, int max_degree, long range = 4);

}  // namespace colligo::sample
