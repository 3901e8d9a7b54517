#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "colligo/colligation/colligation.hpp"
#include "colligo/lattice/quasi_lattice.hpp"
#include "colligo/lattice/tree.hpp"

namespace colligo::building {

using arith::QMatrix;
using arith::Rational;
using coll::Colligation;
using lattice::QuasiLattice;
using lattice::TreeVertex;

struct CharMapResult {
  QuasiLattice lattice;  // in Q^{2 alpha}, coordinates (q | p)
  bool is_full_lattice = false;
  std::size_t subspace_rank = 0;
};

/// All (q, p) such that (q, y) = g (p, x) for some (y, x) in R (x) O^N.
/// R lives in Q^{2m} with coordinates (y | x); block i of y or x is the i-th
/// copy of Q^N, so slot i*N + j.
CharMapResult char_lattice_m(const Colligation& g, const QuasiLattice& r);
/// m = 1 case, R in Q^2.
CharMapResult char_lattice(const Colligation& g, const QuasiLattice& r);

/// a + b S' (1 - d S')^{-1} c with S' = S (x) 1_N; throws SingularMatrixError
/// when 1 - d S' is singular.
QMatrix char_boundary(const Colligation& g, const QMatrix& s);

/// Projective class of char_lattice(g, v); throws NotALatticeError when the
/// image has a subspace part or is not of full rank.
TreeVertex vertex_map(const Colligation& g, const TreeVertex& v);

enum class EdgeStatus { preserved, contracted, violation, degenerate };

struct TreeMapReport {
  lattice::Ball source;
  std::vector<std::optional<TreeVertex>> images;  // nullopt for degenerate images
  std::vector<EdgeStatus> edge_status;            // parallel to source.edges
  std::size_t preserved = 0;
  std::size_t contracted = 0;
  std::size_t violations = 0;
  std::size_t degenerate_vertices = 0;
};

/// For each edge R -> T of the ball, the images must coincide or be joined by
/// an arrow; for alpha = 1 the image classes must also be equal or adjacent.
TreeMapReport tree_map_check(const Colligation& g, const TreeVertex& center, long radius);

/// Graphviz documents for the source ball and for the image vertices; contracted
/// edges are dashed, violations red.
std::string source_dot(const TreeMapReport& report);
std::string image_dot(const TreeMapReport& report);

/// R_j = O (1, lambda) + p^j O (0, 1) for j = 0..j_max, M_j = char_lattice(g, R_j),
/// and converges_to(M_j, graph of chi(lambda), k) on the tail. Throws PoleError
/// when lambda is a pole of the characteristic function, PreconditionError when
/// det(1 - lambda d) = 0 (a zero cancelled in chi is still singular: the images
/// then stay in one class) or unless j_max > 2k.
bool boundary_limit_check(const Colligation& g, const lattice::PAdicContext& ctx, const Rational& lambda, long j_max,
                          long k);

/// The lattices R_j used above.
QuasiLattice boundary_approximant(const lattice::PAdicContext& ctx, const Rational& lambda, long j);

}  // namespace colligo::building
