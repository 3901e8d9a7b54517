#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "colligo/lattice/quasi_lattice.hpp"

namespace colligo::lattice {

/// A lattice up to multiplication by nonzero scalars, kept as the canonical
/// representative whose entries have minimal p-valuation exactly 0.
class TreeVertex {
 public:
  const QuasiLattice& lattice() const noexcept { return lat_; }
  std::size_t ambient_dim() const noexcept { return lat_.ambient_dim(); }

  bool operator==(const TreeVertex&) const = default;
  std::strong_ordering operator<=>(const TreeVertex& o) const { return lat_ <=> o.lat_; }

 private:
  friend TreeVertex vertex_class(const QuasiLattice& r);
  explicit TreeVertex(QuasiLattice lat) : lat_(std::move(lat)) {}

  QuasiLattice lat_;
};

/// Throws NotALatticeError unless r is a full lattice.
TreeVertex vertex_class(const QuasiLattice& r);

/// T contains R contains pT; both must be full lattices.
bool arrow(const QuasiLattice& r, const QuasiLattice& t);

/// The p + 1 neighbors of a vertex of the tree (ambient dimension 2), sorted.
std::vector<TreeVertex> neighbors(const TreeVertex& v);

/// Graph distance, from the relative invariant factors of two representatives.
long distance(const TreeVertex& a, const TreeVertex& b);

struct Ball {
  std::vector<TreeVertex> vertices;                      // sorted
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // index pairs, first < second
};

/// All vertices within `radius` of `center` (sorted, each once).
std::vector<TreeVertex> ball(const TreeVertex& center, long radius);
/// The ball together with its edges.
Ball ball_graph(const TreeVertex& center, long radius);

/// Whether M is within precision p^-k of the subspace L up to rescaling: some
/// p^t M lies inside L + p^k O^n and meets L in a module containing p^-k (L cap O^n).
bool converges_to(const QuasiLattice& m, const SubspaceRep& l, long k);
/// Applies the test to the tail element of the sequence.
bool converges_to(const std::vector<QuasiLattice>& seq, const SubspaceRep& l, long k);

}  // namespace colligo::lattice
