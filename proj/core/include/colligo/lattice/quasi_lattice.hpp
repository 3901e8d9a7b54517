#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "colligo/arith/linalg.hpp"
#include "colligo/arith/rational.hpp"

namespace colligo::lattice {

using arith::PAdicContext;
using arith::QMatrix;
using arith::QVector;
using arith::Rational;
using arith::Valuation;

/// Exponent of a generator: an integer e (the O-line p^e O c) or -infinity
/// (the whole field line K c).
class Exponent {
 public:
  constexpr Exponent() = default;
  constexpr Exponent(long e) : value_(e) {}  // NOLINT(google-explicit-constructor)
  static constexpr Exponent whole_line() {
    Exponent e;
    e.line_ = true;
    return e;
  }

  constexpr bool is_whole_line() const noexcept { return line_; }
  constexpr long value() const noexcept { return value_; }

  constexpr bool operator==(const Exponent&) const = default;

 private:
  bool line_ = false;
  long value_ = 0;
};

/// A linear subspace of Q^n kept as its reduced column echelon basis.
class SubspaceRep {
 public:
  SubspaceRep() = default;
  /// Any spanning set; dependent columns are fine.
  SubspaceRep(std::size_t ambient_dim, const QMatrix& spanning);

  static SubspaceRep whole(std::size_t n);
  static SubspaceRep zero(std::size_t n) { return SubspaceRep(n, QMatrix(n, 0)); }

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return basis_.cols(); }
  const QMatrix& basis() const noexcept { return basis_; }
  bool contains(const QVector& v) const;

  bool operator==(const SubspaceRep&) const = default;

 private:
  std::size_t n_ = 0;
  QMatrix basis_;
};

/// An O-submodule of Q^n of the form (subspace) + (finitely generated part),
/// O = Z localized at p.
///
/// Canonical form: the subspace part W in reduced column echelon form; the
/// finite part is a lower column echelon basis g_1..g_k, zero in the pivot rows
/// of W, with g_j(r_j) = p^{e_j} at its pivot row r_j and every g_i (i < j)
/// reduced modulo p^{e_j} at row r_j. Two modules are equal iff their canonical
/// forms are.
class QuasiLattice {
 public:
  QuasiLattice() = default;
  /// Module sum_i p^{e_i} O c_i (K c_i for whole-line exponents); columns may be dependent.
  QuasiLattice(const PAdicContext& ctx, const QMatrix& columns, const std::vector<Exponent>& exponents);

  static QuasiLattice standard(const PAdicContext& ctx, std::size_t n);
  static QuasiLattice zero(const PAdicContext& ctx, std::size_t n);
  static QuasiLattice whole(const PAdicContext& ctx, std::size_t n);
  /// O-span of the columns.
  static QuasiLattice span(const PAdicContext& ctx, const QMatrix& columns);
  static QuasiLattice subspace(const PAdicContext& ctx, const SubspaceRep& s);
  /// p^{e_1} O + ... + p^{e_n} O along the standard basis.
  static QuasiLattice diagonal(const PAdicContext& ctx, const std::vector<long>& exponents);

  const PAdicContext& ctx() const noexcept { return ctx_; }
  long prime() const noexcept { return ctx_.prime(); }
  std::size_t ambient_dim() const noexcept { return n_; }

  /// Canonical subspace basis (columns).
  const QMatrix& line_part() const noexcept { return lines_; }
  /// Canonical finite generators g_j (pivot entry p^{e_j}).
  const QMatrix& finite_part() const noexcept { return finite_; }
  const std::vector<long>& finite_exponents() const noexcept { return exps_; }
  const std::vector<std::size_t>& finite_pivots() const noexcept { return pivots_; }

  /// Normalized generators c_i (pivot entry 1): subspace columns first.
  QMatrix columns() const;
  std::vector<Exponent> exponents() const;

  std::size_t subspace_rank() const noexcept { return lines_.cols(); }
  std::size_t rank() const noexcept { return lines_.cols() + finite_.cols(); }
  /// Lattice in the strict sense: rank n and no subspace part.
  bool is_full_lattice() const noexcept { return lines_.cols() == 0 && finite_.cols() == n_; }
  /// The K-span.
  SubspaceRep field_span() const;

  bool contains(const QVector& v) const;
  /// Largest t with v in p^t M; +infinity when v lies in the subspace part (or
  /// v = 0); nothing when v is outside the K-span.
  std::optional<Valuation> level(const QVector& v) const;
  bool contains(const QuasiLattice& other) const;

  /// c * M for a nonzero scalar.
  QuasiLattice scaled(const Rational& c) const;

  bool operator==(const QuasiLattice& o) const;
  /// Total order on canonical forms.
  std::strong_ordering operator<=>(const QuasiLattice& o) const;

  /// Short text label of the canonical form.
  std::string digest() const;

 private:
  void canonicalize(const QMatrix& columns, const std::vector<Exponent>& exponents);
  // Coefficients of v on the finite generators after clearing the subspace part;
  // nothing when v is outside the span.
  std::optional<QVector> finite_coordinates(QVector v) const;

  PAdicContext ctx_{2};
  std::size_t n_ = 0;
  QMatrix lines_;
  QMatrix finite_;
  std::vector<long> exps_;
  std::vector<std::size_t> line_pivots_;
  std::vector<std::size_t> pivots_;
};

bool member(const QVector& v, const QuasiLattice& m);

QuasiLattice sum(const QuasiLattice& a, const QuasiLattice& b);
QuasiLattice intersect(const QuasiLattice& a, const QuasiLattice& b);
/// a in the first coordinates, b in the last ones.
QuasiLattice direct_sum(const QuasiLattice& a, const QuasiLattice& b);

/// {v in Q^m : phi v in M} for phi : Q^m -> Q^n.
QuasiLattice preimage(const QMatrix& phi, const QuasiLattice& m);
/// phi(M).
QuasiLattice image(const QMatrix& phi, const QuasiLattice& m);

/// R (x) O^N inside Q^{2mN} for R in Q^{2m} with coordinates (u | v).
///
/// Coordinates are (y | x), each block of size mN; generator (u, v) (x) e_j puts
/// u_i at y-slot i*N + j and v_i at x-slot m*N + i*N + j (0-based).
QuasiLattice tensor_id(const QuasiLattice& r, std::size_t inner);

/// {(u, w) : (u, v) in S and (v, w) in T for some v}; S, T in Q^{2k} split in halves.
QuasiLattice relation_compose(const QuasiLattice& s, const QuasiLattice& t);

/// The diagonal subspace {(v, v)} of Q^{2k}.
QuasiLattice identity_relation(const PAdicContext& ctx, std::size_t k);

}  // namespace colligo::lattice
