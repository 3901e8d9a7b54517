#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "colligo/arith/poly.hpp"
#include "colligo/colligation/colligation.hpp"

namespace colligo::coll {

using arith::Poly;

/// A point of the exceptional divisor: a rational number, the roots of a monic
/// irreducible polynomial of degree >= 2 over Q (one symbol for the whole orbit),
/// or infinity.
struct DivisorPoint {
  enum class Kind { rational, algebraic, infinity };

  Kind kind = Kind::rational;
  Rational value;  // rational points
  Poly min_poly;   // algebraic points

  static DivisorPoint rational_point(const Rational& x) { return {Kind::rational, x, Poly()}; }
  static DivisorPoint algebraic(const Poly& monic_irreducible) { return {Kind::algebraic, Rational(0), monic_irreducible}; }
  static DivisorPoint infinity() { return {Kind::infinity, Rational(0), Poly()}; }

  bool operator==(const DivisorPoint& o) const;
  std::strong_ordering operator<=>(const DivisorPoint& o) const;
  std::string to_string() const;
};

/// A positive integer or infinity.
struct Multiplicity {
  bool infinite = false;
  long value = 0;

  static Multiplicity inf() { return {true, 0}; }
  bool operator==(const Multiplicity&) const = default;
  std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
};

/// Finitely supported multiset of divisor points (zero multiplicities are dropped).
class Divisor {
 public:
  using Map = std::map<DivisorPoint, Multiplicity>;

  Divisor() = default;
  explicit Divisor(Map points);

  const Map& points() const noexcept { return points_; }
  Multiplicity at(const DivisorPoint& pt) const;
  /// Copy without the given point.
  Divisor without(const DivisorPoint& pt) const;
  /// Point 1 set to infinite multiplicity.
  Divisor stabilized() const;

  friend Divisor operator+(const Divisor& a, const Divisor& b);
  bool operator==(const Divisor&) const = default;

 private:
  Map points_;
};

/// Zeros of det(1 - x d) with multiplicity (factored over Q) plus infinity with
/// multiplicity N - deg det(1 - x d); requires m = 1.
Divisor divisor(const Colligation& g);

/// Conjugation invariants: the corner a, the products b d^k c (0 <= k <= k_max)
/// and the traces tr d^k (1 <= k <= k_max).
struct InvariantSignature {
  QMatrix corner;
  std::vector<QMatrix> moments;
  std::vector<Rational> traces;

  bool operator==(const InvariantSignature&) const = default;
};
InvariantSignature invariants(const Colligation& g, std::size_t k_max);

struct QuotientComparison {
  bool equal = false;
  /// Empty when equal, otherwise the first invariant found to differ.
  std::string witness;
};

/// Equality of the characteristic functions together with the divisors away
/// from the point 1; requires m = 1.
QuotientComparison quotient_compare(const Colligation& g, const Colligation& h);
bool quotient_equal(const Colligation& g, const Colligation& h);

}  // namespace colligo::coll
