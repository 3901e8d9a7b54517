#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace colligo::arith {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Fixes the prime p that defines the localization O = Z_(p) of Q.
class PAdicContext {
 public:
  /// Throws PreconditionError unless p is a prime.
  explicit PAdicContext(long p);

  long prime() const noexcept { return p_; }

  bool operator==(const PAdicContext&) const = default;

 private:
  long p_;
};

/// An integer or +infinity (the valuation of zero).
class Valuation {
 public:
  constexpr Valuation() : infinite_(true), value_(0) {}
  constexpr explicit Valuation(long v) : infinite_(false), value_(v) {}

  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  /// Only meaningful when finite.
  constexpr long value() const noexcept { return value_; }

  constexpr bool operator==(const Valuation&) const = default;
  constexpr std::strong_ordering operator<=>(const Valuation& o) const {
    if (infinite_ || o.infinite_) {
      return infinite_ <=> o.infinite_;
    }
    return value_ <=> o.value_;
  }

  friend constexpr Valuation operator+(Valuation a, Valuation b) {
    if (a.infinite_ || b.infinite_) return Valuation();
    return Valuation(a.value_ + b.value_);
  }

 private:
  bool infinite_;
  long value_;
};

bool is_prime(long n);

/// Exponent of p in x; +infinity for x = 0.
Valuation val_p(const Rational& x, const PAdicContext& ctx);
long val_p(const Integer& x, long p);  // x != 0

/// p^e as an exact rational (e may be negative).
Rational pow_p(long p, long e);

/// Canonical representative of x modulo p^f O:
/// 0 when v(x) >= f, otherwise p^v * r with r in [0, p^(f-v)) and v = v(x).
Rational reduce_mod_pf(const Rational& x, long p, long f);

/// The integer in [0, m) congruent to the p-local unit-or-integral u (den coprime to m).
Integer residue(const Rational& u, const Integer& m);

/// "num/den", denominator omitted when 1.
std::string to_string(const Rational& x);
/// Accepts "n", "-n", "n/d"; throws ParseError otherwise or when d == 0.
Rational parse_rational(std::string_view text);

}  // namespace colligo::arith
