#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "colligo/arith/rational.hpp"

namespace colligo::arith {

/// Dense univariate polynomial over Q; coefficients low to high, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c) {            // NOLINT(google-explicit-constructor)
    if (!arith::is_zero(c)) coeffs_.push_back(c);
  }
  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// The indeterminate.
  static Poly x() { return Poly(std::vector<Rational>{0, 1}); }
  static Poly monomial(const Rational& c, std::size_t deg);
  /// x - root
  static Poly linear_root(const Rational& root) { return Poly(std::vector<Rational>{-root, 1}); }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  Rational operator()(const Rational& at) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  bool operator==(const Poly&) const = default;
  /// Degree first, then coefficients from the top; a total order for use as map keys.
  std::strong_ordering operator<=>(const Poly& o) const;

  Poly monic() const;
  Poly derivative() const;
  /// x^n p(1/x), n >= degree.
  Poly reversed(std::size_t n) const;
  /// p(x + a).
  Poly shifted(const Rational& a) const;
  Poly pow(unsigned e) const;

  std::string to_string(const char* var = "x") const;

 private:
  void trim() {
    while (!coeffs_.empty() && arith::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Exact division; throws PreconditionError when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Multiplicity of `root` as a root of p (p nonzero).
int root_multiplicity(const Poly& p, const Rational& root);

}  // namespace colligo::arith
