#include "colligo/arith/poly.hpp"

#include <algorithm>

#include "colligo/errors.hpp"

namespace colligo::arith {

Poly Poly::monomial(const Rational& c, std::size_t deg) {
  std::vector<Rational> v(deg + 1, Rational(0));
  v[deg] = c;
  return Poly(std::move(v));
}

Rational Poly::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (arith::is_zero(coeffs_[i])) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

std::strong_ordering Poly::operator<=>(const Poly& o) const {
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const int c = cmp(coeffs_[k], o.coeffs_[k]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly out = *this;
  out *= Rational(1) / leading();
  return out;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Poly(std::move(v));
}

Poly Poly::reversed(std::size_t n) const {
  if (is_zero()) return *this;
  if (static_cast<int>(n) < degree()) throw PreconditionError("Poly::reversed: n below degree");
  std::vector<Rational> v(n + 1, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v[n - k] = coeffs_[k];
  return Poly(std::move(v));
}

Poly Poly::shifted(const Rational& a) const {
  // Horner in the shifted variable.
  Poly acc;
  const Poly xa(std::vector<Rational>{a, 1});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= xa;
    acc += Poly(*it);
  }
  return acc;
}

Poly Poly::pow(unsigned e) const {
  Poly out(1);
  for (unsigned k = 0; k < e; ++k) out *= *this;
  return out;
}

std::string Poly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (arith::is_zero(c)) continue;
    if (!s.empty()) s += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) s += "-";
    const Rational a = abs(c);
    if (k == 0 || a != 1) s += arith::to_string(a);
    if (k > 0) {
      if (k == 0 || a != 1) s += "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw PreconditionError("divmod: division by zero polynomial");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational inv_lead = Rational(1) / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational f = r[static_cast<std::size_t>(k)] * inv_lead;
    if (is_zero(f)) continue;
    q[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.coeff(static_cast<std::size_t>(j));
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw PreconditionError("exact_div: nonzero remainder");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

int root_multiplicity(const Poly& p, const Rational& root) {
  if (p.is_zero()) throw PreconditionError("root_multiplicity: zero polynomial");
  int m = 0;
  Poly q = p;
  const Poly lin = Poly::linear_root(root);
  while (true) {
    auto [quot, rem] = divmod(q, lin);
    if (!rem.is_zero()) break;
    q = std::move(quot);
    ++m;
  }
  return m;
}

}  // namespace colligo::arith
