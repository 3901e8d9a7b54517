#include "colligo/arith/rational.hpp"

#include <cctype>

#include "colligo/errors.hpp"

namespace colligo::arith {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PAdicContext::PAdicContext(long p) : p_(p) {
  if (!is_prime(p)) {
    throw PreconditionError("PAdicContext: " + std::to_string(p) + " is not prime");
  }
}

long val_p(const Integer& x, long p) {
  Integer t = abs(x);
  long v = 0;
  Integer q;
  Integer r;
  const Integer pz(p);
  while (true) {
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
    if (sgn(r) != 0) break;
    t = q;
    ++v;
  }
  return v;
}

Valuation val_p(const Rational& x, const PAdicContext& ctx) {
  if (is_zero(x)) return Valuation::infinity();
  const long p = ctx.prime();
  return Valuation(val_p(x.get_num(), p) - val_p(x.get_den(), p));
}

Rational pow_p(long p, long e) {
  Integer pe;
  mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(pe);
  Rational r(Integer(1), pe);
  r.canonicalize();
  return r;
}

Integer residue(const Rational& u, const Integer& m) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), u.get_den().get_mpz_t(), m.get_mpz_t()) == 0) {
    if (m == 1) return Integer(0);
    throw PreconditionError("residue: denominator not invertible modulo " + m.get_str());
  }
  Integer r = (u.get_num() * inv) % m;
  if (sgn(r) < 0) r += m;
  return r;
}

Rational reduce_mod_pf(const Rational& x, long p, long f) {
  if (is_zero(x)) return Rational(0);
  const long v = val_p(x.get_num(), p) - val_p(x.get_den(), p);
  if (v >= f) return Rational(0);
  const Rational unit = x / pow_p(p, v);
  const Rational modulus = pow_p(p, f - v);  // integer since f > v
  const Integer r = residue(unit, modulus.get_num());
  return Rational(r) * pow_p(p, v);
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  const Integer n(std::string(num[0] == '+' ? num.substr(1) : num));
  const Integer d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace colligo::arith
