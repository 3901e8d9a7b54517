#include "colligo/arith/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "colligo/errors.hpp"

namespace colligo::arith {

namespace {

// ---- polynomials over Z (low to high) ----

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  ztrim(out);
  return out;
}

Integer symmetric_mod(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

ZPoly primitive_part(ZPoly f) {
  Integer g = 0;
  for (const auto& c : f) g = gcd(g, c);
  if (g == 0) return f;
  if (f.back() < 0) g = -g;
  for (auto& c : f) c /= g;
  return f;
}

// Integer primitive polynomial with positive leading coefficient, same roots as p.
ZPoly to_primitive(const Poly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, Integer(c.get_den()));
  ZPoly out;
  for (const auto& c : p.coeffs()) out.push_back(Integer(c * l));
  return primitive_part(std::move(out));
}

Poly to_monic_q(const ZPoly& f) {
  std::vector<Rational> v;
  for (const auto& c : f) v.emplace_back(c);
  return Poly(std::move(v)).monic();
}

// Exact division test over Z; returns the quotient when b | a.
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& quot) {
  if (b.empty()) return false;
  ZPoly r = a;
  if (r.size() < b.size()) return false;
  const std::size_t db = b.size() - 1;
  ZPoly q(r.size() - db, Integer(0));
  for (std::size_t k = r.size(); k-- > db;) {
    if (sgn(r[k]) == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), b.back().get_mpz_t())) return false;
    const Integer f = r[k] / b.back();
    q[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * b[j];
  }
  ztrim(r);
  if (!r.empty()) return false;
  ztrim(q);
  quot = std::move(q);
  return true;
}

// ---- polynomials over F_q (low to high, trimmed) ----

using u64 = std::uint64_t;
using FPoly = std::vector<u64>;

struct Field {
  u64 q;

  u64 add(u64 a, u64 b) const { return (a + b) % q; }
  u64 sub(u64 a, u64 b) const { return (a + q - b) % q; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % q); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, q - 2); }

  static void trim(FPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }

  FPoly from(const ZPoly& f) const {
    FPoly out;
    const Integer m(static_cast<unsigned long>(q));
    for (const auto& c : f) {
      Integer r = c % m;
      if (r < 0) r += m;
      out.push_back(r.get_ui());
    }
    trim(out);
    return out;
  }

  FPoly sub(FPoly a, const FPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t k = 0; k < b.size(); ++k) a[k] = sub(a[k], b[k]);
    trim(a);
    return a;
  }
  FPoly add(FPoly a, const FPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t k = 0; k < b.size(); ++k) a[k] = add(a[k], b[k]);
    trim(a);
    return a;
  }
  FPoly mul(const FPoly& a, const FPoly& b) const {
    if (a.empty() || b.empty()) return {};
    FPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add(out[i + j], mul(a[i], b[j]));
    }
    trim(out);
    return out;
  }
  FPoly scale(FPoly a, u64 s) const {
    for (auto& c : a) c = mul(c, s);
    trim(a);
    return a;
  }
  std::pair<FPoly, FPoly> divmod(const FPoly& a, const FPoly& b) const {
    FPoly r = a;
    if (r.size() < b.size()) return {{}, r};
    FPoly quo(r.size() - b.size() + 1, 0);
    const u64 il = inv(b.back());
    for (std::size_t k = r.size(); k-- > b.size() - 1;) {
      const u64 f = mul(r[k], il);
      if (f == 0) continue;
      quo[k - (b.size() - 1)] = f;
      for (std::size_t j = 0; j < b.size(); ++j) {
        r[k - (b.size() - 1) + j] = sub(r[k - (b.size() - 1) + j], mul(f, b[j]));
      }
    }
    trim(r);
    trim(quo);
    return {quo, r};
  }
  FPoly rem(const FPoly& a, const FPoly& b) const { return divmod(a, b).second; }
  FPoly monic(const FPoly& a) const { return a.empty() ? a : scale(a, inv(a.back())); }
  FPoly gcd(FPoly a, FPoly b) const {
    while (!b.empty()) {
      FPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  FPoly derivative(const FPoly& a) const {
    FPoly out;
    for (std::size_t k = 1; k < a.size(); ++k) out.push_back(mul(a[k], k % q));
    trim(out);
    return out;
  }
  FPoly powmod(FPoly base, Integer e, const FPoly& m) const {
    FPoly r{1};
    base = rem(base, m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = rem(mul(r, base), m);
      base = rem(mul(base, base), m);
      e >>= 1;
    }
    return r;
  }
  // Extended Euclid: s a + t b = 1 for coprime a, b.
  void bezout(const FPoly& a, const FPoly& b, FPoly& s, FPoly& t) const {
    FPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [qq, r2] = divmod(r0, r1);
      FPoly s2 = sub(s0, mul(qq, s1));
      FPoly t2 = sub(t0, mul(qq, t1));
      r0 = std::move(r1);
      r1 = std::move(r2);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    const u64 il = inv(r0.back());
    s = scale(s0, il);
    t = scale(t0, il);
  }
};

// Equal-degree splitting of a product of distinct irreducibles of degree d (q odd).
void equal_degree(const Field& F, const FPoly& g, std::size_t d, std::mt19937_64& rng, std::vector<FPoly>& out) {
  const std::size_t n = g.size() - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  Integer e = 1;
  for (std::size_t k = 0; k < d; ++k) e *= static_cast<unsigned long>(F.q);
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, F.q - 1);
  while (true) {
    FPoly a(n);
    for (auto& c : a) c = dist(rng);
    Field::trim(a);
    if (a.size() < 2) continue;
    FPoly b = F.sub(F.powmod(a, e, g), FPoly{1});
    FPoly h = F.gcd(g, b);
    if (h.size() > 1 && h.size() < g.size()) {
      equal_degree(F, h, d, rng, out);
      equal_degree(F, F.divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic square-free f over F_q.
std::vector<FPoly> factor_mod(const Field& F, FPoly f, std::mt19937_64& rng) {
  std::vector<FPoly> out;
  const FPoly x{0, 1};
  FPoly h = x;
  for (std::size_t d = 1; f.size() > 1 && 2 * d <= f.size() - 1; ++d) {
    h = F.powmod(h, Integer(static_cast<unsigned long>(F.q)), f);
    FPoly g = F.gcd(f, F.sub(h, x));
    if (g.size() > 1) {
      equal_degree(F, g, d, rng, out);
      f = F.divmod(f, g).first;
      h = F.rem(h, f);
    }
  }
  if (f.size() > 1) out.push_back(F.monic(f));
  return out;
}

// ---- Hensel lifting ----

ZPoly lift_to_z(const FPoly& f) {
  ZPoly out;
  for (auto c : f) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

ZPoly zmod(ZPoly f, const Integer& m) {
  for (auto& c : f) c = symmetric_mod(c, m);
  ztrim(f);
  return f;
}

// f = g h mod q with g monic and lc(h) = lc(f); lift to f = G H mod q^k.
void hensel_pair(const Field& F, const ZPoly& f, FPoly g, FPoly h, long k, ZPoly& G, ZPoly& H) {
  FPoly s, t;
  F.bezout(g, h, s, t);
  G = lift_to_z(g);
  H = lift_to_z(h);
  H.back() = f.back();
  const Integer qz(static_cast<unsigned long>(F.q));
  Integer qj = qz;
  for (long j = 1; j < k; ++j) {
    ZPoly e = f;
    const ZPoly gh = zmul(G, H);
    if (gh.size() > e.size()) e.resize(gh.size(), Integer(0));
    for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    for (auto& c : e) c /= qj;  // exact
    ztrim(e);
    const FPoly ebar = F.from(e);
    auto [quo, tau] = F.divmod(F.mul(t, ebar), g);
    FPoly sigma = F.add(F.mul(s, ebar), F.mul(quo, h));
    ZPoly tz = lift_to_z(tau);
    ZPoly sz = lift_to_z(sigma);
    for (std::size_t i = 0; i < tz.size(); ++i) {
      if (i >= G.size()) G.resize(i + 1, Integer(0));
      G[i] += qj * tz[i];
    }
    for (std::size_t i = 0; i < sz.size(); ++i) {
      if (i >= H.size()) H.resize(i + 1, Integer(0));
      H[i] += qj * sz[i];
    }
    qj *= qz;
    G = zmod(G, qj);
    H = zmod(H, qj);
    H.resize(h.size(), Integer(0));
    H.back() = f.back();
  }
}

// Irreducible factors over Z of a primitive square-free f with lc > 0.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const std::size_t n = f.size() - 1;
  if (n <= 1) return {f};

  // Pick a prime keeping the degree and square-freeness.
  Field F{3};
  for (u64 q = 3;; q += 2) {
    if (!is_prime(static_cast<long>(q))) continue;
    F = Field{q};
    const FPoly fb = F.from(f);
    if (fb.size() != f.size()) continue;
    if (F.gcd(fb, F.derivative(fb)).size() == 1) break;
  }
  std::mt19937_64 rng(0x5eed);
  const FPoly fbar = F.from(f);
  std::vector<FPoly> mods = factor_mod(F, F.monic(fbar), rng);
  if (mods.size() == 1) return {f};
  std::sort(mods.begin(), mods.end());

  // Bound on coefficients of lc(f) * (any factor).
  Integer maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, Integer(abs(c)));
  Integer bound = Integer(abs(f.back())) * maxc * static_cast<unsigned long>(n + 1);
  bound <<= n;
  const Integer qz(static_cast<unsigned long>(F.q));
  long k = 1;
  Integer mod = qz;
  while (mod <= 2 * bound) {
    mod *= qz;
    ++k;
  }

  // Lift one factor at a time.
  std::vector<ZPoly> lifted;
  ZPoly rest = f;
  for (std::size_t i = 0; i + 1 < mods.size(); ++i) {
    const FPoly restbar = F.from(rest);
    const FPoly cof = F.divmod(restbar, mods[i]).first;
    ZPoly G, H;
    hensel_pair(F, rest, mods[i], cof, k, G, H);
    lifted.push_back(std::move(G));
    rest = std::move(H);
  }
  {
    // rest = lc * monic factor mod q^k
    Integer il;
    mpz_invert(il.get_mpz_t(), Integer(rest.back()).get_mpz_t(), mod.get_mpz_t());
    for (auto& c : rest) c *= il;
    lifted.push_back(zmod(rest, mod));
  }

  // Recombination.
  std::vector<ZPoly> out;
  ZPoly cur = f;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<bool> sel(remaining.size(), false);
    std::fill(sel.begin(), sel.begin() + static_cast<long>(s), true);
    do {
      ZPoly cand{Integer(cur.back())};
      for (std::size_t i = 0; i < remaining.size(); ++i) {
        if (sel[i]) cand = zmod(zmul(cand, lifted[remaining[i]]), mod);
      }
      cand = primitive_part(std::move(cand));
      ZPoly quot;
      if (zdivides(cur, cand, quot)) {
        out.push_back(cand);
        cur = primitive_part(std::move(quot));
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
          if (!sel[i]) keep.push_back(remaining[i]);
        }
        remaining = std::move(keep);
        found = true;
        break;
      }
    } while (std::prev_permutation(sel.begin(), sel.end()));
    if (!found) ++s;
  }
  if (cur.size() > 1) out.push_back(cur);
  return out;
}

}  // namespace

std::vector<PolyFactor> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw PreconditionError("squarefree_decomposition: zero polynomial");
  std::vector<PolyFactor> out;
  if (p.degree() == 0) return out;
  const Poly dp = p.derivative();
  const Poly b = gcd(p, dp);
  Poly c = exact_div(p, b);
  Poly d = exact_div(dp, b) - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    const Poly a = gcd(c, d);
    if (a.degree() > 0) out.push_back({a.monic(), i});
    c = exact_div(c, a);
    d = exact_div(d, a) - c.derivative();
  }
  return out;
}

std::vector<PolyFactor> factor_over_q(const Poly& p) {
  std::vector<PolyFactor> out;
  for (const auto& sf : squarefree_decomposition(p)) {
    for (const auto& z : zassenhaus(to_primitive(sf.poly))) out.push_back({to_monic_q(z), sf.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.poly != b.poly) return a.poly < b.poly;
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

}  // namespace colligo::arith
