#include "suites.hpp"

#include "colligo/building/char_map.hpp"
#include "colligo/colligation/characteristic.hpp"
#include "colligo/colligation/conjugator.hpp"
#include "colligo/colligation/invariants.hpp"
#include "colligo/colligation/realize.hpp"
#include "colligo/errors.hpp"
#include "colligo/lattice/tree.hpp"
#include "colligo/random.hpp"

namespace colligo::cli {

using arith::QMatrix;
using arith::Rational;
using coll::Colligation;
using io::Json;
using io::to_json;
using lattice::QuasiLattice;

namespace {

using Rng = sample::Rng;

long prime_or(long p, long fallback) { return p > 0 ? p : fallback; }

SuiteResult circ_char(std::uint64_t seed, std::size_t count, long) {
  Rng rng(seed);
  SuiteResult r;
  for (std::size_t i = 0; i < count; ++i, ++r.instances) {
    const std::size_t al = 1 + rng() % 3;
    const auto g = sample::colligation(rng, al, 1 + rng() % 4, 3, {1, 2});
    const auto h = sample::colligation(rng, al, 1 + rng() % 4, 3, {1, 2});
    if (!(coll::char_fun(coll::circ(g, h)) == coll::char_fun(g) * coll::char_fun(h))) {
      r.counterexamples.push_back(Json{{"instance", i}, {"g", to_json(g)}, {"h", to_json(h)}});
    }
  }
  return r;
}

SuiteResult divisor_sum(std::uint64_t seed, std::size_t count, long) {
  Rng rng(seed);
  SuiteResult r;
  for (std::size_t i = 0; i < count; ++i, ++r.instances) {
    const std::size_t al = 1 + rng() % 3;
    const auto g = sample::colligation(rng, al, 1 + rng() % 4, 3, {1, 2});
    const auto h = sample::colligation(rng, al, 1 + rng() % 4, 3, {1, 2});
    if (!(coll::divisor(coll::circ(g, h)) == coll::divisor(g) + coll::divisor(h))) {
      r.counterexamples.push_back(Json{{"instance", i}, {"g", to_json(g)}, {"h", to_json(h)}});
    }
  }
  return r;
}

SuiteResult associativity(std::uint64_t seed, std::size_t count, long) {
  Rng rng(seed);
  SuiteResult r;
  for (std::size_t i = 0; i < count; ++i, ++r.instances) {
    const std::size_t al = 1 + rng() % 2;
    const std::size_t m = 1 + rng() % 2;
    auto make = [&] {
      const std::size_t n = rng() % 3;
      return Colligation(sample::matrix(rng, al + m * n, al + m * n, 3), al, m, n);
    };
    const auto f = make();
    const auto g = make();
    const auto h = make();
    if (!(coll::circ(coll::circ(f, g), h) == coll::circ(f, coll::circ(g, h)))) {
      r.counterexamples.push_back(Json{{"instance", i}, {"f", to_json(f)}, {"g", to_json(g)}, {"h", to_json(h)}});
    }
  }
  return r;
}

SuiteResult independence(std::uint64_t seed, std::size_t count, long p) {
  Rng rng(seed);
  SuiteResult r;
  for (std::size_t i = 0; i < count; ++i, ++r.instances) {
    const std::size_t n = 1 + rng() % 3;
    const auto g = sample::colligation(rng, 1 + rng() % 2, n);
    const auto h = coll::conjugate(g, sample::unimodular(rng, n, prime_or(p, 2)));
    if (!(coll::char_fun(g) == coll::char_fun(h)) || !(coll::invariants(g, n + 1) == coll::invariants(h, n + 1))) {
      r.counterexamples.push_back(Json{{"instance", i}, {"g", to_json(g)}, {"conjugated", to_json(h)}});
    }
  }
  return r;
}

SuiteResult commutative(std::uint64_t seed, std::size_t count, long) {
  Rng rng(seed);
  SuiteResult r;
  for (std::size_t i = 0; i < count; ++i, ++r.instances) {
    const auto g = sample::colligation(rng, 1, rng() % 4);
    const auto h = sample::colligation(rng, 1, rng() % 4);
    const auto cmp = coll::quotient_compare(coll::circ(g, h), coll::circ(h, g));
    if (!cmp.equal) {
      r.counterexamples.push_back(Json{{"instance", i}, {"g", to_json(g)}, {"h", to_json(h)}, {"witness", cmp.witness}});
    }
  }
  return r;
}

SuiteResult conjugator(std::uint64_t seed, std::size_t count, long) {
  Rng rng(seed);
  SuiteResult r;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Rational> taken;
    const auto g = sample::diagonal_colligation(rng, 1 + rng() % 3, taken);
    const auto h = sample::diagonal_colligation(rng, 1 + rng() % 3, taken);
    QMatrix u;
    try {
      u = coll::commutativity_conjugator(g, h);
    } catch (const GenericityError&) {
      ++r.skipped;
      continue;
    }
    ++r.instances;
    const QMatrix big = arith::direct_sum(QMatrix::identity(1), u);
    if (!(arith::inverse(big) * coll::circ(g, h).entries() * big == coll::circ(h, g).entries())) {
      r.counterexamples.push_back(Json{{"instance", i}, {"g", to_json(g)}, {"h", to_json(h)}, {"U", to_json(u)}});
    }
  }
  return r;
}

SuiteResult lin_frac(std::uint64_t seed, std::size_t count, long) {
  Rng rng(seed);
  SuiteResult r;
  const std::vector<Rational> points{Rational(2), Rational(-3), Rational(1, 5), Rational(7, 3), Rational(-1, 4)};
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t al = 1 + rng() % 2;
    const auto g = sample::colligation(rng, al, rng() % 3);
    QMatrix c;
    do {
      c = sample::matrix(rng, 2, 2, 3);
    } while (arith::is_zero(arith::det(c)));
    Colligation h;
    try {
      h = coll::mobius(g, c);
    } catch (const SingularMatrixError&) {
      ++r.skipped;
      continue;
    }
    ++r.instances;
    const auto chi_g = coll::char_fun(g);
    const auto chi_h = coll::char_fun(h);
    for (const auto& s : points) {
      const Rational den = c(1, 0) * s + c(1, 1);
      if (arith::is_zero(den)) continue;
      const Rational ms = (c(0, 0) * s + c(0, 1)) / den;
      if (arith::is_zero(ms) || arith::is_zero(chi_g.denominator()(1 / s)) || arith::is_zero(chi_h.denominator()(1 / ms))) continue;
      const QMatrix z = chi_g.eval(1 / s);
      const QMatrix one = QMatrix::identity(al);
      const QMatrix bottom = c(1, 0) * z + c(1, 1) * one;
      if (arith::is_zero(arith::det(bottom))) continue;
      if (!(chi_h.eval(1 / ms) == (c(0, 0) * z + c(0, 1) * one) * arith::inverse(bottom))) {
        r.counterexamples.push_back(Json{{"instance", i}, {"g", to_json(g)}, {"coeffs", to_json(c)}, {"s", to_json(s)}});
        break;
      }
    }
  }
  return r;
}

SuiteResult det_identity(std::uint64_t seed, std::size_t count, long) {
  Rng rng(seed);
  SuiteResult r;
  for (std::size_t i = 0; i < count; ++i, ++r.instances) {
    const auto g = sample::colligation(rng, 1 + rng() % 3, rng() % 4, 3, {1, 2});
    if (!coll::det_char_check(g)) r.counterexamples.push_back(Json{{"instance", i}, {"g", to_json(g)}});
  }
  return r;
}

SuiteResult realization(std::uint64_t seed, std::size_t count, long) {
  Rng rng(seed);
  SuiteResult r;
  for (std::size_t i = 0; i < count; ++i, ++r.instances) {
    const auto w = sample::scalar_function(rng, 4);
    try {
      if (!(coll::char_fun(coll::realize(w)).entry(0, 0) == w)) {
        r.counterexamples.push_back(Json{{"instance", i}, {"w", to_json(w)}});
      }
    } catch (const Error& e) {
      r.counterexamples.push_back(Json{{"instance", i}, {"w", to_json(w)}, {"error", e.what()}});
    }
  }
  return r;
}

SuiteResult lattice_product(std::uint64_t seed, std::size_t count, long p) {
  Rng rng(seed);
  SuiteResult r;
  const std::vector<long> primes = p > 0 ? std::vector<long>{p} : std::vector<long>{2, 3, 5};
  for (const long q : primes) {
    const lattice::PAdicContext ctx(q);
    for (std::size_t i = 0; i < count; ++i, ++r.instances) {
      const std::size_t al = 1 + rng() % 2;
      const auto g = sample::colligation(rng, al, 1 + rng() % 3);
      const auto h = sample::colligation(rng, al, 1 + rng() % 3);
      const auto rl = sample::full_lattice(rng, ctx, 2);
      const auto lhs = building::char_lattice(coll::circ(g, h), rl).lattice;
      const auto rhs = lattice::relation_compose(building::char_lattice(g, rl).lattice, building::char_lattice(h, rl).lattice);
      if (!(lhs == rhs)) {
        r.counterexamples.push_back(Json{{"instance", i}, {"p", q}, {"g", to_json(g)}, {"h", to_json(h)}, {"R", to_json(rl)}});
      }
    }
  }
  return r;
}

SuiteResult lattice_conjugation(std::uint64_t seed, std::size_t count, long p) {
  Rng rng(seed);
  SuiteResult r;
  const lattice::PAdicContext ctx(prime_or(p, 3));
  for (std::size_t i = 0; i < count; ++i, ++r.instances) {
    const std::size_t n = 1 + rng() % 3;
    const auto g = sample::colligation(rng, 1 + rng() % 2, n);
    const QMatrix u = sample::unimodular(rng, n, ctx.prime());
    const auto rl = sample::full_lattice(rng, ctx, 2);
    if (!(building::char_lattice(g, rl).lattice == building::char_lattice(coll::conjugate(g, u), rl).lattice)) {
      r.counterexamples.push_back(Json{{"instance", i}, {"g", to_json(g)}, {"u", to_json(u)}, {"R", to_json(rl)}});
    }
  }
  return r;
}

SuiteResult lattice_scaling(std::uint64_t seed, std::size_t count, long p) {
  Rng rng(seed);
  SuiteResult r;
  const lattice::PAdicContext ctx(prime_or(p, 3));
  for (std::size_t i = 0; i < count; ++i, ++r.instances) {
    const auto g = sample::colligation(rng, 1 + rng() % 2, 1 + rng() % 3);
    const auto rl = sample::full_lattice(rng, ctx, 2);
    const Rational s = arith::pow_p(ctx.prime(), static_cast<long>(rng() % 9) - 4) * sample::rational(rng, 4, {1, 5, 7});
    if (arith::is_zero(s)) {
      ++r.skipped;
      continue;
    }
    if (!(building::char_lattice(g, rl.scaled(s)).lattice == building::char_lattice(g, rl).lattice.scaled(s))) {
      r.counterexamples.push_back(Json{{"instance", i}, {"g", to_json(g)}, {"R", to_json(rl)}, {"scalar", to_json(s)}});
    }
  }
  return r;
}

SuiteResult arrows(std::uint64_t seed, std::size_t count, long p) {
  Rng rng(seed);
  SuiteResult r;
  const std::vector<long> primes = p > 0 ? std::vector<long>{p} : std::vector<long>{2, 3};
  for (const long q : primes) {
    const lattice::PAdicContext ctx(q);
    const auto base = lattice::vertex_class(QuasiLattice::standard(ctx, 2));
    for (std::size_t i = 0; i < count; ++i, ++r.instances) {
      const auto g = sample::colligation(rng, 1, 1 + rng() % 3);
      const auto rep = building::tree_map_check(g, base, 2);
      if (rep.violations > 0) {
        r.counterexamples.push_back(Json{{"instance", i}, {"p", q}, {"g", to_json(g)}, {"report", to_json(rep)}});
      }
    }
  }
  return r;
}

SuiteResult tree_shape(std::uint64_t, std::size_t, long p) {
  SuiteResult r;
  const std::vector<long> primes = p > 0 ? std::vector<long>{p} : std::vector<long>{2, 3, 5};
  for (const long q : primes) {
    const lattice::PAdicContext ctx(q);
    const auto base = lattice::vertex_class(QuasiLattice::standard(ctx, 2));
    long expected = 1;
    long shell = q + 1;
    for (long radius = 0; radius <= 3; ++radius, ++r.instances) {
      if (radius > 0) {
        expected += shell;
        shell *= q;
      }
      const auto b = lattice::ball(base, radius);
      bool ok = static_cast<long>(b.size()) == expected;
      for (const auto& v : b) ok = ok && lattice::neighbors(v).size() == static_cast<std::size_t>(q + 1);
      if (!ok) r.counterexamples.push_back(Json{{"p", q}, {"radius", radius}, {"ball_size", b.size()}, {"expected", expected}});
    }
  }
  return r;
}

SuiteResult continuity(std::uint64_t seed, std::size_t count, long p) {
  Rng rng(seed);
  SuiteResult r;
  const lattice::PAdicContext ctx(prime_or(p, 3));
  for (std::size_t i = 0; i < count; ++i) {
    const auto g = sample::colligation(rng, 1, 1 + rng() % 3);
    const auto chi = coll::char_fun(g);
    for (int t = 0; t < 3; ++t, ++r.instances) {
      Rational x;
      do {
        x = sample::rational(rng, 4);
      } while (arith::is_zero(coll::inner_determinant(g.d())(x)));
      if (!building::boundary_limit_check(g, ctx, x, 12, 4)) {
        r.counterexamples.push_back(Json{{"instance", i}, {"g", to_json(g)}, {"lambda", to_json(x)}});
      }
    }
  }
  return r;
}

SuiteResult boundary(std::uint64_t seed, std::size_t count, long) {
  Rng rng(seed);
  SuiteResult r;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t al = 1 + rng() % 2;
    const std::size_t n1 = 1 + rng() % 2;
    const std::size_t n2 = 1 + rng() % 2;
    const Colligation g(sample::matrix(rng, al + 2 * n1, al + 2 * n1, 3), al, 2, n1);
    const Colligation h(sample::matrix(rng, al + 2 * n2, al + 2 * n2, 3), al, 2, n2);
    const QMatrix s = sample::matrix(rng, 2, 2, 3, {1, 2});
    try {
      const QMatrix lhs = building::char_boundary(coll::circ(g, h), s);
      const QMatrix rhs = building::char_boundary(g, s) * building::char_boundary(h, s);
      ++r.instances;
      if (!(lhs == rhs)) {
        r.counterexamples.push_back(Json{{"instance", i}, {"g", to_json(g)}, {"h", to_json(h)}, {"S", to_json(s)}});
      }
    } catch (const SingularMatrixError&) {
      ++r.skipped;
    }
  }
  return r;
}

}  // namespace

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"th-circ-char", "characteristic function of a product is the product", 200, circ_char},
      {"th-prod-divisor", "divisor of a product is the sum of divisors", 200, divisor_sum},
      {"pr-circ-assoc", "the product is associative (m = 1, 2)", 100, associativity},
      {"pr-independence", "characteristic function and invariants are conjugation invariant", 100, independence},
      {"th-commutative", "alpha = 1 products commute in the quotient", 100, commutative},
      {"pr-conjugator", "explicit conjugator between g o h and h o g", 50, conjugator},
      {"pr-lin-frac", "Moebius action on characteristic functions", 50, lin_frac},
      {"pr-det", "determinant identity", 100, det_identity},
      {"pr-realize", "scalar realization round trip", 50, realization},
      {"th-product", "lattice characteristic map is multiplicative", 100, lattice_product},
      {"pr-lattice-b", "edges map to edges or vertices (radius-2 balls)", 10, arrows},
      {"pr-lattice-c", "lattice map is conjugation invariant", 100, lattice_conjugation},
      {"pr-lattice-d", "lattice map commutes with scaling", 100, lattice_scaling},
      {"tree-valence", "valence p + 1 and ball sizes", 1, tree_shape},
      {"pr-continuity", "boundary limits (k = 4, j_max = 12)", 20, continuity},
      {"th-boundary", "block boundary values are multiplicative (m = 2)", 50, boundary},
  };
  return all;
}

const Suite* find_suite(const std::string& name) {
  for (const auto& s : suites()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

}  // namespace colligo::cli
