// Acceptance gate: one line per criterion, exit status 1 if any fails.
// Usage: colligo_acceptance [criterion numbers...]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "colligo/arith/smith.hpp"
#include "colligo/building/char_map.hpp"
#include "colligo/colligation/characteristic.hpp"
#include "colligo/colligation/conjugator.hpp"
#include "colligo/colligation/invariants.hpp"
#include "colligo/colligation/realize.hpp"
#include "colligo/errors.hpp"
#include "colligo/lattice/tree.hpp"
#include "colligo/random.hpp"
#include "oracles.hpp"

using namespace colligo;
using arith::QMatrix;
using arith::QVector;
using arith::Rational;
using coll::Colligation;
using lattice::Exponent;
using lattice::PAdicContext;
using lattice::QuasiLattice;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string str(const QMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + arith::to_string(m(i, j));
    s += "]";
  }
  return s + "]";
}

// Pairs with alpha in {1,2,3}, N in {1..4}, entries in {-3..3}/{1,2}.
std::vector<std::pair<Colligation, Colligation>> field_pairs() {
  sample::Rng rng(20240101);
  std::vector<std::pair<Colligation, Colligation>> out;
  for (int i = 0; i < 200; ++i) {
    const std::size_t al = 1 + rng() % 3;
    auto g = sample::colligation(rng, al, 1 + rng() % 4, 3, {1, 2});
    auto h = sample::colligation(rng, al, 1 + rng() % 4, 3, {1, 2});
    out.emplace_back(std::move(g), std::move(h));
  }
  return out;
}

Outcome field_multiplicativity() {
  Outcome o;
  const std::vector<Rational> pts{Rational(2), Rational(-1, 3), Rational(5, 7)};
  int k = 0;
  for (const auto& [g, h] : field_pairs()) {
    const auto s = coll::circ(g, h);
    if (!(coll::char_fun(s) == coll::char_fun(g) * coll::char_fun(h))) o.fail("rational function mismatch at pair " + std::to_string(k));
    for (const auto& x : pts) {
      try {
        if (!(oracle::char_value(s, x) == oracle::char_value(g, x) * oracle::char_value(h, x))) {
          o.fail("pointwise mismatch at pair " + std::to_string(k));
        }
      } catch (const SingularMatrixError&) {
      }
    }
    ++k;
  }
  if (o.pass) o.detail = "200 pairs, exact";
  return o;
}

Outcome divisor_additivity() {
  Outcome o;
  int k = 0;
  for (const auto& [g, h] : field_pairs()) {
    const auto s = coll::circ(g, h);
    if (!(coll::divisor(s) == coll::divisor(g) + coll::divisor(h))) o.fail("multiset mismatch at pair " + std::to_string(k));
    if (!(coll::inner_determinant(s.d()) == coll::inner_determinant(g.d()) * coll::inner_determinant(h.d()))) {
      o.fail("det(1 - x d) not multiplicative at pair " + std::to_string(k));
    }
    ++k;
  }
  if (o.pass) o.detail = "200 pairs, exact";
  return o;
}

Outcome noncommuting_pair() {
  Outcome o;
  const auto g = Colligation::square(QMatrix{{1, 0}, {1, 1}}, 1);
  const auto h = Colligation::square(QMatrix{{1, 1}, {0, 1}}, 1);
  const QMatrix shown_gh{{1, 0, 0}, {1, 1, 1}, {0, 0, 1}};
  const QMatrix shown_hg{{1, 1, 0}, {0, 1, 0}, {1, 0, 1}};
  const QMatrix gh = coll::circ(g, h).entries();
  const QMatrix hg = coll::circ(h, g).entries();
  if (!(gh == shown_gh)) o.fail("first product is " + str(gh) + ", displayed " + str(shown_gh));
  if (!(hg == shown_hg)) o.fail("second product is " + str(hg) + ", displayed " + str(shown_hg));
  if (!coll::quotient_equal(coll::circ(g, h), coll::circ(h, g))) o.fail("products differ in the quotient");
  if (o.pass) o.detail = "both products match; quotient equal";
  return o;
}

Outcome conjugator() {
  Outcome o;
  sample::Rng rng(777);
  int verified = 0;
  int attempts = 0;
  while (verified < 50 && attempts < 500) {
    ++attempts;
    std::vector<Rational> taken;
    const auto g = sample::diagonal_colligation(rng, 1 + rng() % 3, taken);
    const auto h = sample::diagonal_colligation(rng, 1 + rng() % 3, taken);
    QMatrix u;
    try {
      u = coll::commutativity_conjugator(g, h);
    } catch (const GenericityError&) {
      continue;
    }
    const QMatrix big = arith::direct_sum(QMatrix::identity(1), u);
    if (!(arith::inverse(big) * coll::circ(g, h).entries() * big == coll::circ(h, g).entries())) {
      o.fail("identity fails for N1 = " + std::to_string(g.inner()) + ", N2 = " + std::to_string(h.inner()));
    }
    ++verified;
  }
  if (verified < 50) o.fail("only " + std::to_string(verified) + " generic instances found");
  if (o.pass) o.detail = "50 generic instances (" + std::to_string(attempts) + " drawn)";
  return o;
}

Outcome lattice_multiplicativity() {
  Outcome o;
  sample::Rng rng(4242);
  for (const long p : {2L, 3L, 5L}) {
    const PAdicContext ctx(p);
    for (int i = 0; i < 100; ++i) {
      const std::size_t al = 1 + rng() % 2;
      const auto g = sample::colligation(rng, al, 1 + rng() % 3);
      const auto h = sample::colligation(rng, al, 1 + rng() % 3);
      const auto r = sample::full_lattice(rng, ctx, 2);
      const auto lhs = building::char_lattice(coll::circ(g, h), r).lattice;
      const auto rhs = lattice::relation_compose(building::char_lattice(g, r).lattice, building::char_lattice(h, r).lattice);
      if (!(lhs == rhs)) o.fail("p = " + std::to_string(p) + ", instance " + std::to_string(i) + ": " + lhs.digest() + " vs " + rhs.digest());
    }
  }
  if (o.pass) o.detail = "300 instances, canonical forms equal";
  return o;
}

bool in_gl_o(const QMatrix& u, const PAdicContext& ctx) {
  for (std::size_t i = 0; i < u.rows(); ++i) {
    for (std::size_t j = 0; j < u.cols(); ++j) {
      if (!arith::is_zero(u(i, j)) && arith::val_p(u(i, j), ctx) < arith::Valuation(0)) return false;
    }
  }
  const Rational d = arith::det(u);
  return !arith::is_zero(d) && arith::val_p(d, ctx) == arith::Valuation(0);
}

Outcome conjugation_and_scaling() {
  Outcome o;
  sample::Rng rng(9090);
  for (int i = 0; i < 100; ++i) {
    const PAdicContext ctx(i % 2 ? 2 : 3);
    const std::size_t n = 1 + rng() % 3;
    const auto g = sample::colligation(rng, 1 + rng() % 2, n);
    // Denominators prime to p keep entries in the localization.
    QMatrix u = sample::unimodular(rng, n, ctx.prime());
    const Rational unit(ctx.prime() == 2 ? 3 : 5);
    u(0, 0) = u(0, 0) / unit;
    if (!in_gl_o(u, ctx)) {
      u = sample::unimodular(rng, n, ctx.prime());
      if (!in_gl_o(u, ctx)) o.fail("generated u outside GL(N, O)");
    }
    const auto r = sample::full_lattice(rng, ctx, 2);
    if (!(building::char_lattice(g, r).lattice == building::char_lattice(coll::conjugate(g, u), r).lattice)) {
      o.fail("conjugation changes the image at instance " + std::to_string(i));
    }
  }
  for (int i = 0; i < 100; ++i) {
    const PAdicContext ctx(i % 2 ? 2 : 3);
    const auto g = sample::colligation(rng, 1 + rng() % 2, 1 + rng() % 3);
    const auto r = sample::full_lattice(rng, ctx, 2);
    const Rational s = arith::pow_p(ctx.prime(), static_cast<long>(i % 9) - 4) * Rational(i % 3 == 0 ? -7 : 1);
    if (!(building::char_lattice(g, r.scaled(s)).lattice == building::char_lattice(g, r).lattice.scaled(s))) {
      o.fail("scaling by " + arith::to_string(s) + " not equivariant at instance " + std::to_string(i));
    }
  }
  if (o.pass) o.detail = "100 conjugations, 100 scalings";
  return o;
}

Outcome edge_preservation() {
  Outcome o;
  sample::Rng rng(31337);
  std::size_t edges = 0;
  std::size_t contracted = 0;
  std::size_t degenerate = 0;
  for (const long p : {2L, 3L}) {
    const PAdicContext ctx(p);
    const auto base = lattice::vertex_class(QuasiLattice::standard(ctx, 2));
    for (int i = 0; i < 10; ++i) {
      const auto g = sample::colligation(rng, 1, 1 + rng() % 3);
      const auto rep = building::tree_map_check(g, base, 2);
      edges += rep.source.edges.size();
      contracted += rep.contracted;
      degenerate += rep.degenerate_vertices;
      if (rep.violations > 0) o.fail(std::to_string(rep.violations) + " violations for p = " + std::to_string(p));
    }
  }
  if (o.pass) {
    o.detail = std::to_string(edges) + " edges, " + std::to_string(contracted) + " contracted, " +
               std::to_string(degenerate) + " degenerate vertices";
  }
  return o;
}

Outcome valence_and_balls() {
  Outcome o;
  for (const long p : {2L, 3L, 5L}) {
    const PAdicContext ctx(p);
    const auto base = lattice::vertex_class(QuasiLattice::standard(ctx, 2));
    std::set<lattice::TreeVertex> seen{base};
    std::vector<lattice::TreeVertex> frontier{base};
    long power = 1;
    for (long r = 0; r <= 3; ++r) {
      if (r > 0) {
        std::vector<lattice::TreeVertex> next;
        for (const auto& v : frontier) {
          const auto nb = lattice::neighbors(v);
          if (nb.size() != static_cast<std::size_t>(p + 1)) o.fail("valence " + std::to_string(nb.size()) + " for p = " + std::to_string(p));
          for (const auto& w : nb) {
            if (seen.insert(w).second) next.push_back(w);
          }
        }
        frontier = std::move(next);
        power *= p;
      }
      const long expected = 1 + (p + 1) * (power - 1) / (p - 1);
      const auto b = lattice::ball(base, r);
      if (static_cast<long>(b.size()) != expected || static_cast<long>(seen.size()) != expected) {
        o.fail("p = " + std::to_string(p) + ", r = " + std::to_string(r) + ": ball " + std::to_string(b.size()) + ", BFS " +
               std::to_string(seen.size()) + ", expected " + std::to_string(expected));
      }
    }
  }
  if (o.pass) o.detail = "p in {2,3,5}, r <= 3";
  return o;
}

Outcome boundary_limits() {
  Outcome o;
  sample::Rng rng(5150);
  int checks = 0;
  for (const long p : {2L, 3L}) {
    const PAdicContext ctx(p);
    for (int i = 0; i < 20; ++i) {
      const auto g = sample::colligation(rng, 1, 1 + rng() % 3);
      const auto pg = coll::inner_determinant(g.d());
      for (int t = 0; t < 3; ++t) {
        Rational x;
        do {
          x = sample::rational(rng, 4, {1, 2});
        } while (arith::is_zero(pg(x)));
        ++checks;
        if (!building::boundary_limit_check(g, ctx, x, 12, 4)) {
          o.fail("no convergence for p = " + std::to_string(p) + ", colligation " + std::to_string(i) + ", point " + arith::to_string(x));
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checks) + " points (p = 2, 3), k = 4, j_max = 12";
  return o;
}

Outcome boundary_values() {
  Outcome o;
  sample::Rng rng(6060);
  int points = 0;
  while (points < 100) {
    const auto g = sample::colligation(rng, 1 + rng() % 2, rng() % 4);
    const Rational x = sample::rational(rng, 5, {1, 2, 3});
    if (arith::is_zero(coll::inner_determinant(g.d())(x))) continue;
    ++points;
    const QMatrix v = building::char_boundary(g, QMatrix{{x}});
    if (!(v == coll::char_fun(g).eval(x)) || !(v == oracle::char_value(g, x))) o.fail("mismatch at " + arith::to_string(x));
  }
  int triples = 0;
  int drawn = 0;
  while (triples < 50 && drawn < 500) {
    ++drawn;
    const std::size_t al = 1 + rng() % 2;
    const std::size_t n1 = 1 + rng() % 2;
    const std::size_t n2 = 1 + rng() % 2;
    const Colligation g(sample::matrix(rng, al + 2 * n1, al + 2 * n1, 3), al, 2, n1);
    const Colligation h(sample::matrix(rng, al + 2 * n2, al + 2 * n2, 3), al, 2, n2);
    const QMatrix s = sample::matrix(rng, 2, 2, 3, {1, 2});
    QMatrix lhs;
    QMatrix rhs;
    try {
      lhs = building::char_boundary(coll::circ(g, h), s);
      rhs = building::char_boundary(g, s) * building::char_boundary(h, s);
    } catch (const SingularMatrixError&) {
      continue;
    }
    ++triples;
    if (!(lhs == rhs)) o.fail("m = 2 product mismatch at triple " + std::to_string(triples));
  }
  if (triples < 50) o.fail("only " + std::to_string(triples) + " nonsingular triples");
  if (o.pass) o.detail = "100 points, 50 triples";
  return o;
}

Outcome realization() {
  Outcome o;
  sample::Rng rng(8080);
  std::size_t max_inner = 0;
  for (int i = 0; i < 50; ++i) {
    const auto w = sample::scalar_function(rng, 4);
    try {
      const auto g = coll::realize(w);
      max_inner = std::max(max_inner, g.inner());
      if (!(coll::char_fun(g).entry(0, 0) == w)) o.fail("round trip differs at function " + std::to_string(i));
    } catch (const Error& e) {
      o.fail(std::string("function ") + std::to_string(i) + ": " + e.what());
    }
  }
  if (o.pass) o.detail = "50 functions, largest N = " + std::to_string(max_inner);
  return o;
}

Outcome determinant_identity() {
  Outcome o;
  sample::Rng rng(1212);
  for (int i = 0; i < 100; ++i) {
    const auto g = sample::colligation(rng, 1 + rng() % 3, rng() % 5, 3, {1, 2});
    if (!coll::det_char_check(g)) o.fail("identity fails at instance " + std::to_string(i));
  }
  if (o.pass) o.detail = "100 colligations";
  return o;
}

Outcome oracle_equivalences() {
  Outcome o;
  std::size_t pairs = 0;
  for (const long p : {2L, 3L}) {
    const PAdicContext ctx(p);
    const auto verts = lattice::ball(lattice::vertex_class(QuasiLattice::standard(ctx, 2)), 3);
    const auto bfs = oracle::bfs_distances(verts);
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (std::size_t j = 0; j < verts.size(); ++j, ++pairs) {
        if (lattice::distance(verts[i], verts[j]) != bfs.at({i, j})) o.fail("distance mismatch for p = " + std::to_string(p));
      }
    }
  }
  sample::Rng rng(2323);
  int members = 0;
  while (members < 500) {
    const PAdicContext ctx(members % 3 == 0 ? 2 : members % 3 == 1 ? 3 : 5);
    const std::size_t n = 2 + rng() % 2;
    const std::size_t lines = rng() % 2;
    const std::size_t fin = n - lines - rng() % 2;
    const QMatrix cols = sample::matrix(rng, n, lines + fin, 3);
    if (arith::rank(cols) != cols.cols()) continue;
    std::vector<Exponent> e(lines, Exponent::whole_line());
    for (std::size_t j = 0; j < fin; ++j) e.emplace_back(static_cast<long>(rng() % 5) - 2);
    const QuasiLattice m(ctx, cols, e);
    QVector v(n);
    for (std::size_t j = 0; j < cols.cols(); ++j) {
      const Rational c = sample::rational(rng, 3, {1, ctx.prime()}) * arith::pow_p(ctx.prime(), e[j].is_whole_line() ? 0 : e[j].value());
      for (std::size_t i = 0; i < n; ++i) v[i] += c * cols(i, j);
    }
    if (members % 4 == 0) v[0] += sample::rational(rng, 2, {1, ctx.prime()});
    ++members;
    if (m.contains(v) != oracle::member(v, cols, e, ctx)) o.fail("membership disagrees with the valuation oracle");
  }
  for (int i = 0; i < 500; ++i) {
    const PAdicContext ctx(i % 2 ? 2 : 3);
    const QMatrix a = sample::matrix(rng, 1 + rng() % 4, 1 + rng() % 4, 12, {1, 2, 3, 4});
    const auto s = arith::smith_dvr(a, arith::PAdicDvr{ctx});
    if (!(s.U * s.D * s.V == a)) o.fail("Smith factors do not multiply back at matrix " + std::to_string(i));
  }
  if (o.pass) o.detail = std::to_string(pairs) + " vertex pairs, 500 memberships, 500 Smith forms";
  return o;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "field multiplicativity of characteristic functions", 30, field_multiplicativity},
      {2, "divisor additivity", 10, divisor_additivity},
      {3, "non-commuting pair: displayed products and quotient equality", 5, noncommuting_pair},
      {4, "explicit commutativity conjugator", 10, conjugator},
      {5, "lattice multiplicativity (p = 2, 3, 5)", 60, lattice_multiplicativity},
      {6, "lattice map: conjugation invariance and scaling equivariance", 30, conjugation_and_scaling},
      {7, "edges of radius-2 balls map to edges or vertices", 60, edge_preservation},
      {8, "valence p + 1 and ball sizes", 10, valence_and_balls},
      {9, "boundary limits", 30, boundary_limits},
      {10, "boundary values: consistency and block multiplicativity", 30, boundary_values},
      {11, "scalar realization round trip", 20, realization},
      {12, "determinant identity", 10, determinant_identity},
      {13, "oracle equivalences: distance, membership, Smith", 60, oracle_equivalences},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  bool all_ok = true;
  for (const auto& c : criteria()) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    all_ok = all_ok && o.pass;
    std::printf("criterion %2d %s  %s  (%.2f s / %.0f s)  %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, secs, c.limit_seconds,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}
