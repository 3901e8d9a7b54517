#include <gtest/gtest.h>

#include "colligo/building/char_map.hpp"
#include "colligo/colligation/characteristic.hpp"
#include "colligo/colligation/realize.hpp"
#include "colligo/errors.hpp"
#include "colligo/random.hpp"
#include "oracles.hpp"

using namespace colligo;
using namespace colligo::building;
using arith::Poly;
using arith::QMatrix;
using arith::RatFun;
using arith::Rational;
using lattice::Exponent;
using lattice::PAdicContext;

namespace {

const PAdicContext kTwo(2);
const PAdicContext kThree(3);
const Exponent kLine = Exponent::whole_line();

Colligation Sq(QMatrix m, std::size_t alpha = 1) { return Colligation::square(std::move(m), alpha); }

QuasiLattice diagonal_subspace(const PAdicContext& ctx, std::size_t al) {
  return QuasiLattice(ctx, arith::vconcat(QMatrix::identity(al), QMatrix::identity(al)), std::vector<Exponent>(al, kLine));
}

// g1 on (corner 1, block 0) and g2 on (corner 2, block 1), both with inner size n.
Colligation interleave(const Colligation& g1, const Colligation& g2) {
  const std::size_t a1 = g1.alpha();
  const std::size_t a2 = g2.alpha();
  const std::size_t n = g1.inner();
  const std::size_t al = a1 + a2;
  QMatrix e(al + 2 * n, al + 2 * n);
  const std::vector<std::size_t> idx1 = [&] {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < a1; ++i) v.push_back(i);
    for (std::size_t i = 0; i < n; ++i) v.push_back(al + i);
    return v;
  }();
  const std::vector<std::size_t> idx2 = [&] {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < a2; ++i) v.push_back(a1 + i);
    for (std::size_t i = 0; i < n; ++i) v.push_back(al + n + i);
    return v;
  }();
  for (std::size_t i = 0; i < idx1.size(); ++i) {
    for (std::size_t j = 0; j < idx1.size(); ++j) e(idx1[i], idx1[j]) = g1.entries()(i, j);
  }
  for (std::size_t i = 0; i < idx2.size(); ++i) {
    for (std::size_t j = 0; j < idx2.size(); ++j) e(idx2[i], idx2[j]) = g2.entries()(i, j);
  }
  return Colligation(e, al, 2, n);
}

// Coordinates (u1 | v1) and (u2 | v2) merged into (u1, u2 | v1, v2).
QuasiLattice product_lattice(const QuasiLattice& r1, const QuasiLattice& r2) {
  const std::size_t k1 = r1.ambient_dim() / 2;
  const std::size_t k2 = r2.ambient_dim() / 2;
  const std::size_t n = 2 * (k1 + k2);
  QMatrix perm(n, n);
  for (std::size_t i = 0; i < k1; ++i) {
    perm(i, i) = 1;
    perm(k1 + k2 + i, k1 + i) = 1;
  }
  for (std::size_t i = 0; i < k2; ++i) {
    perm(k1 + i, 2 * k1 + i) = 1;
    perm(2 * k1 + k2 + i, 2 * k1 + k2 + i) = 1;
  }
  return lattice::image(perm, lattice::direct_sum(r1, r2));
}

}  // namespace

TEST(CharLattice, Examples) {
  const auto o2 = QuasiLattice::standard(kTwo, 2);
  const auto id = char_lattice(Sq(QMatrix::identity(2)), o2);
  EXPECT_EQ(id.lattice, diagonal_subspace(kTwo, 1));
  EXPECT_FALSE(id.is_full_lattice);
  EXPECT_EQ(id.subspace_rank, 1U);
  const auto swap = char_lattice(Sq(QMatrix{{0, 1}, {1, 0}}), o2);
  EXPECT_EQ(swap.lattice, o2);
  EXPECT_TRUE(swap.is_full_lattice);
}

TEST(CharLattice, ScalingEquivariance) {
  sample::Rng rng(3);
  for (int it = 0; it < 60; ++it) {
    const auto& ctx = it % 2 ? kTwo : kThree;
    const auto g = sample::colligation(rng, 1 + rng() % 2, 1 + rng() % 3);
    const auto r = sample::full_lattice(rng, ctx, 2);
    const long e = static_cast<long>(rng() % 7) - 3;
    Rational s = 1;
    for (long i = 0; i < std::abs(e); ++i) s *= ctx.prime();
    if (e < 0) s = 1 / s;
    s *= Rational(it % 3 == 0 ? 5 : 1);
    EXPECT_EQ(char_lattice(g, r.scaled(s)).lattice, char_lattice(g, r).lattice.scaled(s));
  }
}

TEST(CharLattice, ConjugationInvariance) {
  sample::Rng rng(5);
  for (int it = 0; it < 60; ++it) {
    const auto& ctx = it % 2 ? kTwo : kThree;
    const std::size_t n = 1 + rng() % 3;
    const auto g = sample::colligation(rng, 1 + rng() % 2, n);
    const QMatrix u = sample::unimodular(rng, n, ctx.prime());
    const auto r = sample::full_lattice(rng, ctx, 2);
    EXPECT_EQ(char_lattice(g, r).lattice, char_lattice(coll::conjugate(g, u), r).lattice);
  }
}

TEST(CharLattice, MultiplicativeUnderCirc) {
  sample::Rng rng(7);
  for (const long p : {2L, 3L, 5L}) {
    const PAdicContext ctx(p);
    for (int it = 0; it < 25; ++it) {
      const std::size_t al = 1 + rng() % 2;
      const auto g = sample::colligation(rng, al, 1 + rng() % 3);
      const auto h = sample::colligation(rng, al, 1 + rng() % 3);
      const auto r = sample::full_lattice(rng, ctx, 2);
      EXPECT_EQ(char_lattice(coll::circ(g, h), r).lattice,
                lattice::relation_compose(char_lattice(g, r).lattice, char_lattice(h, r).lattice));
    }
  }
}

TEST(CharLattice, ContainsEveryWitnessedPair) {
  sample::Rng rng(9);
  int hits = 0;
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 1 + rng() % 2;
    const auto g = sample::colligation(rng, 1, n);
    const auto r = sample::full_lattice(rng, kThree, 2, 1);
    const auto res = char_lattice(g, r).lattice;
    const QMatrix px = sample::matrix(rng, 1 + n, 1, 4);
    const QMatrix img = g.entries() * px;
    bool inside = true;
    for (std::size_t j = 0; j < n; ++j) {
      const arith::QVector yx{img(1 + j, 0), px(1 + j, 0)};
      inside = inside && oracle::member(yx, r.columns(), r.exponents(), kThree);
    }
    if (!inside) continue;
    ++hits;
    EXPECT_TRUE(lattice::member(arith::QVector{img(0, 0), px(0, 0)}, res));
  }
  EXPECT_GT(hits, 10);
}

TEST(CharLatticeBlocks, SingleBlockAgrees) {
  sample::Rng rng(11);
  for (int it = 0; it < 50; ++it) {
    const auto g = sample::colligation(rng, 1 + rng() % 2, rng() % 3);
    const auto r = sample::full_lattice(rng, kTwo, 2);
    EXPECT_EQ(char_lattice_m(g, r).lattice, char_lattice(g, r).lattice);
  }
}

TEST(CharLatticeBlocks, IdentityGivesDiagonal) {
  const std::size_t al = 2;
  const std::size_t m = 2;
  const std::size_t n = 2;
  const Colligation g(QMatrix::identity(al + m * n), al, m, n);
  EXPECT_EQ(char_lattice_m(g, QuasiLattice::standard(kThree, 2 * m)).lattice, diagonal_subspace(kThree, al));
}

TEST(CharLatticeBlocks, IndependentBlocksGiveProduct) {
  sample::Rng rng(13);
  for (int it = 0; it < 30; ++it) {
    const std::size_t n = 1 + rng() % 2;
    const auto g1 = sample::colligation(rng, 1, n);
    const auto g2 = sample::colligation(rng, 1 + rng() % 2, n);
    const auto r1 = sample::full_lattice(rng, kTwo, 2);
    const auto r2 = sample::full_lattice(rng, kTwo, 2);
    const auto lhs = char_lattice_m(interleave(g1, g2), product_lattice(r1, r2)).lattice;
    const auto rhs = product_lattice(char_lattice(g1, r1).lattice, char_lattice(g2, r2).lattice);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(CharLatticeBlocks, MultiplicativeForTwoBlocks) {
  sample::Rng rng(17);
  for (int it = 0; it < 20; ++it) {
    const std::size_t al = 1 + rng() % 2;
    const Colligation g(sample::matrix(rng, al + 2, al + 2, 2), al, 2, 1);
    const Colligation h(sample::matrix(rng, al + 4, al + 4, 2), al, 2, 2);
    const auto r = sample::full_lattice(rng, kThree, 4, 1, 2);
    EXPECT_EQ(char_lattice_m(coll::circ(g, h), r).lattice,
              lattice::relation_compose(char_lattice_m(g, r).lattice, char_lattice_m(h, r).lattice));
  }
}

TEST(CharBoundary, AgreesWithCharFun) {
  sample::Rng rng(19);
  for (int it = 0; it < 100; ++it) {
    const auto g = sample::colligation(rng, 1 + rng() % 2, rng() % 4);
    const Rational x = sample::rational(rng, 5, {1, 2, 3});
    const auto chi = coll::char_fun(g);
    if (arith::is_zero(chi.denominator()(x)) || arith::is_zero(coll::inner_determinant(g.d())(x))) continue;
    EXPECT_EQ(char_boundary(g, QMatrix{{x}}), chi.eval(x));
    EXPECT_EQ(char_boundary(g, QMatrix{{x}}), oracle::char_value(g, x));
  }
}

TEST(CharBoundary, ZeroGivesCorner) {
  sample::Rng rng(23);
  const Colligation g(sample::matrix(rng, 2 + 3 * 2, 2 + 3 * 2, 3), 2, 3, 2);
  EXPECT_EQ(char_boundary(g, QMatrix(3, 3)), g.a());
}

TEST(CharBoundary, SingularThrows) {
  EXPECT_THROW(char_boundary(Sq(QMatrix{{1, 1}, {1, 1}}), QMatrix{{1}}), SingularMatrixError);
}

TEST(CharBoundary, MultiplicativeForTwoBlocks) {
  sample::Rng rng(29);
  int checked = 0;
  for (int it = 0; it < 50; ++it) {
    const std::size_t al = 1 + rng() % 2;
    const std::size_t n1 = 1 + rng() % 2;
    const std::size_t n2 = 1 + rng() % 2;
    const Colligation g(sample::matrix(rng, al + 2 * n1, al + 2 * n1, 3), al, 2, n1);
    const Colligation h(sample::matrix(rng, al + 2 * n2, al + 2 * n2, 3), al, 2, n2);
    const QMatrix s = sample::matrix(rng, 2, 2, 3, {1, 2});
    try {
      EXPECT_EQ(char_boundary(coll::circ(g, h), s), char_boundary(g, s) * char_boundary(h, s));
      ++checked;
    } catch (const SingularMatrixError&) {
    }
  }
  EXPECT_GT(checked, 40);
}

TEST(VertexMap, Examples) {
  const auto base = lattice::vertex_class(QuasiLattice::standard(kTwo, 2));
  EXPECT_EQ(vertex_map(Sq(QMatrix{{0, 1}, {1, 0}}), base), base);
  EXPECT_THROW(vertex_map(Sq(QMatrix::identity(2)), base), NotALatticeError);
}

TEST(VertexMap, ConstantFunctionIsDegenerate) {
  const auto g = coll::realize(RatFun(Rational(3)));
  const auto base = lattice::vertex_class(QuasiLattice::standard(kThree, 2));
  for (const auto& v : lattice::ball(base, 1)) {
    const auto res = char_lattice(g, v.lattice());
    EXPECT_FALSE(res.is_full_lattice);
    EXPECT_EQ(res.lattice, QuasiLattice(kThree, QMatrix{{3}, {1}}, {kLine}));
  }
}

TEST(VertexMap, IndependentOfRepresentative) {
  sample::Rng rng(31);
  for (int it = 0; it < 30; ++it) {
    const auto g = sample::colligation(rng, 1, 1 + rng() % 2);
    const auto r = sample::full_lattice(rng, kThree, 2);
    const auto res = char_lattice(g, r);
    if (!res.is_full_lattice) continue;
    EXPECT_EQ(vertex_map(g, lattice::vertex_class(r)), vertex_map(g, lattice::vertex_class(r.scaled(Rational(1, 9)))));
  }
}

TEST(TreeMap, SwapOnRadiusTwo) {
  const auto base = lattice::vertex_class(QuasiLattice::standard(kTwo, 2));
  const auto rep = tree_map_check(Sq(QMatrix{{0, 1}, {1, 0}}), base, 2);
  EXPECT_EQ(rep.source.vertices.size(), 10U);
  EXPECT_EQ(rep.source.edges.size(), 9U);
  EXPECT_EQ(rep.violations, 0U);
  EXPECT_EQ(rep.preserved + rep.contracted, 9U);
  EXPECT_NE(source_dot(rep).find("v9"), std::string::npos);
}

TEST(TreeMap, DegenerateVerticesAreReported) {
  const auto base = lattice::vertex_class(QuasiLattice::standard(kTwo, 2));
  const auto rep = tree_map_check(Sq(QMatrix::identity(2)), base, 1);
  EXPECT_EQ(rep.degenerate_vertices, 4U);
  EXPECT_EQ(rep.violations, 0U);
}

TEST(TreeMap, RandomColligationsHaveNoViolations) {
  sample::Rng rng(37);
  for (const long p : {2L, 3L}) {
    const PAdicContext ctx(p);
    const auto base = lattice::vertex_class(QuasiLattice::standard(ctx, 2));
    for (int it = 0; it < 4; ++it) {
      const auto rep = tree_map_check(sample::colligation(rng, 1, 1 + rng() % 2), base, 2);
      EXPECT_EQ(rep.violations, 0U);
    }
  }
}

TEST(BoundaryLimit, Examples) {
  EXPECT_TRUE(boundary_limit_check(Sq(QMatrix{{0, 1}, {1, 0}}), kTwo, 1, 10, 3));
  EXPECT_THROW(boundary_limit_check(Sq(QMatrix{{1, 1}, {1, 1}}), kTwo, 1, 10, 3), PoleError);
  const auto g = coll::realize(RatFun(Poly(1), Poly(1) - Poly::x()));
  EXPECT_TRUE(boundary_limit_check(g, kThree, 2, 10, 3));
  EXPECT_THROW(boundary_limit_check(g, kThree, 2, 6, 3), PreconditionError);
}

TEST(BoundaryLimit, ApproximantsConvergeToLine) {
  for (const Rational lambda : {Rational(0), Rational(1), Rational(-3), Rational(5, 2)}) {
    std::vector<QuasiLattice> seq;
    for (long j = 0; j <= 12; ++j) seq.push_back(boundary_approximant(kThree, lambda, j));
    EXPECT_TRUE(lattice::converges_to(seq, lattice::SubspaceRep(2, QMatrix{{1}, {lambda}}), 4));
  }
}

TEST(BoundaryLimit, RandomRegularPoints) {
  sample::Rng rng(41);
  for (int it = 0; it < 10; ++it) {
    const auto g = sample::colligation(rng, 1, 1 + rng() % 3);
    const auto chi = coll::char_fun(g);
    for (int t = 0; t < 3; ++t) {
      Rational x;
      do {
        x = sample::rational(rng, 4);
      } while (arith::is_zero(coll::inner_determinant(g.d())(x)));
      EXPECT_TRUE(boundary_limit_check(g, kThree, x, 12, 4)) << "x = " << arith::to_string(x);
    }
  }
}

TEST(BoundaryLimit, WrongLimitIsRejected) {
  sample::Rng rng(43);
  for (int it = 0; it < 10; ++it) {
    const auto g = sample::colligation(rng, 1, 1 + rng() % 3);
    const auto chi = coll::char_fun(g);
    Rational x;
    do {
      x = sample::rational(rng, 4);
    } while (arith::is_zero(coll::inner_determinant(g.d())(x)));
    std::vector<QuasiLattice> seq;
    for (long j = 0; j <= 12; ++j) seq.push_back(char_lattice(g, boundary_approximant(kThree, x, j)).lattice);
    const QMatrix off = chi.eval(x) + QMatrix{{1}};
    EXPECT_FALSE(lattice::converges_to(seq, coll::graph_of(off), 4));
    EXPECT_TRUE(lattice::converges_to(seq, coll::graph_of(chi.eval(x)), 4));
  }
}

TEST(BoundaryLimit, CancelledDivisorPointIsSingular) {
  // chi = (6x + 1) / (3x - 1) is regular at 1, but det(1 - x d) = (1 - x)(1 - 3x) vanishes there.
  const auto g = Sq(QMatrix{{-1, 0, -3}, {0, 1, 1}, {3, 0, 3}});
  EXPECT_EQ(coll::char_fun(g).eval(1), QMatrix{{Rational(7, 2)}});
  EXPECT_THROW(boundary_limit_check(g, kThree, 1, 12, 4), PreconditionError);
  std::vector<QuasiLattice> seq;
  for (long j = 0; j <= 12; ++j) seq.push_back(char_lattice(g, boundary_approximant(kThree, 1, j)).lattice);
  EXPECT_EQ(lattice::vertex_class(seq[12]), lattice::vertex_class(seq[1]));
  EXPECT_FALSE(lattice::converges_to(seq, coll::graph_of(QMatrix{{Rational(7, 2)}}), 4));
}
