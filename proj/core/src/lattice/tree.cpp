#include "colligo/lattice/tree.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "colligo/arith/smith.hpp"
#include "colligo/errors.hpp"

namespace colligo::lattice {

using arith::pow_p;
using arith::val_p;

TreeVertex vertex_class(const QuasiLattice& r) {
  if (!r.is_full_lattice()) throw NotALatticeError("vertex_class: not a full lattice: " + r.digest());
  Valuation low;
  for (const auto& x : r.finite_part().data()) {
    if (!arith::is_zero(x)) low = std::min(low, val_p(x, r.ctx()));
  }
  if (low.is_infinite() || low.value() == 0) return TreeVertex(r);
  return TreeVertex(r.scaled(pow_p(r.prime(), -low.value())));
}

bool arrow(const QuasiLattice& r, const QuasiLattice& t) {
  if (!r.is_full_lattice() || !t.is_full_lattice()) throw NotALatticeError("arrow: both arguments must be lattices");
  if (r.ambient_dim() != t.ambient_dim()) throw ShapeError("arrow: dimension mismatch");
  return t.contains(r) && r.contains(t.scaled(Rational(r.prime())));
}

std::vector<TreeVertex> neighbors(const TreeVertex& v) {
  const QuasiLattice& lat = v.lattice();
  if (lat.ambient_dim() != 2) throw ShapeError("neighbors: tree vertices live in dimension 2");
  const long p = lat.prime();
  const QVector b1 = lat.finite_part().col(0);
  const QVector b2 = lat.finite_part().col(1);
  std::vector<TreeVertex> out;
  auto add = [&](const QVector& x, const QVector& y) {
    QMatrix m(2, 2);
    m.set_col(0, x);
    m.set_col(1, y);
    out.push_back(vertex_class(QuasiLattice::span(lat.ctx(), m)));
  };
  QVector pb1 = b1;
  QVector pb2 = b2;
  for (auto& x : pb1) x *= p;
  for (auto& x : pb2) x *= p;
  for (long t = 0; t < p; ++t) {
    QVector x = b1;
    for (std::size_t i = 0; i < 2; ++i) x[i] += t * b2[i];
    add(x, pb2);
  }
  add(b2, pb1);
  std::sort(out.begin(), out.end());
  return out;
}

long distance(const TreeVertex& a, const TreeVertex& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw ShapeError("distance: dimension mismatch");
  const QMatrix rel = arith::solve(a.lattice().finite_part(), b.lattice().finite_part());
  const auto s = arith::smith_dvr(rel, arith::PAdicDvr(a.lattice().ctx()));
  return s.exponents.back() - s.exponents.front();
}

std::vector<TreeVertex> ball(const TreeVertex& center, long radius) {
  if (radius < 0) throw PreconditionError("ball: negative radius");
  std::set<TreeVertex> seen{center};
  std::vector<TreeVertex> frontier{center};
  for (long r = 0; r < radius; ++r) {
    std::vector<TreeVertex> next;
    for (const auto& v : frontier) {
      for (auto& w : neighbors(v)) {
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

Ball ball_graph(const TreeVertex& center, long radius) {
  Ball out;
  out.vertices = ball(center, radius);
  std::map<TreeVertex, std::size_t> index;
  for (std::size_t i = 0; i < out.vertices.size(); ++i) index.emplace(out.vertices[i], i);
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    for (const auto& w : neighbors(out.vertices[i])) {
      auto it = index.find(w);
      if (it != index.end() && i < it->second) out.edges.emplace_back(i, it->second);
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

bool converges_to(const QuasiLattice& m, const SubspaceRep& l, long k) {
  const std::size_t n = m.ambient_dim();
  if (l.ambient_dim() != n) throw ShapeError("converges_to: dimension mismatch");
  const QuasiLattice line = QuasiLattice::subspace(m.ctx(), l);
  const QuasiLattice standard = QuasiLattice::standard(m.ctx(), n);

  // Scalings p^t with p^t M inside L + p^k O^n: t >= lo.
  bool has_lo = false;
  long lo = 0;
  for (std::size_t c = 0; c < m.line_part().cols(); ++c) {
    if (!l.contains(m.line_part().col(c))) return false;
  }
  const QuasiLattice near = sum(line, standard);
  for (std::size_t j = 0; j < m.finite_part().cols(); ++j) {
    const auto lv = near.level(m.finite_part().col(j));
    if (lv->is_infinite()) continue;
    const long need = k - lv->value();
    lo = has_lo ? std::max(lo, need) : need;
    has_lo = true;
  }

  // Scalings with p^-k (L cap O^n) inside p^t M cap L: t <= hi.
  bool has_hi = false;
  long hi = 0;
  const QuasiLattice inside = intersect(m, line);
  const QuasiLattice unit_ball = intersect(standard, line);
  for (std::size_t j = 0; j < unit_ball.finite_part().cols(); ++j) {
    const auto lv = inside.level(unit_ball.finite_part().col(j));
    if (!lv) return false;
    if (lv->is_infinite()) continue;
    const long allow = lv->value() - k;
    hi = has_hi ? std::min(hi, allow) : allow;
    has_hi = true;
  }
  return !has_lo || !has_hi || lo <= hi;
}

bool converges_to(const std::vector<QuasiLattice>& seq, const SubspaceRep& l, long k) {
  if (seq.empty()) throw PreconditionError("converges_to: empty sequence");
  return converges_to(seq.back(), l, k);
}

}  // namespace colligo::lattice
