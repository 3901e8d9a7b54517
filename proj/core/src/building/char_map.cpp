#include "colligo/building/char_map.hpp"

#include <algorithm>
#include <sstream>

#include "colligo/colligation/characteristic.hpp"
#include "colligo/errors.hpp"

namespace colligo::building {

using lattice::Exponent;

CharMapResult char_lattice_m(const Colligation& g, const QuasiLattice& r) {
  const std::size_t al = g.alpha();
  const std::size_t mn = g.m() * g.inner();
  if (r.ambient_dim() != 2 * g.m()) throw ShapeError("char_lattice: lattice must live in Q^{2m}");

  // (p, x) -> (c p + d x, x)
  QMatrix phi(2 * mn, al + mn);
  phi.set_block(0, 0, g.c());
  phi.set_block(0, al, g.d());
  phi.set_block(mn, al, QMatrix::identity(mn));
  // (p, x) -> (a p + b x, p)
  QMatrix psi(2 * al, al + mn);
  psi.set_block(0, 0, g.a());
  psi.set_block(0, al, g.b());
  psi.set_block(al, 0, QMatrix::identity(al));

  QuasiLattice out = lattice::image(psi, lattice::preimage(phi, lattice::tensor_id(r, g.inner())));
  CharMapResult res{out, out.is_full_lattice(), out.subspace_rank()};
  return res;
}

CharMapResult char_lattice(const Colligation& g, const QuasiLattice& r) {
  if (g.m() != 1) throw PreconditionError("char_lattice: defined for m = 1");
  return char_lattice_m(g, r);
}

QMatrix char_boundary(const Colligation& g, const QMatrix& s) {
  if (s.rows() != g.m() || s.cols() != g.m()) throw ShapeError("char_boundary: S must be m x m");
  if (g.inner() == 0) return g.a();
  const QMatrix st = arith::kronecker(s, QMatrix::identity(g.inner()));
  const QMatrix one = QMatrix::identity(st.rows());
  return g.a() + g.b() * st * arith::solve(one - g.d() * st, g.c());
}

TreeVertex vertex_map(const Colligation& g, const TreeVertex& v) {
  const auto res = char_lattice_m(g, v.lattice());
  if (!res.is_full_lattice) {
    throw NotALatticeError("vertex_map: degenerate image " + res.lattice.digest());
  }
  return lattice::vertex_class(res.lattice);
}

namespace {

// Representatives R, T of adjacent classes with T > R > pT (or the reverse).
std::pair<QuasiLattice, QuasiLattice> arrow_representatives(const TreeVertex& u, const TreeVertex& v) {
  const Rational p = u.lattice().prime();
  Rational scale = 1 / (p * p);
  for (int t = -2; t <= 2; ++t, scale *= p) {
    const QuasiLattice w = v.lattice().scaled(scale);
    if (lattice::arrow(u.lattice(), w)) return {u.lattice(), w};
    if (lattice::arrow(w, u.lattice())) return {w, u.lattice()};
  }
  throw PreconditionError("tree_map_check: vertices are not adjacent");
}

}  // namespace

TreeMapReport tree_map_check(const Colligation& g, const TreeVertex& center, long radius) {
  TreeMapReport rep;
  rep.source = lattice::ball_graph(center, radius);
  for (const auto& v : rep.source.vertices) {
    const auto res = char_lattice_m(g, v.lattice());
    if (res.is_full_lattice) {
      rep.images.emplace_back(lattice::vertex_class(res.lattice));
    } else {
      rep.images.emplace_back(std::nullopt);
      ++rep.degenerate_vertices;
    }
  }
  for (const auto& [i, j] : rep.source.edges) {
    if (!rep.images[i] || !rep.images[j]) {
      rep.edge_status.push_back(EdgeStatus::degenerate);
      continue;
    }
    const auto [r, t] = arrow_representatives(rep.source.vertices[i], rep.source.vertices[j]);
    const QuasiLattice cr = char_lattice_m(g, r).lattice;
    const QuasiLattice ct = char_lattice_m(g, t).lattice;
    bool ok = cr == ct || lattice::arrow(cr, ct);
    const long dist = lattice::distance(*rep.images[i], *rep.images[j]);
    if (g.alpha() == 1) ok = ok && dist <= 1;
    if (!ok) {
      rep.edge_status.push_back(EdgeStatus::violation);
      ++rep.violations;
    } else if (dist == 0) {
      rep.edge_status.push_back(EdgeStatus::contracted);
      ++rep.contracted;
    } else {
      rep.edge_status.push_back(EdgeStatus::preserved);
      ++rep.preserved;
    }
  }
  return rep;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

const char* edge_style(EdgeStatus s) {
  switch (s) {
    case EdgeStatus::preserved:
      return "solid";
    case EdgeStatus::contracted:
      return "dashed";
    case EdgeStatus::violation:
      return "bold, color=red";
    case EdgeStatus::degenerate:
      break;
  }
  return "dotted";
}

}  // namespace

std::string source_dot(const TreeMapReport& report) {
  std::ostringstream os;
  os << "graph source {\n";
  for (std::size_t i = 0; i < report.source.vertices.size(); ++i) {
    os << "  v" << i << " [label=" << quoted(report.source.vertices[i].lattice().digest()) << "];\n";
  }
  for (std::size_t e = 0; e < report.source.edges.size(); ++e) {
    const auto& [i, j] = report.source.edges[e];
    os << "  v" << i << " -- v" << j << " [style=" << quoted(edge_style(report.edge_status[e])) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string image_dot(const TreeMapReport& report) {
  std::vector<TreeVertex> distinct;
  for (const auto& img : report.images) {
    if (img && std::find(distinct.begin(), distinct.end(), *img) == distinct.end()) distinct.push_back(*img);
  }
  std::sort(distinct.begin(), distinct.end());
  auto index_of = [&](const TreeVertex& v) {
    return static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin());
  };
  std::ostringstream os;
  os << "graph image {\n";
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    os << "  w" << i << " [label=" << quoted(distinct[i].lattice().digest()) << "];\n";
  }
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < report.source.edges.size(); ++e) {
    const auto& [i, j] = report.source.edges[e];
    if (!report.images[i] || !report.images[j]) continue;
    auto a = index_of(*report.images[i]);
    auto b = index_of(*report.images[j]);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (std::find(seen.begin(), seen.end(), std::make_pair(a, b)) != seen.end()) continue;
    seen.emplace_back(a, b);
    os << "  w" << a << " -- w" << b << " [style=" << quoted(edge_style(report.edge_status[e])) << "];\n";
  }
  for (std::size_t i = 0; i < report.images.size(); ++i) {
    if (!report.images[i]) os << "  degenerate" << i << " [shape=point];\n";
  }
  os << "}\n";
  return os.str();
}

QuasiLattice boundary_approximant(const lattice::PAdicContext& ctx, const Rational& lambda, long j) {
  return QuasiLattice(ctx, QMatrix{{1, 0}, {lambda, 1}}, {Exponent(0), Exponent(j)});
}

bool boundary_limit_check(const Colligation& g, const lattice::PAdicContext& ctx, const Rational& lambda, long j_max,
                          long k) {
  if (j_max <= 2 * k) throw PreconditionError("boundary_limit_check: needs j_max > 2k");
  const auto chi = coll::char_fun(g);
  if (arith::is_zero(chi.denominator()(lambda))) {
    throw PoleError("boundary_limit_check: " + arith::to_string(lambda) + " is a pole");
  }
  if (arith::is_zero(coll::inner_determinant(g.d())(lambda))) {
    throw PreconditionError("boundary_limit_check: " + arith::to_string(lambda) + " lies on the exceptional divisor");
  }
  const auto graph = coll::graph_of(chi.eval(lambda));
  std::vector<QuasiLattice> seq;
  for (long j = 0; j <= j_max; ++j) seq.push_back(char_lattice(g, boundary_approximant(ctx, lambda, j)).lattice);
  return lattice::converges_to(seq, graph, k);
}

}  // namespace colligo::building
