#include "colligo/io/json.hpp"

#include "colligo/errors.hpp"

namespace colligo::io {

using arith::Poly;
using arith::QMatrix;
using arith::Rational;
using lattice::Exponent;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError("at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string child(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string child(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

long integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long>();
}

std::size_t count(const Json& j, const std::string& where) {
  const long v = integer(j, where);
  if (v < 0) fail(where, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Rational& x) { return arith::to_string(x); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(where, "expected a rational string");
  try {
    return arith::parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QMatrix matrix_from_json(const Json& j, const std::string& where) {
  array(j, where);
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : array(j[0], child(where, 0)).size();
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = array(j[i], child(where, i));
    if (row.size() != cols) fail(child(where, i), "ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(row[c], child(child(where, i), c));
  }
  return m;
}

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Poly poly_from_json(const Json& j, const std::string& where) {
  array(j, where);
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < j.size(); ++i) coeffs.push_back(rational_from_json(j[i], child(where, i)));
  return Poly(std::move(coeffs));
}

Json to_json(const arith::RatFun& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

arith::RatFun ratfun_from_json(const Json& j, const std::string& where) {
  const Poly num = poly_from_json(field(j, "num", where), child(where, "num"));
  const Poly den = poly_from_json(field(j, "den", where), child(where, "den"));
  if (den.is_zero()) fail(child(where, "den"), "zero denominator");
  return arith::RatFun(num, den);
}

Json to_json(const arith::RatFunMat& f) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < f.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < f.cols(); ++c) row.push_back(to_json(f.numerator()(i, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"numerator", std::move(rows)}, {"denominator", to_json(f.denominator())}};
}

arith::RatFunMat ratfun_mat_from_json(const Json& j, const std::string& where) {
  const std::string nw = child(where, "numerator");
  const auto& rows = array(field(j, "numerator", where), nw);
  const std::size_t cols = rows.empty() ? 0 : array(rows[0], child(nw, 0)).size();
  arith::PolyMatrix num(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = array(rows[i], child(nw, i));
    if (row.size() != cols) fail(child(nw, i), "ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c) num(i, c) = poly_from_json(row[c], child(child(nw, i), c));
  }
  const Poly den = poly_from_json(field(j, "denominator", where), child(where, "denominator"));
  if (den.is_zero()) fail(child(where, "denominator"), "zero denominator");
  return arith::RatFunMat(std::move(num), den);
}

Json to_json(const lattice::QuasiLattice& m) {
  const QMatrix cols = m.columns();
  Json columns = Json::array();
  for (std::size_t c = 0; c < cols.cols(); ++c) {
    Json col = Json::array();
    for (std::size_t i = 0; i < cols.rows(); ++i) col.push_back(to_json(cols(i, c)));
    columns.push_back(std::move(col));
  }
  Json exps = Json::array();
  for (const auto& e : m.exponents()) {
    if (e.is_whole_line()) {
      exps.push_back("-inf");
    } else {
      exps.push_back(e.value());
    }
  }
  return Json{{"p", m.prime()}, {"dim", m.ambient_dim()}, {"columns", std::move(columns)}, {"exponents", std::move(exps)}};
}

lattice::QuasiLattice lattice_from_json(const Json& j, const std::string& where) {
  const long p = integer(field(j, "p", where), child(where, "p"));
  if (!arith::is_prime(p)) fail(child(where, "p"), "not a prime");
  const std::size_t n = count(field(j, "dim", where), child(where, "dim"));
  const std::string cw = child(where, "columns");
  const auto& cols = array(field(j, "columns", where), cw);
  const std::string ew = child(where, "exponents");
  const auto& exps = array(field(j, "exponents", where), ew);
  if (exps.size() != cols.size()) fail(ew, "one exponent per column expected");
  QMatrix m(n, cols.size());
  std::vector<Exponent> e;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto& col = array(cols[c], child(cw, c));
    if (col.size() != n) fail(child(cw, c), "column length differs from dim");
    for (std::size_t i = 0; i < n; ++i) m(i, c) = rational_from_json(col[i], child(child(cw, c), i));
    if (exps[c].is_string() && exps[c].get<std::string>() == "-inf") {
      e.push_back(Exponent::whole_line());
    } else {
      e.emplace_back(integer(exps[c], child(ew, c)));
    }
  }
  return lattice::QuasiLattice(arith::PAdicContext(p), m, e);
}

Json to_json(const lattice::TreeVertex& v) { return to_json(v.lattice()); }

Json to_json(const coll::Colligation& g) {
  return Json{{"alpha", g.alpha()}, {"m", g.m()}, {"N", g.inner()}, {"entries", to_json(g.entries())}};
}

coll::Colligation colligation_from_json(const Json& j, const std::string& where) {
  const std::size_t alpha = count(field(j, "alpha", where), child(where, "alpha"));
  const std::size_t m = j.contains("m") ? count(j["m"], child(where, "m")) : 1;
  const std::size_t n = count(field(j, "N", where), child(where, "N"));
  QMatrix e = matrix_from_json(field(j, "entries", where), child(where, "entries"));
  try {
    return coll::Colligation(std::move(e), alpha, m, n);
  } catch (const ShapeError& err) {
    fail(where, err.what());
  }
}

namespace {

Json point_to_json(const coll::DivisorPoint& pt) {
  switch (pt.kind) {
    case coll::DivisorPoint::Kind::rational:
      return to_json(pt.value);
    case coll::DivisorPoint::Kind::algebraic:
      return Json{{"min_poly", to_json(pt.min_poly)}};
    case coll::DivisorPoint::Kind::infinity:
      break;
  }
  return "inf";
}

}  // namespace

Json to_json(const coll::Divisor& d) {
  Json out = Json::array();
  for (const auto& [pt, mult] : d.points()) {
    Json m = mult.infinite ? Json("inf") : Json(mult.value);
    out.push_back(Json{{"point", point_to_json(pt)}, {"mult", std::move(m)}});
  }
  return out;
}

coll::Divisor divisor_from_json(const Json& j, const std::string& where) {
  array(j, where);
  coll::Divisor::Map points;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = child(where, i);
    const auto& pj = field(j[i], "point", w);
    coll::DivisorPoint pt;
    if (pj.is_string() && pj.get<std::string>() == "inf") {
      pt = coll::DivisorPoint::infinity();
    } else if (pj.is_object()) {
      pt = coll::DivisorPoint::algebraic(poly_from_json(field(pj, "min_poly", child(w, "point")), child(child(w, "point"), "min_poly")));
    } else {
      pt = coll::DivisorPoint::rational_point(rational_from_json(pj, child(w, "point")));
    }
    const auto& mj = field(j[i], "mult", w);
    coll::Multiplicity mult;
    if (mj.is_string() && mj.get<std::string>() == "inf") {
      mult = coll::Multiplicity::inf();
    } else {
      mult.value = integer(mj, child(w, "mult"));
      if (mult.value < 0) fail(child(w, "mult"), "negative multiplicity");
    }
    points[pt] = mult;
  }
  return coll::Divisor(std::move(points));
}

Json to_json(const coll::InvariantSignature& s) {
  Json moments = Json::array();
  for (const auto& m : s.moments) moments.push_back(to_json(m));
  Json traces = Json::array();
  for (const auto& t : s.traces) traces.push_back(to_json(t));
  return Json{{"corner", to_json(s.corner)}, {"moments", std::move(moments)}, {"traces", std::move(traces)}};
}

coll::InvariantSignature signature_from_json(const Json& j, const std::string& where) {
  coll::InvariantSignature s;
  s.corner = matrix_from_json(field(j, "corner", where), child(where, "corner"));
  const std::string mw = child(where, "moments");
  const auto& moments = array(field(j, "moments", where), mw);
  for (std::size_t i = 0; i < moments.size(); ++i) s.moments.push_back(matrix_from_json(moments[i], child(mw, i)));
  const std::string tw = child(where, "traces");
  const auto& traces = array(field(j, "traces", where), tw);
  for (std::size_t i = 0; i < traces.size(); ++i) s.traces.push_back(rational_from_json(traces[i], child(tw, i)));
  return s;
}

Json to_json(const building::CharMapResult& r) {
  return Json{{"lattice", to_json(r.lattice)}, {"is_full_lattice", r.is_full_lattice}, {"subspace_rank", r.subspace_rank}};
}

namespace {

const char* status_name(building::EdgeStatus s) {
  switch (s) {
    case building::EdgeStatus::preserved:
      return "preserved";
    case building::EdgeStatus::contracted:
      return "contracted";
    case building::EdgeStatus::violation:
      return "violation";
    case building::EdgeStatus::degenerate:
      break;
  }
  return "degenerate";
}

}  // namespace

Json to_json(const building::TreeMapReport& r) {
  Json vertices = Json::array();
  for (std::size_t i = 0; i < r.source.vertices.size(); ++i) {
    vertices.push_back(Json{{"source", r.source.vertices[i].lattice().digest()},
                            {"image", r.images[i] ? Json(r.images[i]->lattice().digest()) : Json(nullptr)}});
  }
  Json edges = Json::array();
  for (std::size_t e = 0; e < r.source.edges.size(); ++e) {
    edges.push_back(Json{{"from", r.source.edges[e].first},
                         {"to", r.source.edges[e].second},
                         {"status", status_name(r.edge_status[e])}});
  }
  return Json{{"vertices", std::move(vertices)},
              {"edges", std::move(edges)},
              {"preserved", r.preserved},
              {"contracted", r.contracted},
              {"violations", r.violations},
              {"degenerate_vertices", r.degenerate_vertices}};
}

}  // namespace colligo::io
