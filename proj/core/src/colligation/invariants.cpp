#include "colligo/colligation/invariants.hpp"

#include "colligo/arith/factor.hpp"
#include "colligo/colligation/characteristic.hpp"
#include "colligo/errors.hpp"

namespace colligo::coll {

bool DivisorPoint::operator==(const DivisorPoint& o) const { return (*this <=> o) == 0; }

std::strong_ordering DivisorPoint::operator<=>(const DivisorPoint& o) const {
  if (auto c = kind <=> o.kind; c != 0) return c;
  switch (kind) {
    case Kind::rational: {
      const int c = cmp(value, o.value);
      return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    case Kind::algebraic:
      return min_poly <=> o.min_poly;
    case Kind::infinity:
      break;
  }
  return std::strong_ordering::equal;
}

std::string DivisorPoint::to_string() const {
  switch (kind) {
    case Kind::rational:
      return arith::to_string(value);
    case Kind::algebraic:
      return "root(" + min_poly.to_string() + ")";
    case Kind::infinity:
      break;
  }
  return "inf";
}

Divisor::Divisor(Map points) : points_(std::move(points)) {
  std::erase_if(points_, [](const auto& kv) { return !kv.second.infinite && kv.second.value == 0; });
}

Multiplicity Divisor::at(const DivisorPoint& pt) const {
  auto it = points_.find(pt);
  return it == points_.end() ? Multiplicity{} : it->second;
}

Divisor Divisor::without(const DivisorPoint& pt) const {
  Map m = points_;
  m.erase(pt);
  return Divisor(std::move(m));
}

Divisor Divisor::stabilized() const {
  Map m = points_;
  m[DivisorPoint::rational_point(Rational(1))] = Multiplicity::inf();
  return Divisor(std::move(m));
}

Divisor operator+(const Divisor& a, const Divisor& b) {
  Divisor::Map m = a.points_;
  for (const auto& [pt, mult] : b.points_) {
    auto& slot = m[pt];
    if (slot.infinite || mult.infinite) {
      slot = Multiplicity::inf();
    } else {
      slot.value += mult.value;
    }
  }
  return Divisor(std::move(m));
}

Divisor divisor(const Colligation& g) {
  if (g.m() != 1) throw PreconditionError("divisor: defined for m = 1");
  const Poly pg = inner_determinant(g.d());
  Divisor::Map m;
  for (const auto& f : arith::factor_over_q(pg)) {
    if (f.poly.degree() == 1) {
      m[DivisorPoint::rational_point(-f.poly.coeff(0))].value += f.multiplicity;
    } else {
      m[DivisorPoint::algebraic(f.poly)].value += f.multiplicity;
    }
  }
  const long at_infinity = static_cast<long>(g.inner()) - pg.degree();
  if (at_infinity > 0) m[DivisorPoint::infinity()].value = at_infinity;
  return Divisor(std::move(m));
}

InvariantSignature invariants(const Colligation& g, std::size_t k_max) {
  if (g.m() != 1) throw PreconditionError("invariants: defined for m = 1");
  InvariantSignature out;
  out.corner = g.a();
  const QMatrix b = g.b();
  const QMatrix c = g.c();
  const QMatrix d = g.d();
  QMatrix power = QMatrix::identity(g.inner());
  for (std::size_t k = 0; k <= k_max; ++k) {
    out.moments.push_back(b * power * c);
    if (k > 0) {
      Rational tr = 0;
      for (std::size_t i = 0; i < power.rows(); ++i) tr += power(i, i);
      out.traces.push_back(tr);
    }
    power = power * d;
  }
  return out;
}

QuotientComparison quotient_compare(const Colligation& g, const Colligation& h) {
  if (g.alpha() != h.alpha()) return {false, "corner sizes differ"};
  const auto cg = char_fun(g);
  const auto ch = char_fun(h);
  if (!(cg == ch)) {
    for (std::size_t i = 0; i < g.alpha(); ++i) {
      for (std::size_t j = 0; j < g.alpha(); ++j) {
        if (!(cg.entry(i, j) == ch.entry(i, j))) {
          return {false, "characteristic function entry (" + std::to_string(i) + "," + std::to_string(j) + ")"};
        }
      }
    }
  }
  const auto one = DivisorPoint::rational_point(Rational(1));
  const Divisor dg = divisor(g).without(one);
  const Divisor dh = divisor(h).without(one);
  if (!(dg == dh)) {
    auto it_g = dg.points().begin();
    auto it_h = dh.points().begin();
    while (it_g != dg.points().end() && it_h != dh.points().end() && *it_g == *it_h) {
      ++it_g;
      ++it_h;
    }
    const DivisorPoint& pt = it_g == dg.points().end()                                ? it_h->first
                             : it_h == dh.points().end()                              ? it_g->first
                             : it_g->first < it_h->first || !(it_g->first == it_h->first) ? std::min(it_g->first, it_h->first)
                                                                                      : it_g->first;
    return {false, "divisor at " + pt.to_string() + ": " + dg.at(pt).to_string() + " vs " + dh.at(pt).to_string()};
  }
  return {true, ""};
}

bool quotient_equal(const Colligation& g, const Colligation& h) { return quotient_compare(g, h).equal; }

}  // namespace colligo::coll
