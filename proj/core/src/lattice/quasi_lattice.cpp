#include "colligo/lattice/quasi_lattice.hpp"

#include <algorithm>

#include "colligo/arith/smith.hpp"
#include "colligo/errors.hpp"

namespace colligo::lattice {

using arith::is_zero;
using arith::pow_p;
using arith::val_p;

namespace {

bool is_zero_vec(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_zero(x); });
}

// v -= f * w
void sub_multiple(QVector& v, const Rational& f, const QVector& w) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_zero(w[i])) v[i] -= f * w[i];
  }
}

QMatrix from_columns(std::size_t n, const std::vector<QVector>& cols) {
  QMatrix out(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) out.set_col(j, cols[j]);
  return out;
}

int compare(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols()) return a.cols() < b.cols() ? -1 : 1;
  const auto& x = a.data();
  const auto& y = b.data();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int c = cmp(x[i], y[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string vec_string(const QMatrix& m, std::size_t j, const Rational& scale) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ",";
    s += arith::to_string(m(i, j) * scale);
  }
  return s + ")";
}

}  // namespace

// ---- SubspaceRep ----

SubspaceRep::SubspaceRep(std::size_t ambient_dim, const QMatrix& spanning) : n_(ambient_dim) {
  if (spanning.rows() != ambient_dim) throw ShapeError("SubspaceRep: dimension mismatch");
  basis_ = spanning.cols() == 0 ? QMatrix(ambient_dim, 0) : arith::column_space_basis(spanning);
}

SubspaceRep SubspaceRep::whole(std::size_t n) { return SubspaceRep(n, QMatrix::identity(n)); }

bool SubspaceRep::contains(const QVector& v) const {
  if (is_zero_vec(v)) return true;
  if (basis_.cols() == 0) return false;
  return arith::coordinates(basis_, v).has_value();
}

// ---- QuasiLattice ----

QuasiLattice::QuasiLattice(const PAdicContext& ctx, const QMatrix& columns, const std::vector<Exponent>& exponents)
    : ctx_(ctx) {
  canonicalize(columns, exponents);
}

QuasiLattice QuasiLattice::standard(const PAdicContext& ctx, std::size_t n) {
  return QuasiLattice(ctx, QMatrix::identity(n), std::vector<Exponent>(n, Exponent(0)));
}

QuasiLattice QuasiLattice::zero(const PAdicContext& ctx, std::size_t n) {
  return QuasiLattice(ctx, QMatrix(n, 0), {});
}

QuasiLattice QuasiLattice::whole(const PAdicContext& ctx, std::size_t n) {
  return QuasiLattice(ctx, QMatrix::identity(n), std::vector<Exponent>(n, Exponent::whole_line()));
}

QuasiLattice QuasiLattice::span(const PAdicContext& ctx, const QMatrix& columns) {
  return QuasiLattice(ctx, columns, std::vector<Exponent>(columns.cols(), Exponent(0)));
}

QuasiLattice QuasiLattice::subspace(const PAdicContext& ctx, const SubspaceRep& s) {
  return QuasiLattice(ctx, s.basis(), std::vector<Exponent>(s.dim(), Exponent::whole_line()));
}

QuasiLattice QuasiLattice::diagonal(const PAdicContext& ctx, const std::vector<long>& exponents) {
  std::vector<Exponent> e(exponents.begin(), exponents.end());
  return QuasiLattice(ctx, QMatrix::identity(exponents.size()), e);
}

void QuasiLattice::canonicalize(const QMatrix& columns, const std::vector<Exponent>& exponents) {
  if (columns.cols() != exponents.size()) throw ShapeError("QuasiLattice: one exponent per column required");
  n_ = columns.rows();
  const long p = ctx_.prime();

  std::vector<std::size_t> line_idx;
  std::vector<QVector> pool;
  for (std::size_t j = 0; j < columns.cols(); ++j) {
    if (exponents[j].is_whole_line()) {
      line_idx.push_back(j);
      continue;
    }
    QVector v = columns.col(j);
    if (is_zero_vec(v)) continue;
    const Rational s = pow_p(p, exponents[j].value());
    for (auto& x : v) x *= s;
    pool.push_back(std::move(v));
  }

  lines_ = line_idx.empty() ? QMatrix(n_, 0) : arith::column_space_basis(columns.columns(line_idx));
  line_pivots_ = arith::column_pivots(lines_);

  for (auto& v : pool) {
    for (std::size_t c = 0; c < lines_.cols(); ++c) {
      const Rational f = v[line_pivots_[c]];
      if (!is_zero(f)) sub_multiple(v, f, lines_.col(c));
    }
  }
  std::erase_if(pool, is_zero_vec);

  std::vector<QVector> chosen;
  exps_.clear();
  pivots_.clear();
  for (std::size_t r = 0; r < n_ && !pool.empty(); ++r) {
    std::size_t best = pool.size();
    Valuation best_val;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (is_zero(pool[i][r])) continue;
      const Valuation v = val_p(pool[i][r], ctx_);
      if (best == pool.size() || v < best_val) {
        best = i;
        best_val = v;
      }
    }
    if (best == pool.size()) continue;
    QVector piv = std::move(pool[best]);
    pool.erase(pool.begin() + static_cast<long>(best));
    for (auto& v : pool) {
      if (!is_zero(v[r])) sub_multiple(v, v[r] / piv[r], piv);
    }
    std::erase_if(pool, is_zero_vec);

    const long e = best_val.value();
    const Rational unit = pow_p(p, e) / piv[r];
    for (auto& x : piv) x *= unit;
    chosen.push_back(std::move(piv));
    pivots_.push_back(r);
    exps_.push_back(e);
  }

  for (std::size_t k = 0; k < chosen.size(); ++k) {
    const std::size_t rk = pivots_[k];
    const Rational pe = pow_p(p, exps_[k]);
    for (std::size_t j = 0; j < k; ++j) {
      const Rational& x = chosen[j][rk];
      if (is_zero(x)) continue;
      const Rational red = arith::reduce_mod_pf(x, p, exps_[k]);
      if (red != x) sub_multiple(chosen[j], (x - red) / pe, chosen[k]);
    }
  }
  finite_ = from_columns(n_, chosen);
}

QMatrix QuasiLattice::columns() const {
  QMatrix out(n_, rank());
  out.set_block(0, 0, lines_);
  for (std::size_t j = 0; j < finite_.cols(); ++j) {
    const Rational s = pow_p(prime(), -exps_[j]);
    for (std::size_t i = 0; i < n_; ++i) out(i, lines_.cols() + j) = finite_(i, j) * s;
  }
  return out;
}

std::vector<Exponent> QuasiLattice::exponents() const {
  std::vector<Exponent> out(lines_.cols(), Exponent::whole_line());
  for (long e : exps_) out.emplace_back(e);
  return out;
}

SubspaceRep QuasiLattice::field_span() const { return SubspaceRep(n_, hconcat(lines_, finite_)); }

std::optional<QVector> QuasiLattice::finite_coordinates(QVector v) const {
  if (v.size() != n_) throw ShapeError("QuasiLattice: vector dimension mismatch");
  for (std::size_t c = 0; c < lines_.cols(); ++c) {
    const Rational f = v[line_pivots_[c]];
    if (!is_zero(f)) sub_multiple(v, f, lines_.col(c));
  }
  QVector coef(finite_.cols());
  for (std::size_t j = 0; j < finite_.cols(); ++j) {
    const std::size_t r = pivots_[j];
    if (is_zero(v[r])) continue;
    coef[j] = v[r] / finite_(r, j);
    sub_multiple(v, coef[j], finite_.col(j));
  }
  if (!is_zero_vec(v)) return std::nullopt;
  return coef;
}

std::optional<Valuation> QuasiLattice::level(const QVector& v) const {
  auto coef = finite_coordinates(v);
  if (!coef) return std::nullopt;
  Valuation out = Valuation::infinity();
  for (const auto& c : *coef) out = std::min(out, val_p(c, ctx_));
  return out;
}

bool QuasiLattice::contains(const QVector& v) const {
  auto l = level(v);
  return l && Valuation(0) <= *l;
}

bool QuasiLattice::contains(const QuasiLattice& other) const {
  if (other.n_ != n_) throw ShapeError("QuasiLattice: dimension mismatch");
  for (std::size_t c = 0; c < other.lines_.cols(); ++c) {
    auto l = level(other.lines_.col(c));
    if (!l || !l->is_infinite()) return false;
  }
  for (std::size_t j = 0; j < other.finite_.cols(); ++j) {
    if (!contains(other.finite_.col(j))) return false;
  }
  return true;
}

QuasiLattice QuasiLattice::scaled(const Rational& c) const {
  if (is_zero(c)) throw PreconditionError("QuasiLattice::scaled: zero scalar");
  QMatrix f = finite_;
  f *= c;
  std::vector<Exponent> e(lines_.cols(), Exponent::whole_line());
  e.resize(lines_.cols() + f.cols(), Exponent(0));
  return QuasiLattice(ctx_, hconcat(lines_, f), e);
}

bool QuasiLattice::operator==(const QuasiLattice& o) const {
  return prime() == o.prime() && n_ == o.n_ && exps_ == o.exps_ && lines_ == o.lines_ && finite_ == o.finite_;
}

std::strong_ordering QuasiLattice::operator<=>(const QuasiLattice& o) const {
  if (auto c = prime() <=> o.prime(); c != 0) return c;
  if (auto c = n_ <=> o.n_; c != 0) return c;
  if (auto c = exps_ <=> o.exps_; c != 0) return c;
  int c = compare(lines_, o.lines_);
  if (c == 0) c = compare(finite_, o.finite_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string QuasiLattice::digest() const {
  std::string s;
  for (std::size_t c = 0; c < lines_.cols(); ++c) {
    if (!s.empty()) s += " + ";
    s += "K" + vec_string(lines_, c, Rational(1));
  }
  for (std::size_t j = 0; j < finite_.cols(); ++j) {
    if (!s.empty()) s += " + ";
    if (exps_[j] != 0) s += std::to_string(prime()) + "^" + std::to_string(exps_[j]) + " ";
    s += "O" + vec_string(finite_, j, pow_p(prime(), -exps_[j]));
  }
  return s.empty() ? "0" : s;
}

// ---- operations ----

bool member(const QVector& v, const QuasiLattice& m) { return m.contains(v); }

QuasiLattice sum(const QuasiLattice& a, const QuasiLattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw ShapeError("sum: dimension mismatch");
  if (a.prime() != b.prime()) throw PreconditionError("sum: different primes");
  std::vector<Exponent> e = a.exponents();
  const auto eb = b.exponents();
  e.insert(e.end(), eb.begin(), eb.end());
  return QuasiLattice(a.ctx(), hconcat(a.columns(), b.columns()), e);
}

QuasiLattice direct_sum(const QuasiLattice& a, const QuasiLattice& b) {
  if (a.prime() != b.prime()) throw PreconditionError("direct_sum: different primes");
  std::vector<Exponent> e = a.exponents();
  const auto eb = b.exponents();
  e.insert(e.end(), eb.begin(), eb.end());
  return QuasiLattice(a.ctx(), arith::direct_sum(a.columns(), b.columns()), e);
}

QuasiLattice intersect(const QuasiLattice& a, const QuasiLattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw ShapeError("intersect: dimension mismatch");
  const std::size_t n = a.ambient_dim();
  return preimage(vconcat(QMatrix::identity(n), QMatrix::identity(n)), direct_sum(a, b));
}

QuasiLattice preimage(const QMatrix& phi, const QuasiLattice& m) {
  if (phi.rows() != m.ambient_dim()) throw ShapeError("preimage: map target does not match module");
  const std::size_t n = phi.rows();
  const std::size_t dom = phi.cols();
  const std::size_t w = m.subspace_rank();
  const std::size_t k = m.finite_part().cols();
  const QMatrix basis = arith::complete_basis(hconcat(m.line_part(), m.finite_part()));
  const QMatrix t = arith::solve(basis, phi);

  // phi v in M iff the complement coordinates vanish and the finite ones are integral.
  const std::size_t rest = n - w - k;
  const QMatrix z = rest == 0 ? QMatrix::identity(dom) : arith::kernel_basis(t.block(w + k, 0, rest, dom));
  const std::size_t zd = z.cols();
  if (zd == 0) return QuasiLattice::zero(m.ctx(), dom);
  if (k == 0) return QuasiLattice(m.ctx(), z, std::vector<Exponent>(zd, Exponent::whole_line()));

  const QMatrix a = t.block(w, 0, k, dom) * z;
  const auto s = arith::smith_dvr(a, arith::PAdicDvr(m.ctx()));
  // a y in O^k iff D V y in O^k; y' = V y.
  const QMatrix gens = z * arith::inverse(s.V);
  std::vector<Exponent> e(zd, Exponent::whole_line());
  for (std::size_t i = 0; i < s.exponents.size(); ++i) e[i] = Exponent(-s.exponents[i]);
  return QuasiLattice(m.ctx(), gens, e);
}

QuasiLattice image(const QMatrix& phi, const QuasiLattice& m) {
  if (phi.cols() != m.ambient_dim()) throw ShapeError("image: map source does not match module");
  std::vector<Exponent> e(m.subspace_rank(), Exponent::whole_line());
  e.resize(m.rank(), Exponent(0));
  return QuasiLattice(m.ctx(), phi * hconcat(m.line_part(), m.finite_part()), e);
}

QuasiLattice tensor_id(const QuasiLattice& r, std::size_t inner) {
  if (r.ambient_dim() % 2 != 0) throw ShapeError("tensor_id: module dimension must be even");
  const std::size_t m = r.ambient_dim() / 2;
  const QMatrix cols = r.columns();
  const auto ex = r.exponents();
  QMatrix out(2 * m * inner, cols.cols() * inner);
  std::vector<Exponent> e;
  for (std::size_t c = 0; c < cols.cols(); ++c) {
    for (std::size_t j = 0; j < inner; ++j) {
      const std::size_t col = c * inner + j;
      for (std::size_t i = 0; i < m; ++i) {
        out(i * inner + j, col) = cols(i, c);
        out(m * inner + i * inner + j, col) = cols(m + i, c);
      }
      e.push_back(ex[c]);
    }
  }
  return QuasiLattice(r.ctx(), out, e);
}

QuasiLattice relation_compose(const QuasiLattice& s, const QuasiLattice& t) {
  if (s.ambient_dim() != t.ambient_dim() || s.ambient_dim() % 2 != 0) {
    throw ShapeError("relation_compose: relations must live in the same even-dimensional space");
  }
  const std::size_t k = s.ambient_dim() / 2;
  QMatrix first(2 * k, 3 * k);
  QMatrix second(2 * k, 3 * k);
  QMatrix outer(2 * k, 3 * k);
  for (std::size_t i = 0; i < 2 * k; ++i) {
    first(i, i) = 1;
    second(i, k + i) = 1;
  }
  for (std::size_t i = 0; i < k; ++i) {
    outer(i, i) = 1;
    outer(k + i, 2 * k + i) = 1;
  }
  return image(outer, intersect(preimage(first, s), preimage(second, t)));
}

QuasiLattice identity_relation(const PAdicContext& ctx, std::size_t k) {
  return QuasiLattice(ctx, vconcat(QMatrix::identity(k), QMatrix::identity(k)),
                      std::vector<Exponent>(k, Exponent::whole_line()));
}

}  // namespace colligo::lattice
