#include "colligo/colligation/conjugator.hpp"

#include <vector>

#include "colligo/errors.hpp"

namespace colligo::coll {

namespace {

std::vector<Rational> diagonal_eigenvalues(const QMatrix& d, const char* which) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (i != j && !arith::is_zero(d(i, j))) {
        throw PreconditionError(std::string("commutativity_conjugator: inner block of ") + which + " is not diagonal");
      }
    }
    out.push_back(d(i, i));
  }
  return out;
}

void require_distinct(const std::vector<Rational>& all) {
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i] == all[j]) throw GenericityError("commutativity_conjugator: repeated eigenvalue " + arith::to_string(all[i]));
    }
  }
}

}  // namespace

QMatrix commutativity_conjugator(const Colligation& g, const Colligation& h) {
  if (g.alpha() != 1 || h.alpha() != 1 || g.m() != 1 || h.m() != 1) {
    throw PreconditionError("commutativity_conjugator: needs alpha = 1 and m = 1");
  }
  const auto lam = diagonal_eigenvalues(g.d(), "g");
  const auto mu = diagonal_eigenvalues(h.d(), "h");
  std::vector<Rational> all = lam;
  all.insert(all.end(), mu.begin(), mu.end());
  require_distinct(all);

  const std::size_t n1 = lam.size();
  const std::size_t n2 = mu.size();
  const std::size_t n = n1 + n2;
  const Rational a = g.a()(0, 0);
  const Rational p = h.a()(0, 0);
  auto b = [&](std::size_t i) { return g.entries()(0, 1 + i); };
  auto c = [&](std::size_t i) { return g.entries()(1 + i, 0); };
  auto q = [&](std::size_t j) { return h.entries()(0, 1 + j); };
  auto r = [&](std::size_t j) { return h.entries()(1 + j, 0); };

  QMatrix upper = QMatrix::identity(n);
  QMatrix lower = QMatrix::identity(n);
  QMatrix diag(n, n);
  for (std::size_t i = 0; i < n1; ++i) {
    Rational s = p;
    for (std::size_t j = 0; j < n2; ++j) {
      upper(i, n1 + j) = c(i) * q(j) / (lam[i] - mu[j]);
      lower(n1 + j, i) = b(i) * r(j) / (mu[j] - lam[i]);
      s += q(j) * r(j) / (lam[i] - mu[j]);
    }
    if (arith::is_zero(s)) throw GenericityError("commutativity_conjugator: vanishing diagonal factor");
    diag(i, i) = s;
  }
  for (std::size_t j = 0; j < n2; ++j) {
    Rational s = a;
    for (std::size_t i = 0; i < n1; ++i) s += b(i) * c(i) / (mu[j] - lam[i]);
    if (arith::is_zero(s)) throw GenericityError("commutativity_conjugator: infinite diagonal factor");
    diag(n1 + j, n1 + j) = 1 / s;
  }

  QMatrix swap(n, n);
  for (std::size_t j = 0; j < n2; ++j) swap(n1 + j, j) = 1;
  for (std::size_t i = 0; i < n1; ++i) swap(i, n2 + i) = 1;
  return arith::inverse(upper) * diag * lower * swap;
}

}  // namespace colligo::coll
