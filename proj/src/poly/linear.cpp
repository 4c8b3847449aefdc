#include "polarlib/linear.hpp"

#include "polarlib/error.hpp"

namespace polar {

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throwInput("not_square", "determinant of a non-square matrix");
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throwInput("not_square", "inverse of a non-square matrix");
    inv[i][i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[k]);
    std::swap(inv[pivot], inv[k]);
    const Rational p = a[k][k];
    for (std::size_t j = 0; j < n; ++j) {
      a[k][j] /= p;
      inv[k][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      const Rational f = a[i][k];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[k][j];
        inv[i][j] -= f * inv[k][j];
      }
    }
  }
  return inv;
}

LinearChange::LinearChange(RationalMatrix matrix) : matrix_(std::move(matrix)) {
  const std::size_t n = matrix_.size();
  if (n == 0) throwInput("bad_linear_change", "empty linear change");
  for (const auto& row : matrix_)
    if (row.size() != n) throwInput("bad_linear_change", "linear change matrix is not square");
  for (std::size_t j = 0; j + 1 < n; ++j)
    if (matrix_[n - 1][j] != 0) throwInput("bad_linear_change", "last row must be (0, ..., 0, 1)");
  if (matrix_[n - 1][n - 1] != 1) throwInput("bad_linear_change", "last row must be (0, ..., 0, 1)");
  if (determinant(matrix_) == 0) throwInput("singular_change", "linear change matrix is singular");
}

LinearChange LinearChange::identity(std::size_t k) {
  RationalMatrix m(k + 1, std::vector<Rational>(k + 1, Rational(0)));
  for (std::size_t i = 0; i <= k; ++i) m[i][i] = 1;
  return LinearChange(std::move(m));
}

LinearChange LinearChange::linear(const RationalMatrix& kxk) {
  const std::size_t k = kxk.size();
  RationalMatrix m(k + 1, std::vector<Rational>(k + 1, Rational(0)));
  for (std::size_t i = 0; i < k; ++i) {
    if (kxk[i].size() != k) throwInput("bad_linear_change", "linear change matrix is not square");
    for (std::size_t j = 0; j < k; ++j) m[i][j] = kxk[i][j];
  }
  m[k][k] = 1;
  return LinearChange(std::move(m));
}

Poly applyLinearChange(const Poly& p, const LinearChange& change) {
  const auto& vars = p.variables();
  const std::size_t k = vars.size();
  if (change.dimension() != k)
    throwInput("dimension_mismatch", "linear change of dimension " + std::to_string(change.dimension()) +
                                         " applied to a polynomial in " + std::to_string(k) + " variables");
  const auto& m = change.matrix();
  std::vector<Poly> images;
  images.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    Poly img = Poly::constant(m[i][k], vars);
    for (std::size_t j = 0; j < k; ++j)
      if (m[i][j] != 0) img += Poly::variable(vars[j], vars) * m[i][j];
    images.push_back(std::move(img));
  }
  // Powers of each image are cached; terms are assembled monomial by monomial.
  std::vector<std::vector<Poly>> powers(k);
  auto power = [&](std::size_t i, std::uint32_t e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(1, vars));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Poly out(vars);
  for (const auto& [e, c] : p.terms()) {
    Poly term = Poly::constant(c, vars);
    for (std::size_t i = 0; i < k; ++i)
      if (e[i] > 0) term *= power(i, e[i]);
    out += term;
  }
  return out;
}

}  // namespace polar
