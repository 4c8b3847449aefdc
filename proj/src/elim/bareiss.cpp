#include "polarlib/bareiss.hpp"

#include <exception>

#include "polarlib/error.hpp"

namespace polar::elim {
namespace {

void checkSquare(const PolyMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throwInput("not_square", "determinant of a non-square matrix");
}

/// Chooses the row (>= k) with a nonzero entry in column k and the fewest
/// terms; returns m.size() when the column is zero below the diagonal.
std::size_t choosePivot(const PolyMatrix& m, std::size_t k) {
  std::size_t best = m.size();
  for (std::size_t i = k; i < m.size(); ++i) {
    if (m[i][k].isZero()) continue;
    if (best == m.size() || m[i][k].size() < m[best][k].size()) best = i;
  }
  return best;
}

Poly alignedCommon(PolyMatrix& m) {
  std::vector<std::string> vars;
  for (const auto& row : m)
    for (const auto& e : row) vars = unionVariables(vars, e.variables());
  for (auto& row : m)
    for (auto& e : row) e = e.alignedTo(vars);
  return Poly::constant(1, vars);
}

}  // namespace

Poly bareissDeterminantSerial(PolyMatrix m) {
  checkSquare(m);
  const std::size_t n = m.size();
  Poly prev = alignedCommon(m);
  if (n == 0) return prev;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const std::size_t p = choosePivot(m, k);
    if (p == n) return Poly(prev.variables());
    if (p != k) {
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = divideExact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Poly bareissDeterminantParallel(PolyMatrix m) {
  checkSquare(m);
  const std::size_t n = m.size();
  Poly prev = alignedCommon(m);
  if (n == 0) return prev;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const std::size_t p = choosePivot(m, k);
    if (p == n) return Poly(prev.variables());
    if (p != k) {
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    const auto rows = static_cast<long>(n - k - 1);
    std::exception_ptr failure;
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (long ii = 0; ii < rows; ++ii) {
      for (long jj = 0; jj < rows; ++jj) {
        const std::size_t i = k + 1 + static_cast<std::size_t>(ii);
        const std::size_t j = k + 1 + static_cast<std::size_t>(jj);
        try {
          m[i][j] = divideExact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        } catch (...) {
#pragma omp critical(bareiss_failure)
          if (!failure) failure = std::current_exception();
        }
      }
    }
    if (failure) std::rethrow_exception(failure);
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace polar::elim
