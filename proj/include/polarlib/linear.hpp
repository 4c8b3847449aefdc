#pragma once

#include <optional>
#include <vector>

#include "polarlib/poly.hpp"

namespace polar {

using RationalMatrix = std::vector<std::vector<Rational>>;

Rational determinant(RationalMatrix m);
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Invertible affine substitution on k variables, stored as a (k+1)x(k+1)
/// matrix whose last row is (0, ..., 0, 1):
///   x_i  ->  sum_j M[i][j] x_j + M[i][k]
class LinearChange {
 public:
  /// Throws on a malformed last row or a singular matrix.
  explicit LinearChange(RationalMatrix matrix);

  static LinearChange identity(std::size_t k);
  /// Purely linear change from a k x k matrix (no translation).
  static LinearChange linear(const RationalMatrix& kxk);

  std::size_t dimension() const noexcept { return matrix_.size() - 1; }
  const RationalMatrix& matrix() const noexcept { return matrix_; }

 private:
  RationalMatrix matrix_;
};

/// Substitutes the change into p's variables (in list order).
Poly applyLinearChange(const Poly& p, const LinearChange& change);

}  // namespace polar
