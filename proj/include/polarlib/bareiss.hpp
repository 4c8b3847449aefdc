#pragma once

#include <vector>

#include "polarlib/poly.hpp"

namespace polar::elim {

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Fraction-free (Bareiss) determinant. Every intermediate division is an
/// exact polynomial division, so entries stay polynomial throughout.
/// The serial version is the reference kept for testing and benchmarks.
Poly bareissDeterminantSerial(PolyMatrix m);

/// Same elimination with the row updates of each step spread over OpenMP
/// threads. Pivoting is identical, so the result equals the serial one.
Poly bareissDeterminantParallel(PolyMatrix m);

inline Poly determinant(PolyMatrix m, bool parallel = true) {
  return parallel ? bareissDeterminantParallel(std::move(m)) : bareissDeterminantSerial(std::move(m));
}

}  // namespace polar::elim
