#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "polarlib/bareiss.hpp"
#include "polarlib/poly.hpp"

namespace polar::elim {

/// Sylvester matrix of f and g with respect to var (f's rows first).
PolyMatrix sylvesterMatrix(const Poly& f, const Poly& g, std::string_view var);

/// Res_var(f, g) as the Bareiss determinant of the Sylvester matrix. The
/// result is over the remaining variables and is not content-normalized.
/// Both inputs must have positive degree in var.
Poly resultant(const Poly& f, const Poly& g, std::string_view var, bool parallel = true);

/// Like resultant(), but also accepts inputs of degree 0 in var
/// (Res(c, g) = c^deg g). Zero inputs give zero.
Poly resultantExtended(const Poly& f, const Poly& g, std::string_view var, bool parallel = true);

/// Multivariate gcd over Q via recursive content / primitive remainder
/// sequences, normalized with primitiveNormalized(). gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// gcd of the coefficients of p viewed as a polynomial in var.
Poly content(const Poly& p, std::string_view var);
Poly primitivePart(const Poly& p, std::string_view var);
/// Sparse pseudo-remainder of a by b in var (no trailing lc power).
Poly pseudoRemainder(const Poly& a, const Poly& b, std::string_view var);

/// True when p has no repeated factor (gcd with all partials is constant).
bool isSquarefree(const Poly& p);
/// p divided by gcd(p, all partials), normalized. Works for any number of variables.
Poly radical(const Poly& p);

struct SquarefreeDecomposition {
  std::vector<std::pair<Poly, int>> factors;  // monic, pairwise coprime, squarefree
  Rational content;
  Poly reconstruct() const;
};

// Univariate operations. Inputs may carry several listed variables as long
// as at most one of them occurs.
Poly squarefreePart(const Poly& p);
SquarefreeDecomposition squarefreeDecompose(const Poly& p);
int rootMultiplicity(const Poly& p, const Rational& a);
int countDistinctRoots(const Poly& p);
std::vector<Rational> rationalRoots(const Poly& p);

}  // namespace polar::elim
