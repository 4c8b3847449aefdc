#include "polarlib/elim.hpp"
#include "polarlib/error.hpp"

namespace polar::elim {

PolyMatrix sylvesterMatrix(const Poly& f, const Poly& g, std::string_view var) {
  const auto vars = unionVariables(f.variables(), g.variables());
  const auto fc = coefficientsIn(f.alignedTo(vars), var);
  const auto gc = coefficientsIn(g.alignedTo(vars), var);
  if (fc.size() < 2 || gc.size() < 2)
    throwInput("zero_degree", "Sylvester matrix needs positive degree in '" + std::string(var) + "'");
  const std::size_t m = fc.size() - 1;
  const std::size_t n = gc.size() - 1;
  PolyMatrix s(m + n, std::vector<Poly>(m + n, Poly(vars)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = fc[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = gc[n - k];
  return s;
}

namespace {

Poly dropVariable(const Poly& p, std::string_view var) {
  return p.hasVariable(var) ? substitute(p, var, Rational(0)) : p;
}

}  // namespace

Poly resultant(const Poly& f, const Poly& g, std::string_view var, bool parallel) {
  if (f.degreeIn(var) <= 0 || g.degreeIn(var) <= 0)
    throwInput("zero_degree", "resultant needs both inputs of positive degree in '" + std::string(var) + "'");
  return dropVariable(determinant(sylvesterMatrix(f, g, var), parallel), var);
}

Poly resultantExtended(const Poly& f, const Poly& g, std::string_view var, bool parallel) {
  const auto vars = unionVariables(f.variables(), g.variables());
  if (f.isZero() || g.isZero()) return dropVariable(Poly(vars), var);
  const int df = f.degreeIn(var);
  const int dg = g.degreeIn(var);
  if (df == 0 && dg == 0) return dropVariable(Poly::constant(1, vars), var);
  if (df == 0) return dropVariable(pow(f.alignedTo(vars), static_cast<unsigned>(dg)), var);
  if (dg == 0) return dropVariable(pow(g.alignedTo(vars), static_cast<unsigned>(df)), var);
  return resultant(f, g, var, parallel);
}

}  // namespace polar::elim
