#include <algorithm>

#include "polarlib/counting.hpp"
#include "polarlib/critsys.hpp"
#include "polarlib/elim.hpp"
#include "polarlib/error.hpp"
#include "polarlib/linear.hpp"

namespace polar::counting {
namespace {

Poly shearX(const Poly& f, const Rational& s) {
  // x -> x + s*y on the variable list (x, y)
  return applyLinearChange(f, LinearChange::linear({{Rational(1), s}, {Rational(0), Rational(1)}}));
}

Poly linearFactor(const std::string& v, const Rational& r) {
  return Poly::variable(v) - Poly::constant(r, {v});
}

}  // namespace

SingularScan singularPointsCurve(const Poly& input) {
  if (input.isZero() || input.isConstant()) throwInput("constant_curve", "curve equation is constant");
  const auto vars = critsys::planeVariables(input);
  const Poly F = input.alignedTo(vars);
  if (!elim::isSquarefree(F)) throwInput("not_squarefree", "curve equation is not squarefree");
  const std::string& x = vars[0];
  const std::string& y = vars[1];
  const int d = F.totalDegree();

  SingularScan scan;
  // A shear making F monic in y keeps the eliminants free of spurious roots.
  Poly Fs;
  for (int k = 0;; ++k) {
    scan.shear = Rational((k + 1) / 2 * (k % 2 == 0 ? -1 : 1));
    Fs = shearX(F, scan.shear);
    if (Fs.degreeIn(y) == d) break;
  }
  const Poly fx = differentiate(Fs, x);
  const Poly fy = differentiate(Fs, y);

  Poly g;
  for (const int lambda : {1, -2, 3}) {
    g = elim::gcd(g, elim::resultantExtended(Fs, fx + Rational(lambda) * fy, y, false));
    if (!g.isZero() && g.isConstant()) return scan;
  }
  if (g.isZero() || g.isConstant()) return scan;

  Poly rest = elim::squarefreePart(g.alignedTo({x}));
  for (const auto& x0 : elim::rationalRoots(rest)) {
    rest = divideExact(rest, linearFactor(x, x0));
    const auto at = [&](const Poly& p) { return substitute(p, x, x0).alignedTo({y}); };
    Poly h = elim::gcd(elim::gcd(at(Fs), at(fx)), at(fy));
    if (h.isZero() || h.isConstant()) continue;
    h = elim::squarefreePart(h);
    for (const auto& y0 : elim::rationalRoots(h)) {
      h = divideExact(h, linearFactor(y, y0));
      scan.points.push_back({x0 + scan.shear * y0, y0, std::nullopt, std::nullopt});
    }
    if (!h.isConstant()) scan.unresolved.push_back(h);
  }
  if (!rest.isConstant()) scan.unresolved.push_back(primitiveNormalized(rest));

  for (const auto& p : scan.points) {
    const std::map<std::string, Rational> at{{x, p.x}, {y, p.y}};
    if (evaluate(F, at) != 0 || evaluate(differentiate(F, x), at) != 0 || evaluate(differentiate(F, y), at) != 0)
      throwConsistency("singular_point_check", "extracted point is not singular");
  }
  std::sort(scan.points.begin(), scan.points.end(),
            [](const SingularPoint& a, const SingularPoint& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
  return scan;
}

}  // namespace polar::counting
