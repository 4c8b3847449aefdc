#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "polarlib/elim.hpp"
#include "polarlib/upoly.hpp"
#include "support.hpp"

using namespace polar;
using namespace polar::elim;
using testing::P;
using testing::Q;

namespace {

// Determinant by the permutation expansion; independent of the elimination code.
Poly leibniz(const PolyMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly total = Poly::constant(0, m[0][0].variables());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Poly term = Poly::constant(inversions % 2 ? -1 : 1, m[0][0].variables());
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Random polynomial in x, y with positive degree in y.
Poly randomInY(Rng& rng, int maxDeg) {
  for (;;) {
    const Poly p = testing::randomPoly(rng, {"x", "y"}, maxDeg, 4);
    if (p.degreeIn("y") > 0) return p;
  }
}

}  // namespace

TEST_SUITE("elim") {

TEST_CASE("Bareiss against the permutation expansion") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 5;
    PolyMatrix m(n, std::vector<Poly>(n));
    for (auto& row : m)
      for (auto& e : row) e = trial % 2 ? testing::randomPoly(rng, {"x", "y"}, 2, 3)
                                        : Poly::constant(rng.uniform(-4, 4), {"x", "y"});
    const Poly expected = leibniz(m);
    CHECK(bareissDeterminantSerial(m) == expected);
    CHECK(bareissDeterminantParallel(m) == expected);
  }
}

TEST_CASE("Sylvester matrix shape") {
  const auto s = sylvesterMatrix(P("y^2 - x"), P("y - x"), "y");
  REQUIRE(s.size() == 3);
  CHECK(s[0].size() == 3);
  CHECK(s[0][0] == P("1", {"x"}).alignedTo(s[0][0].variables()));
}

TEST_CASE("resultant examples") {
  CHECK(resultant(P("y^2 - x"), P("y - x"), "y") == P("x^2 - x"));
  const Poly r = resultant(P("x^2 + y^2 - 1"), P("x - y"), "y");
  CHECK(primitiveNormalized(r) == P("2*x^2 - 1"));
  CHECK(POLAR_ERROR_CODE(resultant(P("x^2 + 1", {"x", "y"}), P("y"), "y")) == "zero_degree");
  CHECK(resultantExtended(P("3", {"y"}), P("y^2 + 1"), "y") == Poly::constant(9));
  CHECK(resultantExtended(P("0", {"y"}), P("y^2 + 1"), "y").isZero());
}

TEST_CASE("univariate resultant equals the root product") {
  // f = 2 (y-1)(y+3), g = (y-2)(y-1/2)(y+1)
  const std::vector<Rational> fr{1, -3};
  const std::vector<Rational> gr{2, Q("1/2"), -1};
  Poly f = Poly::constant(2, {"y"});
  for (const auto& a : fr) f *= P("y") - Poly::constant(a, {"y"});
  Poly g = Poly::constant(1, {"y"});
  for (const auto& b : gr) g *= P("y") - Poly::constant(b, {"y"});
  Rational expected = 8;  // lc(f)^deg g
  for (const auto& a : fr)
    for (const auto& b : gr) expected *= a - b;
  const Poly r = resultant(f, g, "y");
  REQUIRE(r.isConstant());
  CHECK(r.constantTerm() == expected);
}

TEST_CASE("property: resultant identities on random pairs") {
  Rng rng(2024);
  for (int i = 0; i < 100; ++i) {
    const Poly f = randomInY(rng, 3);
    const Poly g = randomInY(rng, 2);
    const Poly h = randomInY(rng, 2);
    const Poly rfg = resultant(f, g, "y");
    CHECK(resultant(f, g * h, "y") == rfg * resultant(f, h, "y"));
    const int sign = (f.degreeIn("y") * g.degreeIn("y")) % 2 ? -1 : 1;
    CHECK(resultant(g, f, "y") == Rational(sign) * rfg);
    CHECK(resultant(f * h, g * h, "y").isZero());
    CHECK(rfg.isZero() == (gcd(f, g).degreeIn("y") > 0));
  }
}

TEST_CASE("serial and parallel resultants agree") {
  Rng rng(77);
  for (int i = 0; i < 10; ++i) {
    const Poly f = randomInY(rng, 4);
    const Poly g = randomInY(rng, 4);
    CHECK(resultant(f, g, "y", false) == resultant(f, g, "y", true));
  }
}

TEST_CASE("gcd") {
  CHECK(gcd(P("x^2 - y^2"), P("x^2 + 2*x*y + y^2")) == P("x + y"));
  CHECK(gcd(P("6*x^2 - 6"), P("4*x - 4")) == P("x - 1"));
  CHECK(gcd(P("x^2 + 1"), P("x + 1")) == Poly::constant(1, {"x"}));
  CHECK(gcd(P("0", {"x"}), P("0", {"x"})).isZero());
  CHECK(content(P("x^2*y + x*y^2"), "y") == P("x", {"x", "y"}));
  CHECK(primitivePart(P("x^2*y + x*y^2"), "y") == P("x*y + y^2"));
}

TEST_CASE("property: gcd of constructed products") {
  Rng rng(88);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int i = 0; i < 25; ++i) {
    const Poly c = testing::randomPoly(rng, vars, 2, 3);
    const Poly a = testing::randomPoly(rng, vars, 2, 3);
    const Poly b = testing::randomPoly(rng, vars, 2, 3);
    if (c.isZero() || a.isZero() || b.isZero()) continue;
    const Poly g = gcd(c * a, c * b);
    CHECK(tryDivide(c * a, g).has_value());
    CHECK(tryDivide(c * b, g).has_value());
    CHECK(tryDivide(g, primitiveNormalized(c)).has_value());
  }
}

TEST_CASE("univariate gcd and roots") {
  const UPoly a = UPoly::fromPoly(P("x^3 - 3*x + 2"));
  const UPoly b = UPoly::fromPoly(P("x^2 - 1"));
  CHECK(primitiveNormalized(gcd(a, b).toPoly("x")) == P("x - 1"));
  auto roots = rationalRoots(P("6*x^3 - 5*x^2 - 2*x + 1"));
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<Rational>{-Q("1/2"), Q("1/3"), 1});
  CHECK(rationalRoots(P("x^2 + 1")).empty());
}

TEST_CASE("squarefree part and decomposition") {
  CHECK(squarefreePart(P("(x-1)^2*(x+2)")) == P("x^2 + x - 2"));
  const auto d = squarefreeDecompose(P("x^3 - 3*x + 2"));
  REQUIRE(d.factors.size() == 2);
  CHECK(d.factors[0] == std::make_pair(P("x + 2"), 1));
  CHECK(d.factors[1] == std::make_pair(P("x - 1"), 2));
  CHECK(d.reconstruct() == P("x^3 - 3*x + 2"));
  const auto s = squarefreeDecompose(P("3*x^2 - 3"));
  REQUIRE(s.factors.size() == 1);
  CHECK(s.factors[0].second == 1);
  CHECK(s.reconstruct() == P("3*x^2 - 3"));
  CHECK(POLAR_ERROR_CODE(squarefreePart(P("0", {"x"}))) == "zero_polynomial");
}

TEST_CASE("root multiplicity and distinct roots") {
  CHECK(rootMultiplicity(P("x^3 - 3*x + 2"), 1) == 2);
  CHECK(rootMultiplicity(P("x^3 - 3*x + 2"), 0) == 0);
  CHECK(rootMultiplicity(P("(x - 1/2)^4"), Q("1/2")) == 4);
  CHECK(countDistinctRoots(P("(x-1)^2*(x+2)")) == 2);
  CHECK(countDistinctRoots(P("x^2 + 1")) == 2);
  CHECK(countDistinctRoots(P("5")) == 0);
  CHECK(POLAR_ERROR_CODE(rootMultiplicity(P("0", {"x"}), 1)) == "zero_polynomial");
  CHECK(POLAR_ERROR_CODE(countDistinctRoots(P("0", {"x"}))) == "zero_polynomial");
}

TEST_CASE("property: squarefree decomposition invariants") {
  Rng rng(99);
  for (int i = 0; i < 40; ++i) {
    Poly p = Poly::constant(rng.rational(9, 4) + 10, {"x"});
    const int k = static_cast<int>(rng.uniform(1, 4));
    for (int j = 0; j < k; ++j) {
      const Poly f = testing::randomPoly(rng, {"x"}, 2, 4);
      if (f.totalDegree() < 1) continue;
      p *= pow(f, static_cast<unsigned>(rng.uniform(1, 3)));
    }
    const auto d = squarefreeDecompose(p);
    CHECK(d.reconstruct() == p);
    int degSum = 0;
    for (std::size_t a = 0; a < d.factors.size(); ++a) {
      CHECK(isSquarefree(d.factors[a].first));
      CHECK(d.factors[a].first.leadingCoefficient() > 0);
      degSum += d.factors[a].first.totalDegree();
      for (std::size_t b = a + 1; b < d.factors.size(); ++b)
        CHECK(gcd(d.factors[a].first, d.factors[b].first).isConstant());
    }
    CHECK(countDistinctRoots(p) == degSum);
    CHECK(squarefreePart(p).totalDegree() == degSum);
  }
}

TEST_CASE("radical and squarefree test in several variables") {
  CHECK(isSquarefree(P("x^2 + y^2 - 1")));
  CHECK(!isSquarefree(P("(x - y)^2*(x + 1)")));
  CHECK(radical(P("(x - y)^2*(x + 1)")) == primitiveNormalized(P("(x - y)*(x + 1)")));
}

}  // TEST_SUITE
