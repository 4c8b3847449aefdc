#include "doctest.h"
#include "polarlib/linear.hpp"
#include "support.hpp"

using namespace polar;
using testing::P;
using testing::Q;

TEST_SUITE("polycore") {

TEST_CASE("rationals stay canonical") {
  const Rational a = makeRational(6, -4);
  CHECK(a.get_num() == -3);
  CHECK(a.get_den() == 2);
  CHECK(parseRational("-10/4") == a * Rational(5, 3));
  CHECK(POLAR_ERROR_CODE(makeRational(1, 0)) == "zero_denominator");
  CHECK(POLAR_ERROR_CODE(parseRational("1/x")) == "bad_rational");
}

TEST_CASE("parse") {
  const Poly c = P("x^2 + 2*y^2 - 1");
  CHECK(c.variables() == std::vector<std::string>{"x", "y"});
  CHECK(c.size() == 3);
  CHECK(c.totalDegree() == 2);
  CHECK(P("y^2 - x^2*(x+1)") == P("y^2 - x^3 - x^2"));
  const Poly lin = P("3/2*x", {"x", "y"});
  CHECK(lin.variables().size() == 2);
  CHECK(lin.degreeIn("y") == 0);
  CHECK(lin.leadingCoefficient() == Q("3/2"));
  CHECK(P(" ( x - y ) ^ 3 ") == P("x^3 - 3*x^2*y + 3*x*y^2 - y^3"));
  CHECK(P("-(-x)") == P("x"));
  CHECK(P("x/4 - 1/2") == P("1/4*x - 1/2"));
  CHECK(POLAR_ERROR_CODE(P("x +")) == "syntax_error");
  CHECK(POLAR_ERROR_CODE(P("x*(y")) == "syntax_error");
  CHECK(POLAR_ERROR_CODE(P("x/y")) != "");
  CHECK(POLAR_ERROR_CODE(P("z", {"x", "y"})) != "");
}

TEST_CASE("canonical text round trip") {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const Poly p = testing::randomPoly(rng, {"x", "y", "z"}, 4);
    CHECK(parsePolynomial(p.toString(), p.variables()) == p);
  }
  CHECK(P("0").toString() == "0");
  CHECK(P("-x + 3/2*x^2*y").toString() == "3/2*x^2*y - x");
}

TEST_CASE("zero polynomial") {
  const Poly z = P("x - x");
  CHECK(z.isZero());
  CHECK(z.totalDegree() == kZeroDegree);
  CHECK(evaluate(z, {{"x", 7}}) == 0);
}

TEST_CASE("differentiate") {
  CHECK(differentiate(P("x^2*y - 3*x + 1/2"), "x") == P("2*x*y - 3", {"x", "y"}));
  CHECK(differentiate(P("x^2 + y^2 - 1"), "y") == P("2*y", {"x", "y"}));
  CHECK(differentiate(P("5", {"x"}), "x").isZero());
  CHECK(POLAR_ERROR_CODE(differentiate(P("x"), "w")) == "unknown_variable");
}

TEST_CASE("evaluate") {
  CHECK(evaluate(P("x^2 + y^2 - 1"), {{"x", Q("3/5")}, {"y", Q("4/5")}}) == 0);
  CHECK(evaluate(P("x^2*y"), {{"x", 2}, {"y", 3}}) == 12);
  CHECK(POLAR_ERROR_CODE(evaluate(P("x*y"), {{"x", 1}})) == "unbound_variable");
}

TEST_CASE("homogenize and dehomogenize") {
  const Poly h = homogenize(P("x^2 + y - 1"), "z");
  CHECK(h == P("x^2 + y*z - z^2", {"x", "y", "z"}));
  CHECK(h.isHomogeneous());
  CHECK(dehomogenize(h, "z") == P("x^2 + y - 1"));
  CHECK(homogenize(P("5"), "z") == Poly::constant(5, {"z"}));
  CHECK(POLAR_ERROR_CODE(dehomogenize(P("x^2 + y"), "y")) == "not_homogeneous");
}

TEST_CASE("linear change") {
  const Poly x = P("x", {"x", "y"});
  const LinearChange shear({{1, 2, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(applyLinearChange(x, shear) == P("x + 2*y"));
  const Poly circle = P("x^2 + y^2 - 1");
  CHECK(applyLinearChange(circle, LinearChange::identity(2)) == circle);
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    RationalMatrix m(3, std::vector<Rational>(3, 0));
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 3; ++c) m[r][c] = rng.rational(9, 4);
    m[2][2] = 1;
    if (determinant(m) == 0) continue;
    CHECK(applyLinearChange(circle, LinearChange(m)).totalDegree() == 2);
  }
  CHECK(POLAR_ERROR_CODE(LinearChange({{1, 2, 0}, {2, 4, 0}, {0, 0, 1}})) == "singular_change");
  CHECK(POLAR_ERROR_CODE(applyLinearChange(P("x*y*z"), shear)) == "dimension_mismatch");
}

TEST_CASE("rational matrix inverse") {
  const RationalMatrix m{{2, 1}, {7, 4}};
  CHECK(determinant(m) == 1);
  const auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK((*inv)[0][0] == 4);
  CHECK((*inv)[1][0] == -7);
  CHECK(!inverse({{1, 2}, {2, 4}}).has_value());
}

TEST_CASE("division") {
  const Poly a = P("x^3 - y^3");
  CHECK(tryDivide(a, P("x - y")) == P("x^2 + x*y + y^2"));
  CHECK(!tryDivide(a, P("x + y")).has_value());
  CHECK(POLAR_ERROR_CODE(divideExact(a, P("x + y"))) == "inexact_division");
  CHECK(primitiveNormalized(P("-2/3*x + 4/9")) == P("3*x - 2"));
}

TEST_CASE("property: ring axioms") {
  Rng rng(101);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int i = 0; i < 40; ++i) {
    const Poly a = testing::randomPoly(rng, vars, 4);
    const Poly b = testing::randomPoly(rng, vars, 4);
    const Poly c = testing::randomPoly(rng, vars, 3);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK((a - a).isZero());
  }
}

TEST_CASE("property: derivative linear and Leibniz") {
  Rng rng(202);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int i = 0; i < 40; ++i) {
    const Poly a = testing::randomPoly(rng, vars, 4);
    const Poly b = testing::randomPoly(rng, vars, 4);
    const Rational s = rng.rational(9, 5);
    for (const auto& v : vars) {
      CHECK(differentiate(a + s * b, v) == differentiate(a, v) + s * differentiate(b, v));
      CHECK(differentiate(a * b, v) == differentiate(a, v) * b + a * differentiate(b, v));
    }
  }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
  Rng rng(303);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int i = 0; i < 40; ++i) {
    const Poly a = testing::randomPoly(rng, vars, 4);
    const Poly b = testing::randomPoly(rng, vars, 4);
    const auto pt = testing::randomPoint(rng, vars);
    CHECK(evaluate(a * b, pt) == evaluate(a, pt) * evaluate(b, pt));
    CHECK(evaluate(a + b, pt) == evaluate(a, pt) + evaluate(b, pt));
  }
}

TEST_CASE("property: homogenize round trip") {
  Rng rng(404);
  for (int i = 0; i < 40; ++i) {
    const Poly a = testing::randomPoly(rng, {"x", "y"}, 5);
    const Poly h = homogenize(a, "w");
    CHECK(h.isHomogeneous());
    CHECK(dehomogenize(h, "w") == a);
  }
}

}  // TEST_SUITE
