#include <numeric>

#include "doctest.h"
#include "polarlib/counting.hpp"
#include "polarlib/rankcalc.hpp"
#include "support.hpp"

using namespace polar;
using namespace polar::counting;
using testing::P;

namespace {

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

// Every trial keeps the multiplicity ledger, and stable reports agree trial by trial.
void checkLedger(const CountReport& rep) {
  for (const auto& t : rep.trials) {
    CHECK(t.rawDegree == t.count + sum(t.subtracted));
    CHECK(t.rawDegree == t.atInfinity + sum(t.subtracted) + t.residualDegree);
    CHECK(t.residualSquarefree);
    if (rep.stable) {
      CHECK(t.resolved);
      CHECK(t.count == rep.count);
    }
  }
}

bool sameTrials(const CountReport& a, const CountReport& b) {
  if (a.count != b.count || a.stable != b.stable || a.trials.size() != b.trials.size()) return false;
  for (std::size_t i = 0; i < a.trials.size(); ++i) {
    const auto& s = a.trials[i];
    const auto& t = b.trials[i];
    if (s.seed != t.seed || s.attempt != t.attempt || s.point != t.point || s.rawDegree != t.rawDegree ||
        s.atInfinity != t.atInfinity || s.subtracted != t.subtracted || s.count != t.count)
      return false;
  }
  return a.warnings == b.warnings;
}

const SingularPoint kNode{0, 0, 1, 1};
const SingularPoint kCusp{0, 0, 2, 1};

}  // namespace

TEST_SUITE("counting") {

TEST_CASE("common roots") {
  CHECK(countCommonRoots(P("x^2 + y^2 - 1"), P("x - y"), 1) == 2);
  CHECK(countCommonRoots(P("x^2 + y^2 - 1"), P("y - 2"), 2) == 2);
  CHECK(countCommonRoots(P("x^2 + y^2 - 1"), P("x^2 + y^2 - 4"), 3) == 0);
  CHECK(countCommonRoots(P("y - x^2"), P("y - x^3"), 4) == 2);
  CHECK(POLAR_ERROR_CODE(countCommonRoots(P("x*y - x"), P("x*y + x"), 5)) == "positive_dimensional");
}

TEST_CASE("singular points") {
  auto scan = singularPointsCurve(P("y^2 - x^2*(x+1)"));
  REQUIRE(scan.points.size() == 1);
  CHECK(scan.points[0].x == 0);
  CHECK(scan.points[0].y == 0);
  CHECK(scan.unresolved.empty());
  scan = singularPointsCurve(P("y^2 - x^3"));
  REQUIRE(scan.points.size() == 1);
  CHECK(scan.points[0].x == 0);
  CHECK(singularPointsCurve(P("x^2 + y^2 - 1")).points.empty());
  // two nodes at (1, 2) and (-1, 2)
  scan = singularPointsCurve(P("(y - 2)^2 - (x^2 - 1)^2"));
  REQUIRE(scan.points.size() == 2);
  CHECK(scan.points[0].x == -1);
  CHECK(scan.points[1].x == 1);
  CHECK(scan.points[1].y == 2);
  // nodes at x = +-sqrt(2) stay unresolved
  scan = singularPointsCurve(P("y^2 - (x^2 - 2)^2"));
  CHECK(scan.points.empty());
  CHECK(!scan.unresolved.empty());
  CHECK(POLAR_ERROR_CODE(singularPointsCurve(P("(x - y)^2"))) == "not_squarefree");
}

TEST_CASE("ED degree of a generic conic") {
  for (std::uint64_t seed : {1u, 2u}) {
    const auto rep = edDegreeCount(P("x^2 + 2*y^2 - 1"), {}, seed);
    CHECK(rep.count == 4);
    CHECK(rep.stable);
    CHECK(rep.expectedGeneric == 4);
    CHECK(!rep.deviatesFromGeneric);
    checkLedger(rep);
  }
}

TEST_CASE("ED degree of the circle deviates") {
  const auto rep = edDegreeCount(P("x^2 + y^2 - 1"), {}, 9);
  CHECK(rep.count == 2);
  CHECK(rep.stable);
  CHECK(rep.expectedGeneric == 4);
  CHECK(rep.deviatesFromGeneric);
  CHECK(!rep.warnings.empty());
  checkLedger(rep);
}

TEST_CASE("ED degree with singular points") {
  const auto nodal = edDegreeCount(P("y^2 - x^2*(x+1)"), {kNode}, 3);
  CHECK(nodal.count == 7);
  CHECK(nodal.expectedGeneric == 7);
  checkLedger(nodal);
  for (const auto& t : nodal.trials) CHECK(t.subtracted == std::vector<int>{2});
  CHECK(nodal.count == rankcalc::edHypersurfaceIsolated(3, 2, {{1, 1}}));

  const auto cusp = edDegreeCount(P("y^2 - x^3"), {kCusp}, 4);
  CHECK(cusp.count == 6);
  checkLedger(cusp);
  for (const auto& t : cusp.trials) CHECK(t.subtracted == std::vector<int>{3});
  CHECK(cusp.count == rankcalc::edHypersurfaceIsolated(3, 2, {{2, 1}}));

  const auto noMilnor = edDegreeCount(P("y^2 - x^3"), {SingularPoint{0, 0, {}, {}}}, 4);
  CHECK(noMilnor.count == 6);
  CHECK(!noMilnor.expectedGeneric.has_value());
}

TEST_CASE("ED degree input errors") {
  CHECK(POLAR_ERROR_CODE(edDegreeCount(P("y^2 - x^3"), {SingularPoint{1, 1, 2, 1}}, 1)) ==
        "not_singular_point");
  CHECK(POLAR_ERROR_CODE(edDegreeCount(P("(x + y)^2 - 1 + 1"), {}, 1)) == "not_squarefree");
  CHECK(POLAR_ERROR_CODE(edDegreeCount(P("3", {"x", "y"}), {}, 1)) == "constant_curve");
}

TEST_CASE("polar class") {
  const std::array<Rational, 3> pole{2, 3, 1};
  const auto conic = polarClassCount(P("x^2 + 2*y^2 - 1"), pole, 1);
  CHECK(conic.count == 2);
  CHECK(conic.expectedGeneric == 2);
  checkLedger(conic);
  const auto nodal = polarClassCount(P("y^2 - x^2*(x+1)"), pole, 2);
  CHECK(nodal.count == 4);
  checkLedger(nodal);
  const auto cusp = polarClassCount(P("y^2 - x^3"), pole, 3);
  CHECK(cusp.count == 3);
  checkLedger(cusp);
  CHECK(conic.count == rankcalc::pluckerRanks({2, 0, 0}).mu1);
  CHECK(nodal.count == rankcalc::pluckerRanks({3, 1, 0}).mu1);
  CHECK(cusp.count == rankcalc::pluckerRanks({3, 0, 1}).mu1);
}

TEST_CASE("property: smooth corpus matches d^2 and d(d-1)") {
  const std::vector<std::string> corpus{"x^2 + 2*y^2 - 1", "x^2 - 3*x*y + 5*y^2 + x - 2",
                                        "x^3 + 2*y^3 + 3*x - y + 1", "x^4 + y^4 + x*y - 1"};
  std::uint64_t seed = 40;
  for (const auto& text : corpus) {
    CAPTURE(text);
    const Poly F = P(text);
    const int d = F.totalDegree();
    REQUIRE(singularPointsCurve(F).points.empty());
    const auto ed = edDegreeCount(F, {}, ++seed);
    CHECK(ed.count == d * d);
    checkLedger(ed);
    const auto pc = polarClassCount(F, {1, 1, 1}, ++seed);
    CHECK(pc.count == d * (d - 1));
    checkLedger(pc);
  }
}

TEST_CASE("property: repeatable and thread independent") {
  const Poly F = P("y^2 - x^2*(x+1)");
  CountConfig serial;
  serial.parallel = false;
  serial.trials = 3;
  CountConfig parallel = serial;
  parallel.parallel = true;
  const auto a = edDegreeCount(F, {kNode}, 123, serial);
  const auto b = edDegreeCount(F, {kNode}, 123, serial);
  const auto c = edDegreeCount(F, {kNode}, 123, parallel);
  CHECK(sameTrials(a, b));
  CHECK(sameTrials(a, c));
  const auto d = edDegreeCount(F, {kNode}, 124, serial);
  CHECK(d.count == a.count);
  CHECK(d.trials[0].point != a.trials[0].point);
}

TEST_CASE("unstable reports") {
  // Irrational nodes are never guessed: every trial stays unresolved.
  CountConfig cfg;
  cfg.maxRetries = 2;
  cfg.throwOnUnstable = false;
  const auto rep = polarClassCount(P("y^2 - (x^2 - 2)^2"), {2, 3, 1}, 1, cfg);
  CHECK(!rep.stable);
  CHECK(!rep.warnings.empty());
  cfg.throwOnUnstable = true;
  CHECK(POLAR_ERROR_CODE(polarClassCount(P("y^2 - (x^2 - 2)^2"), {2, 3, 1}, 1, cfg)) == "unstable_count");
}

}  // TEST_SUITE
