#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "polarlib/cli.hpp"
#include "polarlib/counting.hpp"
#include "polarlib/focal.hpp"
#include "polarlib/rankcalc.hpp"
#include "support.hpp"

using namespace polar;
using namespace polar::cli;
using nlohmann::json;

namespace {

CommandRequest request(Command c, std::map<std::string, std::vector<std::string>> options, std::uint64_t seed = 0) {
  CommandRequest r;
  r.command = c;
  r.options = std::move(options);
  r.format = OutputFormat::Json;
  r.seed = seed;
  return r;
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome runJson(const CommandRequest& r) {
  std::ostringstream out, err;
  const int code = run(r, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("command names") {
  CHECK(commandNames().size() == 7);
  for (const auto& name : commandNames()) {
    const auto c = parseCommand(name);
    REQUIRE(c.has_value());
    CHECK(commandName(*c) == name);
  }
  CHECK(!parseCommand("bogus").has_value());
}

TEST_CASE("option parsers") {
  CHECK(parseIntegerList("3, 6,12", "ranks") == std::vector<std::int64_t>{3, 6, 12});
  CHECK(parseInteger("-4", "n") == -4);
  CHECK(POLAR_ERROR_CODE(parseInteger("4x", "n")) != "");
  CHECK(POLAR_ERROR_CODE(parseIntegerList("1,,2", "ranks")) != "");
  CHECK(parseSeed("18446744073709551615") == 18446744073709551615ull);
  CHECK(POLAR_ERROR_CODE(parseSeed("-1")) != "");
}

TEST_CASE("seed resolution") {
  ::unsetenv("POLARLIB_SEED");
  CHECK(resolveSeed(std::nullopt) == 0);
  ::setenv("POLARLIB_SEED", "42", 1);
  CHECK(resolveSeed(std::nullopt) == 42);
  CHECK(resolveSeed(std::string("7")) == 7);
  ::unsetenv("POLARLIB_SEED");
}

TEST_CASE("ranks") {
  const json j = execute(request(Command::Ranks, {{"smooth-hypersurface", {"3,3"}}}));
  CHECK(j["command"] == "ranks");
  CHECK(j["results"]["ranks"] == json::array({3, 6, 12}));
  CHECK(j["results"]["edDegree"] == 21);
  const json d = execute(request(Command::Ranks, {{"ranks", {"3,6,12"}}, {"n", {"3"}}, {"dual", {"true"}}}));
  CHECK(d.dump().find("[12,6,3]") != std::string::npos);
}

TEST_CASE("plucker") {
  const json j = execute(request(Command::Plucker, {{"data", {"3,1,0"}}}));
  CHECK(j["results"]["mu1"] == 4);
  CHECK(j["results"]["iota"] == 3);
  CHECK(j["results"]["genus"] == 0);
  CHECK(j["results"]["focalDegree"] == 12);
  CHECK(j["results"]["dual"]["d"] == 4);
  CHECK(j["results"]["dual"]["kappa"] == 3);
}

TEST_CASE("ed-degree by counting") {
  const auto r = request(Command::EdDegree, {{"count", {"true"}}, {"curve", {"y^2-x^3"}}, {"singular", {"0,0,2,1"}}}, 7);
  const json j = execute(r);
  CHECK(j["results"]["count"] == 6);
  CHECK(j["results"]["stable"] == true);
  CHECK(j["seed"] == 7);
  // no arithmetic in the front end: the same call through the library
  CHECK(j["results"]["count"] == counting::edDegreeCount(testing::P("y^2-x^3"), {{0, 0, 2, 1}}, 7).count);
  CHECK(runJson(r).out == runJson(r).out);
}

TEST_CASE("ed-degree without Milnor data lists the singular points") {
  const auto o = runJson(request(Command::EdDegree, {{"count", {"true"}}, {"curve", {"y^2-x^3"}}}));
  CHECK(o.code == 2);
  const json j = json::parse(o.out);
  CHECK(j["error"]["code"] == "milnor_required");
  CHECK(j["error"]["message"].get<std::string>().find("(0,0)") != std::string::npos);
}

TEST_CASE("ed-degree formulas") {
  json j = execute(request(Command::EdDegree, {{"formula", {"ranks"}}, {"ranks", {"3,6,12"}}, {"n", {"3"}}}));
  CHECK(j["results"]["edDegree"] == 21);
  j = execute(request(Command::EdDegree,
                      {{"formula", {"hypersurface"}}, {"degree", {"4"}}, {"n", {"3"}}, {"singularity", {"1,1"}}}));
  CHECK(j["results"]["edDegree"] == 50);
  j = execute(request(Command::EdDegree, {{"formula", {"surface-ordinary"}}, {"surface", {"4,3,1,6"}}}));
  CHECK(j["results"]["edDegree"] == 7);
}

TEST_CASE("chern-mather both directions") {
  json j = execute(request(Command::ChernMather, {{"ranks", {"3,6"}}, {"n", {"2"}}}));
  CHECK(j["results"]["chernMather"] == json::array({3, 0}));
  j = execute(request(Command::ChernMather, {{"chern", {"3,0"}}, {"n", {"2"}}}));
  CHECK(j["results"]["ranks"] == json::array({3, 6}));
}

TEST_CASE("focal-degree modes") {
  auto focal = [](const std::string& mode, const std::string& value) {
    return execute(request(Command::FocalDegree, {{mode, {value}}}))["results"]["ramificationDegree"];
  };
  CHECK(focal("salmon", "3,1,0") == 12);
  CHECK(focal("plane-curve", "3,4,0,3") == 12);
  CHECK(focal("smooth-curve", "3,0") == 12);
  CHECK(focal("smooth-surface", "4") == 168);
  CHECK(focal("hypersurface-ranks", "4,12,36") == 168);
  CHECK(focal("surface-chern", "4,0,0,24") == 168);
}

TEST_CASE("evolute") {
  const json j = execute(request(Command::Evolute, {{"curve", {"x^2/4 + y^2 - 1"}}}));
  CHECK(j["results"]["degree"] == 6);
  CHECK(j["results"]["genericityFlag"] == true);
  const json c = execute(request(Command::Evolute, {{"curve", {"x^2 + y^2 - 1"}}}));
  CHECK(c["results"]["degenerate"] == true);
  CHECK(c["results"]["center"] == json::array({"0", "0"}));
}

TEST_CASE("polar-matrix") {
  json j = execute(request(Command::PolarMatrix,
                           {{"system", {"x^2+y^2-1"}}, {"quadric", {"euclidean:3,0"}}, {"dim", {"1"}}}));
  CHECK(j["results"]["minors"] == json::array({"-6*y"}));
  j = execute(request(Command::PolarMatrix,
                      {{"system", {"x1 - x2"}}, {"quadric", {"general:x0^2 + x1*x2"}}, {"dim", {"1"}}}));
  CHECK(j["results"]["rows"][0] == json::array({"x2", "x1"}));
  j = execute(request(Command::PolarMatrix,
                      {{"system", {"x^2+y^2+z^2-1;x+y+z"}}, {"quadric", {"euclidean:1,2,3"}}, {"dim", {"1"}}}));
  CHECK(j["results"]["minorSize"] == 3);
  CHECK(j["results"]["minors"].size() == 1);
}

TEST_CASE("exit codes") {
  CHECK(runJson(request(Command::Ranks, {{"smooth-hypersurface", {"3,3"}}})).code == 0);
  CHECK(runJson(request(Command::Ranks, {{"ranks", {"1,2"}}, {"n", {"1"}}})).code == 2);
  CHECK(runJson(request(Command::Plucker, {{"data", {"3,x,0"}}})).code == 2);
  CHECK(runJson(request(Command::Evolute, {{"curve", {"x^2 + y^2 - 1 +"}}})).code == 2);
  CHECK(runJson(request(Command::FocalDegree, {{"plane-curve", {"3,6,0,8"}}})).code == 2);
  CHECK(runJson(request(Command::Ranks, {})).code == 2);
  // (0, 2) lies on the curve but is smooth
  const auto smooth = runJson(request(Command::EdDegree, {{"count", {"true"}},
                                                          {"curve", {"y^2 - (x^2 - 2)^2"}},
                                                          {"singular", {"0,2,1,1"}}}));
  CHECK(smooth.code == 2);
  CHECK(json::parse(smooth.out)["error"]["code"] == "not_singular_point");
}

TEST_CASE("genericity failures exit with 3") {
  // the nodes at x = +-sqrt(2) are not passed, so no trial balances
  const auto o = runJson(request(Command::EdDegree, {{"count", {"true"}},
                                                     {"curve", {"y^2 - x^2*(x^2 - 2)^2"}},
                                                     {"singular", {"0,0,1,1"}},
                                                     {"max-retries", {"1"}}}));
  CHECK(o.code == 3);
  const json j = json::parse(o.out);
  CHECK(j["error"]["kind"] == "genericity");
  CHECK(j["error"]["code"] == "unstable_count");
}

TEST_CASE("text rendering") {
  CommandRequest r = request(Command::Plucker, {{"data", {"3,1,0"}}});
  r.format = OutputFormat::Text;
  std::ostringstream out, err;
  CHECK(run(r, out, err) == 0);
  CHECK(out.str().find("mu1") != std::string::npos);
  CHECK(out.str().find('{') == std::string::npos);
}

}  // TEST_SUITE
