#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polarlib/cli.hpp"
#include "polarlib/error.hpp"

namespace {

enum class Kind { Value, Repeat, Flag, Positional };

struct OptSpec {
  std::string name;
  Kind kind;
  std::string help;
};

struct SubSpec {
  std::string name;
  std::string help;
  std::vector<OptSpec> options;
};

const std::vector<SubSpec>& specs() {
  static const std::vector<SubSpec> s{
      {"ranks",
       "Ranks (polar degrees) of a smooth hypersurface or a given rank vector",
       {{"smooth-hypersurface", Kind::Value, "d,n"},
        {"ranks", Kind::Value, "mu0,...,mum"},
        {"n", Kind::Value, "ambient dimension for --ranks (default m+1)"},
        {"dual", Kind::Flag, "also print the reversed (dual) rank vector"}}},
      {"ed-degree",
       "Euclidean distance degree by formula or by exact counting",
       {{"count", Kind::Flag, "count critical points of a plane curve"},
        {"curve", Kind::Value, "plane curve F(x,y) for --count"},
        {"singular", Kind::Repeat, "\"x,y,mu,mu_sectional\" singular point (repeatable)"},
        {"trials", Kind::Value, "number of independent data points (default 2)"},
        {"max-retries", Kind::Value, "attempts per trial (default 5)"},
        {"formula", Kind::Value, "ranks | hypersurface | surface-ordinary"},
        {"ranks", Kind::Value, "rank vector for --formula ranks"},
        {"n", Kind::Value, "ambient dimension"},
        {"degree", Kind::Value, "hypersurface degree for --formula hypersurface"},
        {"singularity", Kind::Repeat, "\"mu,mu_sectional\" isolated singularity (repeatable)"},
        {"surface", Kind::Value, "d,eps,t,nu2 for --formula surface-ordinary"}}},
      {"chern-mather",
       "Transform between ranks and Chern-Mather degrees",
       {{"ranks", Kind::Value, "mu0,...,mum"},
        {"chern", Kind::Value, "c0,...,cm"},
        {"n", Kind::Value, "ambient dimension (default m+1)"}}},
      {"plucker", "Plücker invariants, Salmon focal degree and dual data of a plane curve",
       {{"data", Kind::Positional, "d,delta,kappa"}}},
      {"focal-degree",
       "Ramification (focal locus) degree from closed formulas",
       {{"plane-curve", Kind::Value, "mu0,mu1,kappa,iota"},
        {"salmon", Kind::Value, "d,delta,kappa"},
        {"smooth-curve", Kind::Value, "d,g"},
        {"smooth-surface", Kind::Value, "d (surface in P^3)"},
        {"surface-chern", Kind::Value, "d,c1h,c1sq,c2"},
        {"hypersurface-ranks", Kind::Value, "mu0,...,mu(n-1)"}}},
      {"evolute",
       "Evolute eliminant of a low-degree plane curve",
       {{"curve", Kind::Value, "plane curve F(x,y)"}, {"max-degree", Kind::Value, "degree cap (default 3)"}}},
      {"polar-matrix",
       "Reciprocal polar / ED matrix and its minors",
       {{"system", Kind::Value, "\"F1;F2;...\""},
        {"quadric", Kind::Value, "euclidean:a1,...,an | general:q"},
        {"dim", Kind::Value, "dimension m of the variety"},
        {"vars", Kind::Value, "comma-separated variable order"},
        {"homogenizing-var", Kind::Value, "x0 of a general quadric (default x0)"}}},
  };
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polarcalc: polar degrees, ED degrees and focal loci with exact arithmetic"};
  app.require_subcommand(1);
  bool json = false;
  std::optional<std::string> seed;
  app.add_flag("--json", json, "emit a JSON report");
  app.add_option("--seed", seed, "random seed (default: $POLARLIB_SEED or 0)");

  std::map<std::string, std::map<std::string, std::vector<std::string>>> values;
  std::map<std::string, std::map<std::string, bool>> flags;
  std::map<std::string, CLI::App*> subs;
  for (const auto& spec : specs()) {
    auto* sub = app.add_subcommand(spec.name, spec.help);
    sub->fallthrough();
    subs[spec.name] = sub;
    for (const auto& o : spec.options) {
      auto& store = values[spec.name][o.name];
      switch (o.kind) {
        case Kind::Value:
          sub->add_option("--" + o.name, store, o.help)->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
          break;
        case Kind::Repeat:
          sub->add_option("--" + o.name, store, o.help)->expected(1)->take_all();
          break;
        case Kind::Positional:
          sub->add_option(o.name, store, o.help)->expected(1)->required();
          break;
        case Kind::Flag:
          sub->add_flag("--" + o.name, flags[spec.name][o.name], o.help);
          break;
      }
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  polar::cli::CommandRequest req;
  try {
    req.seed = polar::cli::resolveSeed(seed);
  } catch (const polar::PolarError& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return 2;
  }
  req.format = json ? polar::cli::OutputFormat::Json : polar::cli::OutputFormat::Text;
  for (const auto& [name, sub] : subs) {
    if (!sub->parsed()) continue;
    req.command = *polar::cli::parseCommand(name);
    for (const auto& [opt, vals] : values[name])
      if (!vals.empty()) req.options[opt] = vals;
    for (const auto& [opt, on] : flags[name])
      if (on) req.options[opt] = {"true"};
  }
  return polar::cli::run(req, std::cout, std::cerr);
}
