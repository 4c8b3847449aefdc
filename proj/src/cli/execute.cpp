#include <ostream>
#include <sstream>

#include "polarlib/cli.hpp"
#include "polarlib/counting.hpp"
#include "polarlib/critsys.hpp"
#include "polarlib/error.hpp"
#include "polarlib/focal.hpp"
#include "polarlib/poly.hpp"
#include "polarlib/rankcalc.hpp"

namespace polar::cli {

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

json ranksJson(const rankcalc::RankVector& r) { return json(r.ranks); }

rankcalc::RankVector rankOption(const CommandRequest& req, const std::string& key) {
  auto ranks = parseIntegerList(req.get(key), key);
  const int n = req.has("n") ? static_cast<int>(parseInteger(req.get("n"), "n")) : static_cast<int>(ranks.size());
  return rankcalc::RankVector::make(n, std::move(ranks));
}

std::vector<std::int64_t> fixedList(const CommandRequest& req, const std::string& key, std::size_t count,
                                    const std::string& shape) {
  auto v = parseIntegerList(req.get(key), key);
  if (v.size() != count) throwInput("bad_option", "--" + key + " expects " + shape);
  return v;
}

// ------------------------------------------------------------------ ranks

json runRanks(const CommandRequest& req, json& warnings) {
  (void)warnings;
  rankcalc::RankVector r;
  if (req.has("smooth-hypersurface")) {
    const auto v = fixedList(req, "smooth-hypersurface", 2, "d,n");
    r = rankcalc::ranksSmoothHypersurface(v[0], static_cast<int>(v[1]));
  } else if (req.has("ranks")) {
    r = rankOption(req, "ranks");
  } else {
    throwInput("missing_option", "ranks needs --smooth-hypersurface d,n or --ranks list");
  }
  json res{{"n", r.n}, {"m", r.m}, {"ranks", ranksJson(r)}, {"edDegree", rankcalc::edFromRanks(r)}};
  if (req.has("dual")) {
    const auto d = rankcalc::dualRanks(r);
    res["dualRanks"] = ranksJson(d);
    res["dualEdDegree"] = rankcalc::edFromRanks(d);
  }
  return res;
}

// -------------------------------------------------------------- ed-degree

counting::SingularPoint parseSingular(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2 && parts.size() != 4)
    throwInput("bad_singular", "--singular expects \"x,y\" or \"x,y,mu,mu_sectional\", got '" + text + "'");
  counting::SingularPoint p;
  p.x = parseRational(parts[0]);
  p.y = parseRational(parts[1]);
  if (parts.size() == 4) {
    p.milnor = static_cast<int>(parseInteger(parts[2], "milnor number"));
    p.sectionalMilnor = static_cast<int>(parseInteger(parts[3], "sectional milnor number"));
    if (*p.milnor < 1 || *p.sectionalMilnor < 1) throwInput("invalid_milnor", "Milnor numbers must be positive");
  }
  return p;
}

json trialJson(const counting::CountTrial& t) {
  json point = json::array();
  for (const auto& q : t.point) point.push_back(toString(q));
  return json{{"index", t.index},
              {"attempt", t.attempt},
              {"seed", t.seed},
              {"point", point},
              {"rawDegree", t.rawDegree},
              {"atInfinity", t.atInfinity},
              {"subtracted", t.subtracted},
              {"residualDegree", t.residualDegree},
              {"residualSquarefree", t.residualSquarefree},
              {"resolved", t.resolved},
              {"count", t.count}};
}

json reportJson(const counting::CountReport& rep, json& warnings) {
  json trials = json::array();
  for (const auto& t : rep.trials) trials.push_back(trialJson(t));
  for (const auto& w : rep.warnings) warnings.push_back(w);
  return json{{"count", rep.count},
              {"stable", rep.stable},
              {"expectedGeneric", rep.expectedGeneric ? json(*rep.expectedGeneric) : json(nullptr)},
              {"deviatesFromGeneric", rep.deviatesFromGeneric},
              {"atInfinity", rep.atInfinity},
              {"trials", trials}};
}

counting::CountConfig countConfig(const CommandRequest& req) {
  counting::CountConfig cfg;
  if (req.has("trials")) cfg.trials = static_cast<int>(parseInteger(req.get("trials"), "trials"));
  if (req.has("max-retries")) cfg.maxRetries = static_cast<int>(parseInteger(req.get("max-retries"), "max-retries"));
  if (cfg.trials < 1 || cfg.maxRetries < 1) throwInput("bad_option", "--trials and --max-retries must be positive");
  return cfg;
}

json runEdCount(const CommandRequest& req, json& warnings) {
  const Poly F = parsePolynomial(req.get("curve"));
  std::vector<counting::SingularPoint> sing;
  for (const auto& s : req.all("singular")) sing.push_back(parseSingular(s));
  if (sing.empty()) {
    const auto scan = counting::singularPointsCurve(F);
    if (!scan.points.empty() || !scan.unresolved.empty()) {
      std::string msg = "curve is singular; pass --singular \"x,y,mu,mu_sectional\" for each point. Detected:";
      for (const auto& p : scan.points) msg += " (" + toString(p.x) + "," + toString(p.y) + ")";
      for (const auto& u : scan.unresolved) msg += " [irrational, roots of " + u.toString() + "]";
      throwInput("milnor_required", msg);
    }
  }
  const auto rep = counting::edDegreeCount(F, sing, req.seed, countConfig(req));
  json res = reportJson(rep, warnings);
  res["curve"] = F.toString();
  const int d = F.totalDegree();
  bool milnorKnown = d >= 2;
  std::vector<rankcalc::SingularityDatum> data;
  for (const auto& p : sing) {
    if (!p.milnor) {
      milnorKnown = false;
      break;
    }
    data.push_back({*p.milnor, *p.sectionalMilnor});
  }
  if (milnorKnown) {
    const auto formula = rankcalc::edHypersurfaceIsolated(d, 2, data);
    res["formula"] = formula;
    res["formulaAgrees"] = formula == rep.count;
    if (formula != rep.count)
      warnings.push_back("counted value differs from the isolated-singularity formula value " +
                         std::to_string(formula));
  }
  return res;
}

json runEdFormula(const CommandRequest& req) {
  const std::string mode = req.get("formula");
  if (mode == "ranks") {
    const auto r = rankOption(req, "ranks");
    return json{{"formula", mode}, {"ranks", ranksJson(r)}, {"edDegree", rankcalc::edFromRanks(r)}};
  }
  if (mode == "hypersurface") {
    const auto d = parseInteger(req.get("degree"), "degree");
    const int n = static_cast<int>(parseInteger(req.get("n"), "n"));
    std::vector<rankcalc::SingularityDatum> sing;
    for (const auto& s : req.all("singularity")) {
      const auto v = parseIntegerList(s, "singularity");
      if (v.size() != 2) throwInput("bad_option", "--singularity expects mu,mu_sectional");
      sing.push_back({v[0], v[1]});
    }
    const auto ranks = rankcalc::ranksSmoothHypersurface(d, n);
    const auto ed = sing.empty() ? rankcalc::edFromRanks(ranks) : rankcalc::edHypersurfaceIsolated(d, n, sing);
    return json{{"formula", mode}, {"smoothRanks", ranksJson(ranks)}, {"edDegree", ed}};
  }
  if (mode == "surface-ordinary") {
    const auto v = fixedList(req, "surface", 4, "d,eps,t,nu2");
    return json{{"formula", mode}, {"edDegree", rankcalc::edSurfaceOrdinary({v[0], v[1], v[2], v[3]})}};
  }
  throwInput("bad_option", "unknown --formula mode '" + mode + "' (ranks, hypersurface, surface-ordinary)");
}

json runEdDegree(const CommandRequest& req, json& warnings) {
  if (req.has("count")) return runEdCount(req, warnings);
  if (req.has("formula")) return runEdFormula(req);
  throwInput("missing_option", "ed-degree needs --count or --formula MODE");
}

// ----------------------------------------------------------- chern-mather

json runChernMather(const CommandRequest& req) {
  if (req.has("ranks")) {
    const auto r = rankOption(req, "ranks");
    return json{{"ranks", ranksJson(r)}, {"chernMather", rankcalc::chernMatherFromRanks(r).c}};
  }
  if (req.has("chern")) {
    const auto c = rankcalc::ChernMatherVector::make(parseIntegerList(req.get("chern"), "chern"));
    const int n = req.has("n") ? static_cast<int>(parseInteger(req.get("n"), "n")) : c.m + 1;
    return json{{"chernMather", c.c}, {"ranks", ranksJson(rankcalc::ranksFromChernMather(c, n))}};
  }
  throwInput("missing_option", "chern-mather needs --ranks list or --chern list");
}

// ---------------------------------------------------------------- plucker

json runPlucker(const CommandRequest& req) {
  const auto v = fixedList(req, "data", 3, "d,delta,kappa");
  const rankcalc::PluckerData p{v[0], v[1], v[2]};
  const auto inv = rankcalc::pluckerRanks(p);
  const auto dual = rankcalc::dualPlucker(p);
  return json{{"mu1", inv.mu1},
              {"iota", inv.iota},
              {"genus", inv.genus},
              {"focalDegree", focal::focalSalmon(p)},
              {"dual", json{{"d", dual.d}, {"delta", dual.delta}, {"kappa", dual.kappa}, {"iota", p.kappa}}}};
}

// ----------------------------------------------------------- focal-degree

json runFocal(const CommandRequest& req) {
  std::vector<std::string> modes;
  for (const char* m : {"plane-curve", "salmon", "smooth-curve", "smooth-surface", "surface-chern", "hypersurface-ranks"})
    if (req.has(m)) modes.emplace_back(m);
  if (modes.size() != 1)
    throwInput("bad_option", "focal-degree needs exactly one of --plane-curve, --salmon, --smooth-curve, "
                             "--smooth-surface, --surface-chern, --hypersurface-ranks");
  const std::string& mode = modes.front();
  std::int64_t value = 0;
  std::string caveat;
  if (mode == "plane-curve") {
    const auto v = fixedList(req, mode, 4, "mu0,mu1,kappa,iota");
    value = focal::focalPlaneCurve(v[0], v[1], v[2], v[3]);
    caveat = "equals the evolute degree when the curve and its dual maps are birational";
  } else if (mode == "salmon") {
    const auto v = fixedList(req, mode, 3, "d,delta,kappa");
    value = focal::focalSalmon({v[0], v[1], v[2]});
    caveat = "equals the evolute degree when the curve and its dual maps are birational";
  } else if (mode == "smooth-curve") {
    const auto v = fixedList(req, mode, 2, "d,g");
    value = focal::focalSmoothCurve(v[0], v[1]);
    caveat = "focal locus degree only when the ramification map is birational onto its image";
  } else if (mode == "smooth-surface") {
    value = focal::focalSmoothSurface(focal::SmoothSurfaceChernData::surfaceInP3(parseInteger(req.get(mode), mode)));
    caveat = "focal locus degree only when the ramification map is birational onto its image";
  } else if (mode == "surface-chern") {
    const auto v = fixedList(req, mode, 4, "d,c1h,c1sq,c2");
    value = focal::focalSmoothSurface({v[0], v[1], v[2], v[3]});
    caveat = "focal locus degree only when the ramification map is birational onto its image";
  } else {
    auto ranks = parseIntegerList(req.get(mode), mode);
    const int n = static_cast<int>(ranks.size());
    value = focal::focalHypersurfaceRanks(rankcalc::RankVector::make(n, std::move(ranks)));
    caveat = "focal locus degree for a general hypersurface";
  }
  return json{{"mode", mode}, {"ramificationDegree", value}, {"birationalityCaveat", caveat}};
}

// ---------------------------------------------------------------- evolute

json pointJson(const std::pair<Rational, Rational>& p) {
  return json::array({toString(p.first), toString(p.second)});
}

json runEvolute(const CommandRequest& req) {
  const Poly F = parsePolynomial(req.get("curve"));
  focal::EvoluteConfig cfg;
  cfg.seed = req.seed;
  if (req.has("max-degree")) cfg.maxDegree = static_cast<int>(parseInteger(req.get("max-degree"), "max-degree"));
  const auto r = focal::evoluteEliminant(F, cfg);
  json removed = json::array();
  for (const auto& p : r.extraneousFactorsRemoved) removed.push_back(p.toString());
  json samples = json::array();
  for (std::size_t i = 0; i < r.samplePoints.size(); ++i)
    samples.push_back(json{{"point", pointJson(r.samplePoints[i])}, {"center", pointJson(r.sampleCenters[i])}});
  json res{{"curve", F.toString()},
           {"eliminant", r.degenerate ? json(nullptr) : json(r.eliminant.toString())},
           {"degree", r.degree},
           {"degenerate", r.degenerate},
           {"genericityFlag", r.genericityFlag},
           {"extraneousFactorsRemoved", removed},
           {"samples", samples}};
  res["center"] = r.center ? pointJson(*r.center) : json(nullptr);
  return res;
}

// ----------------------------------------------------------- polar-matrix

json runPolarMatrix(const CommandRequest& req, json& warnings) {
  std::optional<std::vector<std::string>> vars;
  if (req.has("vars")) vars = split(req.get("vars"), ',');
  std::vector<Poly> eqs;
  for (const auto& s : split(req.get("system"), ';'))
    if (s.find_first_not_of(" \t") != std::string::npos) eqs.push_back(parsePolynomial(s, vars));
  const int dim = static_cast<int>(parseInteger(req.get("dim"), "dim"));
  const auto sys = critsys::PolySystem::make(std::move(eqs), dim, vars.value_or(std::vector<std::string>{}));

  const std::string q = req.get("quadric");
  critsys::CriticalMatrix mat;
  if (q.rfind("euclidean:", 0) == 0) {
    std::vector<Rational> center;
    for (const auto& a : split(q.substr(10), ',')) center.push_back(parseRational(a));
    mat = critsys::buildEDMatrix(sys, center);
  } else if (q.rfind("general:", 0) == 0) {
    const std::string h = req.has("homogenizing-var") ? req.get("homogenizing-var") : "x0";
    mat = critsys::buildReciprocalMatrix(sys, critsys::QuadricSpec::general(parsePolynomial(q.substr(8)), h));
  } else {
    throwInput("bad_option", "--quadric expects euclidean:a1,...,an or general:q");
  }
  json rows = json::array();
  for (const auto& row : mat.rows) {
    json r = json::array();
    for (const auto& e : row) r.push_back(e.toString());
    rows.push_back(r);
  }
  json minors = json::array();
  for (const auto& m : critsys::minors(mat)) minors.push_back(m.toString());
  for (const auto& w : mat.warnings) warnings.push_back(w);
  return json{{"variables", sys.variables}, {"rows", rows}, {"minorSize", mat.minorSize}, {"minors", minors}};
}

json inputsJson(const CommandRequest& req) {
  json in = json::object();
  for (const auto& [k, v] : req.options) in[k] = v.size() == 1 ? json(v.front()) : json(v);
  return in;
}

void renderValue(std::ostream& os, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      os << pad << k << ":";
      if (x.is_object() || (x.is_array() && !x.empty() && (x.front().is_object() || x.front().is_array()))) {
        os << "\n";
        renderValue(os, x, indent + 2);
      } else {
        os << " ";
        renderValue(os, x, 0);
        os << "\n";
      }
    }
  } else if (v.is_array()) {
    if (!v.empty() && (v.front().is_object() || v.front().is_array())) {
      for (const auto& x : v) {
        os << pad << "-";
        if (x.is_object()) {
          os << "\n";
          renderValue(os, x, indent + 2);
        } else {
          os << " ";
          renderValue(os, x, 0);
          os << "\n";
        }
      }
    } else {
      os << "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        renderValue(os, v[i], 0);
      }
      os << "]";
    }
  } else if (v.is_string()) {
    os << v.get<std::string>();
  } else {
    os << v.dump();
  }
}

int exitCode(ErrorKind k) {
  switch (k) {
    case ErrorKind::Input:
      return 2;
    case ErrorKind::Genericity:
      return 3;
    case ErrorKind::Consistency:
      return 4;
  }
  return 4;
}

const char* kindName(ErrorKind k) {
  switch (k) {
    case ErrorKind::Input:
      return "input";
    case ErrorKind::Genericity:
      return "genericity";
    case ErrorKind::Consistency:
      return "consistency";
  }
  return "consistency";
}

}  // namespace

json execute(const CommandRequest& req) {
  json warnings = json::array();
  json results;
  switch (req.command) {
    case Command::Ranks:
      results = runRanks(req, warnings);
      break;
    case Command::EdDegree:
      results = runEdDegree(req, warnings);
      break;
    case Command::ChernMather:
      results = runChernMather(req);
      break;
    case Command::Plucker:
      results = runPlucker(req);
      break;
    case Command::FocalDegree:
      results = runFocal(req);
      break;
    case Command::Evolute:
      results = runEvolute(req);
      break;
    case Command::PolarMatrix:
      results = runPolarMatrix(req, warnings);
      break;
  }
  return json{{"command", commandName(req.command)},
              {"inputs", inputsJson(req)},
              {"results", results},
              {"warnings", warnings},
              {"seed", req.seed}};
}

std::string renderText(const json& report) {
  std::ostringstream os;
  renderValue(os, report, 0);
  return os.str();
}

int run(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  try {
    const json report = execute(req);
    if (req.format == OutputFormat::Json) {
      out << report.dump(2) << "\n";
    } else {
      out << renderText(report);
    }
    return 0;
  } catch (const PolarError& e) {
    if (req.format == OutputFormat::Json) {
      const json report{{"command", commandName(req.command)},
                        {"inputs", inputsJson(req)},
                        {"error", json{{"code", e.code()}, {"kind", kindName(e.kind())}, {"message", e.what()}}},
                        {"seed", req.seed}};
      out << report.dump(2) << "\n";
    } else {
      err << "error [" << e.code() << "]: " << e.what() << "\n";
    }
    return exitCode(e.kind());
  }
}

}  // namespace polar::cli
