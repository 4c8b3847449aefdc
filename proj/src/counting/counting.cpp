#include "polarlib/counting.hpp"

#include <exception>
#include <functional>
#include <numeric>

#include "polarlib/critsys.hpp"
#include "polarlib/elim.hpp"
#include "polarlib/error.hpp"
#include "polarlib/linear.hpp"
#include "polarlib/random.hpp"
#include "polarlib/upoly.hpp"

namespace polar::counting {
namespace {

const std::string kZ = "#z";

// ---------------------------------------------------------------- common roots

Poly shear(const Poly& f, const Rational& s) {
  return applyLinearChange(f, LinearChange::linear({{Rational(1), s}, {Rational(0), Rational(1)}}));
}

std::optional<int> commonRootsWithShear(const Poly& f, const Poly& g, const std::string& y, const Rational& s) {
  const Poly fs = shear(f, s);
  const Poly gs = shear(g, s);
  const bool fMonic = fs.isZero() || fs.degreeIn(y) == fs.totalDegree();
  const bool gMonic = gs.isZero() || gs.degreeIn(y) == gs.totalDegree();
  if (!fMonic && !gMonic) return std::nullopt;
  const Poly r = elim::resultantExtended(fs, gs, y, false);
  if (r.isZero()) throwInput("positive_dimensional", "positive-dimensional intersection");
  return elim::countDistinctRoots(r);
}

// ------------------------------------------------------------ projective frames

struct Frame {
  bool ok = false;
  int raw = 0;
  int atInfinity = 0;
  std::vector<int> subtracted;
  int residualDegree = 0;
  bool residualSquarefree = false;
  bool unresolvedSingular = false;
  int count = 0;
};

RationalMatrix randomMatrix(Rng& rng, bool fixInfinity) {
  for (;;) {
    RationalMatrix m(3, std::vector<Rational>(3));
    for (auto& row : m)
      for (auto& e : row) {
        const auto v = rng.uniform(1, 60);
        e = Rational(static_cast<long>(rng.uniform(0, 1) == 0 ? v : -v));
      }
    if (fixInfinity) {
      // z = m20 x' + m22 z': the old line at infinity becomes the line x' = -m22/m20
      m[2][1] = 0;
      if (m[2][0] == 0) continue;
    }
    if (determinant(m) != 0) return m;
  }
}

Poly toFrame(const Poly& homog, const RationalMatrix& m, const std::vector<std::string>& hvars) {
  const Poly moved = applyLinearChange(homog.alignedTo(hvars), LinearChange::linear(m));
  return substitute(moved, kZ, Rational(1)).alignedTo({hvars[0], hvars[1]});
}

// Counts intersections of two projective curves (homogeneous in x, y, #z)
// inside one random frame. Singular points are either given in original
// affine coordinates or detected on the transformed curve.
Frame countInFrame(const Poly& Fh, const Poly& Gh, const RationalMatrix& m, bool fixInfinity,
                   const std::vector<SingularPoint>* given, const std::vector<std::string>& hvars) {
  Frame fr;
  const std::string& x = hvars[0];
  const std::string& y = hvars[1];
  const int df = Fh.totalDegree();
  const int dg = Gh.totalDegree();
  const Poly F = toFrame(Fh, m, hvars);
  const Poly G = toFrame(Gh, m, hvars);
  if (F.totalDegree() != df || G.totalDegree() != dg) return fr;
  if (F.degreeIn(y) != df || G.degreeIn(y) != dg) return fr;
  const Poly R = elim::resultantExtended(F, G, y, false);
  if (R.isZero()) return fr;
  fr.raw = R.totalDegree();
  if (fr.raw != df * dg) return fr;

  std::vector<Rational> special;
  if (fixInfinity) special.push_back(-m[2][2] / m[2][0]);
  const auto minv = *inverse(m);
  if (given != nullptr) {
    for (const auto& p : *given) {
      Rational w[3];
      for (int i = 0; i < 3; ++i) w[i] = minv[i][0] * p.x + minv[i][1] * p.y + minv[i][2];
      if (w[2] == 0) return fr;
      special.push_back(w[0] / w[2]);
    }
  } else {
    const auto scan = singularPointsCurve(F);
    if (!scan.unresolved.empty()) fr.unresolvedSingular = true;
    for (const auto& p : scan.points) special.push_back(p.x);
  }
  for (std::size_t i = 0; i < special.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (special[i] == special[j]) return fr;

  elim::UPoly residual = elim::UPoly::fromPoly(R.alignedTo({x}));
  std::vector<int> mult;
  for (const auto& a : special) {
    const elim::UPoly lin(std::vector<Rational>{-a, Rational(1)});
    int k = 0;
    for (;;) {
      auto [q, r] = elim::divmod(residual, lin);
      if (!r.isZero()) break;
      residual = std::move(q);
      ++k;
    }
    mult.push_back(k);
  }
  std::size_t first = 0;
  if (fixInfinity) {
    fr.atInfinity = mult[0];
    first = 1;
  }
  fr.subtracted.assign(mult.begin() + static_cast<std::ptrdiff_t>(first), mult.end());
  fr.residualDegree = residual.degree();
  fr.residualSquarefree =
      residual.degree() <= 0 || elim::gcd(residual, residual.derivative()).degree() == 0;
  fr.count = fr.raw - std::accumulate(fr.subtracted.begin(), fr.subtracted.end(), 0);
  fr.ok = true;
  return fr;
}

bool framesAgree(const Frame& a, const Frame& b) {
  return a.ok && b.ok && a.residualSquarefree && b.residualSquarefree && !a.unresolvedSingular &&
         !b.unresolvedSingular && a.count == b.count && a.atInfinity == b.atInfinity &&
         a.subtracted == b.subtracted;
}

// ------------------------------------------------------------------- trials

struct TrialProblem {
  // Returns the homogeneous second curve for this attempt, or nullopt when the
  // random choice is degenerate; `point` receives the data point / pole.
  std::function<std::optional<Poly>(Rng&, int index, int attempt, std::vector<Rational>& point)> second;
  bool fixInfinity = false;
  const std::vector<SingularPoint>* given = nullptr;
};

CountTrial runTrial(const Poly& Fh, const TrialProblem& prob, std::uint64_t seed, int index,
                    const CountConfig& cfg, const std::vector<std::string>& hvars) {
  CountTrial t;
  t.index = index;
  for (int attempt = 0; attempt < cfg.maxRetries; ++attempt) {
    Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(index), static_cast<std::uint64_t>(attempt));
    t.attempt = attempt;
    t.seed = rng.next();
    t.point.clear();
    const auto Gh = prob.second(rng, index, attempt, t.point);
    if (!Gh) continue;
    const auto m1 = randomMatrix(rng, prob.fixInfinity);
    const auto m2 = randomMatrix(rng, prob.fixInfinity);
    const Frame a = countInFrame(Fh, *Gh, m1, prob.fixInfinity, prob.given, hvars);
    const Frame b = countInFrame(Fh, *Gh, m2, prob.fixInfinity, prob.given, hvars);
    t.rawDegree = a.raw;
    t.atInfinity = a.atInfinity;
    t.subtracted = a.subtracted;
    t.residualDegree = a.residualDegree;
    t.residualSquarefree = a.residualSquarefree;
    t.count = a.count;
    if (framesAgree(a, b)) {
      t.resolved = true;
      return t;
    }
  }
  return t;
}

CountReport runTrials(const Poly& Fh, const TrialProblem& prob, std::uint64_t seed, const CountConfig& cfg,
                      const std::vector<std::string>& hvars) {
  const int n = std::max(cfg.trials, 1);
  std::vector<CountTrial> trials(static_cast<std::size_t>(n));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
  for (int i = 0; i < n; ++i) {
    try {
      trials[static_cast<std::size_t>(i)] = runTrial(Fh, prob, seed, i, cfg, hvars);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  CountReport rep;
  rep.trials = std::move(trials);
  rep.stable = true;
  bool haveCount = false;
  for (const auto& t : rep.trials) {
    if (!t.resolved) {
      rep.stable = false;
      rep.warnings.push_back("trial " + std::to_string(t.index) + " found no consistent count in " +
                             std::to_string(cfg.maxRetries) + " attempts");
      continue;
    }
    if (!haveCount) {
      rep.count = t.count;
      rep.atInfinity = t.atInfinity;
      haveCount = true;
    } else if (t.count != rep.count) {
      rep.stable = false;
      rep.warnings.push_back("trials disagree: " + std::to_string(rep.count) + " vs " + std::to_string(t.count));
    }
  }
  return rep;
}

void finish(CountReport& rep, const CountConfig& cfg, const char* what) {
  if (rep.stable && rep.expectedGeneric && rep.count != *rep.expectedGeneric) {
    rep.deviatesFromGeneric = true;
    rep.warnings.push_back(std::string(what) + " " + std::to_string(rep.count) + " deviates from the generic value " +
                           std::to_string(*rep.expectedGeneric));
  }
  if (!rep.stable && cfg.throwOnUnstable) {
    std::string msg = std::string(what) + " is unstable";
    for (const auto& w : rep.warnings) msg += "; " + w;
    throwGenericity("unstable_count", msg);
  }
}

struct Prepared {
  std::vector<std::string> vars;   // x, y
  std::vector<std::string> hvars;  // x, y, #z
  Poly F;
  Poly Fh;
};

Prepared prepare(const Poly& input) {
  if (input.isZero() || input.isConstant()) throwInput("constant_curve", "curve equation is constant");
  Prepared p;
  p.vars = critsys::planeVariables(input);
  p.F = input.alignedTo(p.vars);
  if (!elim::isSquarefree(p.F)) throwInput("not_squarefree", "curve equation is not squarefree");
  p.hvars = {p.vars[0], p.vars[1], kZ};
  p.Fh = homogenize(p.F, kZ).alignedTo(p.hvars);
  return p;
}

}  // namespace

int countCommonRoots(const Poly& f0, const Poly& g0, std::uint64_t shearSeed) {
  const auto vars = critsys::planeVariables(f0, g0);
  const Poly f = f0.alignedTo(vars);
  const Poly g = g0.alignedTo(vars);
  if (f.isZero() || g.isZero()) throwInput("positive_dimensional", "positive-dimensional intersection");
  Rng rng(shearSeed);
  std::optional<int> counts[2];
  for (int k = 0; k < 2; ++k) {
    for (int attempt = 0; attempt < 16 && !counts[k]; ++attempt)
      counts[k] = commonRootsWithShear(f, g, vars[1], Rational(static_cast<long>(rng.uniform(-1000, 1000)), 7L));
    if (!counts[k]) throwGenericity("genericity_failure", "genericity failure, reseed");
  }
  if (*counts[0] != *counts[1]) throwGenericity("genericity_failure", "genericity failure, reseed");
  return *counts[0];
}

CountReport edDegreeCount(const Poly& input, const std::vector<SingularPoint>& sing, std::uint64_t seed,
                          const CountConfig& cfg) {
  const Prepared p = prepare(input);
  const Poly fx = differentiate(p.F, p.vars[0]);
  const Poly fy = differentiate(p.F, p.vars[1]);
  for (const auto& s : sing) {
    const std::map<std::string, Rational> at{{p.vars[0], s.x}, {p.vars[1], s.y}};
    if (evaluate(p.F, at) != 0 || evaluate(fx, at) != 0 || evaluate(fy, at) != 0)
      throwInput("not_singular_point",
                 "(" + toString(s.x) + ", " + toString(s.y) + ") is not a singular point of the curve");
  }

  TrialProblem prob;
  prob.fixInfinity = true;
  prob.given = &sing;
  prob.second = [&](Rng& rng, int, int, std::vector<Rational>& point) -> std::optional<Poly> {
    point = {rng.rational(1000000, 1000), rng.rational(1000000, 1000)};
    const auto sys = critsys::planeCurveEDSystem(p.F, point);
    if (sys.degenerate) return std::nullopt;
    return homogenize(sys.G, kZ).alignedTo(p.hvars);
  };
  CountReport rep = runTrials(p.Fh, prob, seed, cfg, p.hvars);

  const int d = p.F.totalDegree();
  int expected = d * d;
  bool known = true;
  for (const auto& s : sing) {
    if (!s.milnor || !s.sectionalMilnor) {
      known = false;
      break;
    }
    expected -= *s.milnor + *s.sectionalMilnor;
  }
  if (known) rep.expectedGeneric = expected;
  finish(rep, cfg, "ED degree count");
  return rep;
}

CountReport polarClassCount(const Poly& input, const std::array<Rational, 3>& pole, std::uint64_t seed,
                            const CountConfig& cfg) {
  const Prepared p = prepare(input);
  std::vector<Poly> grad;
  for (const auto& v : p.hvars) grad.push_back(differentiate(p.Fh, v).alignedTo(p.hvars));
  const auto polar = [&](const std::array<Rational, 3>& b) {
    return b[0] * grad[0] + b[1] * grad[1] + b[2] * grad[2];
  };

  // Trial 0 starts from the caller's pole; other trials and all retries
  // draw random poles.
  TrialProblem prob;
  prob.fixInfinity = false;
  prob.second = [&](Rng& rng, int index, int attempt, std::vector<Rational>& point) -> std::optional<Poly> {
    std::array<Rational, 3> b = pole;
    if (index != 0 || attempt != 0)
      for (auto& c : b) c = rng.rational(1000, 100);
    point.assign(b.begin(), b.end());
    Poly g = polar(b);
    if (g.isZero()) return std::nullopt;
    return g;
  };
  CountReport rep = runTrials(p.Fh, prob, seed, cfg, p.hvars);
  bool singular = false;
  for (const auto& t : rep.trials)
    if (t.resolved && !t.subtracted.empty()) singular = true;
  const int d = p.F.totalDegree();
  if (!singular) rep.expectedGeneric = d * (d - 1);
  finish(rep, cfg, "polar class count");
  return rep;
}

}  // namespace polar::counting
