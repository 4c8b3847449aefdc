#include <algorithm>
#include <numeric>
#include <set>

#include "polarlib/counting.hpp"
#include "polarlib/critsys.hpp"
#include "polarlib/elim.hpp"
#include "polarlib/error.hpp"
#include "polarlib/focal.hpp"
#include "polarlib/linear.hpp"
#include "polarlib/random.hpp"

namespace polar::focal {
namespace {

using Point = std::pair<Rational, Rational>;

const std::vector<std::string> kEvoluteVars{"X", "Y"};

struct Derivatives {
  Poly F, Fx, Fy, Fxx, Fxy, Fyy;
};

Derivatives derivatives(const Poly& F, const std::string& x, const std::string& y) {
  Derivatives d;
  d.F = F;
  d.Fx = differentiate(F, x);
  d.Fy = differentiate(F, y);
  d.Fxx = differentiate(d.Fx, x);
  d.Fxy = differentiate(d.Fx, y);
  d.Fyy = differentiate(d.Fy, y);
  return d;
}

std::optional<Point> centerAt(const Derivatives& d, const std::string& x, const std::string& y, const Point& p) {
  const std::map<std::string, Rational> at{{x, p.first}, {y, p.second}};
  const Rational fx = evaluate(d.Fx, at);
  const Rational fy = evaluate(d.Fy, at);
  const Rational n = fx * fx + fy * fy;
  if (n == 0) return std::nullopt;
  const Rational den =
      fy * fy * evaluate(d.Fxx, at) - 2 * fx * fy * evaluate(d.Fxy, at) + fx * fx * evaluate(d.Fyy, at);
  if (den == 0) return std::nullopt;
  const Rational t = n / den;
  return Point{p.first - t * fx, p.second - t * fy};
}

// Small-height rationals p/q ordered by height, then random ones.
std::vector<Rational> lineValues(const EvoluteConfig& cfg) {
  std::vector<Rational> out;
  const int h = cfg.searchHeight;
  for (int height = 0; height <= h; ++height)
    for (int q = 1; q <= std::max(height, 1); ++q)
      for (int p = -height; p <= height; ++p) {
        if (std::max(std::abs(p), q) != height && !(height == 0 && p == 0)) continue;
        if (std::gcd(p, q) != 1) continue;
        out.emplace_back(p, q);
      }
  Rng rng = Rng::derive(cfg.seed, 0x65766f6cULL);
  for (int i = 0; i < cfg.randomLines; ++i) out.push_back(rng.rational(100L * h, h));
  return out;
}

std::vector<Point> samplePoints(const Derivatives& d, const std::string& x, const std::string& y,
                                const EvoluteConfig& cfg, std::vector<Point>& centers) {
  std::vector<Point> pts;
  std::set<Point> seen;
  const auto consider = [&](const Point& p) {
    if (!seen.insert(p).second) return;
    if (auto c = centerAt(d, x, y, p)) {
      pts.push_back(p);
      centers.push_back(*c);
    }
  };
  for (const auto& v : lineValues(cfg)) {
    if (static_cast<int>(pts.size()) >= cfg.samples) break;
    for (int axis = 0; axis < 2 && static_cast<int>(pts.size()) < cfg.samples; ++axis) {
      const std::string& fixed = axis == 0 ? x : y;
      const std::string& free = axis == 0 ? y : x;
      const Poly u = substitute(d.F, fixed, v).alignedTo({free});
      if (u.isZero() || u.isConstant()) continue;
      for (const auto& r : elim::rationalRoots(u)) {
        consider(axis == 0 ? Point{v, r} : Point{r, v});
        if (static_cast<int>(pts.size()) >= cfg.samples) break;
      }
    }
  }
  return pts;
}

// Drops the factor of R that involves none of X, Y.
Poly removeBaseContent(const Poly& r) {
  if (r.isZero()) return r;
  Poly c = r;
  for (const auto& v : kEvoluteVars)
    if (c.hasVariable(v)) c = elim::content(c, v);
  if (c.isConstant()) return r;
  return divideExact(r, c);
}

Poly rawEliminant(const Poly& F, const std::string& x, const std::string& y) {
  const std::vector<std::string> vars{x, y, kEvoluteVars[0], kEvoluteVars[1]};
  const Poly f = F.alignedTo(vars);
  const Poly fx = differentiate(f, x);
  const Poly fy = differentiate(f, y);
  const Poly X = Poly::variable(kEvoluteVars[0], vars);
  const Poly Y = Poly::variable(kEvoluteVars[1], vars);
  const Poly xv = Poly::variable(x, vars);
  const Poly yv = Poly::variable(y, vars);
  const Poly G = (X - xv) * fy - (Y - yv) * fx;
  const Poly H = differentiate(G, x) * fy - differentiate(G, y) * fx;
  const Poly r1 = removeBaseContent(elim::resultantExtended(f, G, y));
  const Poly r2 = removeBaseContent(elim::resultantExtended(f, H, y));
  Poly e = elim::resultantExtended(r1, r2, x);
  for (const auto& v : e.usedVariables())
    if (v != kEvoluteVars[0] && v != kEvoluteVars[1])
      throwConsistency("evolute_elimination", "eliminant still depends on " + v);
  return e.isZero() ? Poly(kEvoluteVars) : e.alignedTo(kEvoluteVars);
}

// Multiplicity layers: radical of E, radical of the repeated part, ...
std::vector<Poly> multiplicityLayers(const Poly& e) {
  std::vector<Poly> out;
  Poly p = e;
  while (!p.isConstant()) {
    Poly g = p;
    for (const auto& v : p.usedVariables()) g = elim::gcd(g, differentiate(p, v));
    out.push_back(primitiveNormalized(divideExact(p, g)));
    p = g;
  }
  return out;
}

// Product of the lines through s that are components of e.
std::optional<Poly> linesThrough(const Poly& e, const Point& s) {
  const auto shift = [&](const Poly& p, const Rational& a, const Rational& b) {
    return applyLinearChange(p, LinearChange({{Rational(1), Rational(0), a},
                                              {Rational(0), Rational(1), b},
                                              {Rational(0), Rational(0), Rational(1)}}));
  };
  const Poly moved = shift(e, s.first, s.second);
  std::map<int, Poly> parts;
  for (const auto& [exp, c] : moved.terms()) {
    Poly::TermMap t{{exp, c}};
    const int deg = static_cast<int>(exp[0] + exp[1]);
    auto [it, fresh] = parts.try_emplace(deg, Poly(kEvoluteVars));
    it->second += Poly(kEvoluteVars, std::move(t));
  }
  Poly g;
  for (const auto& [deg, part] : parts) {
    g = elim::gcd(g, part);
    if (g.isConstant()) return std::nullopt;
  }
  if (g.isZero() || g.isConstant()) return std::nullopt;
  return primitiveNormalized(shift(elim::radical(g), -s.first, -s.second));
}

std::vector<Poly> coprimeBasis(const std::vector<Poly>& gens) {
  std::vector<Poly> basis;
  std::vector<Poly> pending;
  for (const auto& g : gens)
    if (!g.isZero() && !g.isConstant()) pending.push_back(primitiveNormalized(g));
  while (!pending.empty()) {
    Poly a = std::move(pending.back());
    pending.pop_back();
    if (a.isConstant()) continue;
    bool absorbed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Poly g = elim::gcd(a, basis[i]);
      if (g.isConstant()) continue;
      absorbed = true;
      if (g == basis[i] && g == a) break;
      const Poly b = basis[i];
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
      pending.push_back(g);
      pending.push_back(primitiveNormalized(divideExact(b, g)));
      pending.push_back(primitiveNormalized(divideExact(a, g)));
      break;
    }
    if (!absorbed) basis.push_back(a);
  }
  std::sort(basis.begin(), basis.end(),
            [](const Poly& a, const Poly& b) { return a.toString() < b.toString(); });
  return basis;
}

bool topFormGeneric(const Poly& F, const std::string& x, const std::string& y) {
  const int d = F.totalDegree();
  Poly::TermMap top;
  for (const auto& [e, c] : F.terms())
    if (static_cast<int>(e[0] + e[1]) == d) top.emplace(e, c);
  const Poly t(F.variables(), std::move(top));
  if (!elim::isSquarefree(t)) return false;
  const Poly iso = Poly::variable(x, F.variables()) * Poly::variable(x, F.variables()) +
                   Poly::variable(y, F.variables()) * Poly::variable(y, F.variables());
  return elim::gcd(t, iso).isConstant();
}

}  // namespace

std::optional<std::pair<Rational, Rational>> centerOfCurvature(const Poly& F, const Rational& x, const Rational& y) {
  const auto vars = critsys::planeVariables(F);
  return centerAt(derivatives(F.alignedTo(vars), vars[0], vars[1]), vars[0], vars[1], {x, y});
}

EvoluteResult evoluteEliminant(const Poly& input, const EvoluteConfig& cfg) {
  if (input.isZero() || input.isConstant()) throwInput("constant_curve", "curve equation is constant");
  const auto vars = critsys::planeVariables(input);
  for (const auto& v : vars)
    if (v == kEvoluteVars[0] || v == kEvoluteVars[1])
      throwInput("variable_clash", "curve variables must differ from the evolute coordinates X, Y");
  const std::string& x = vars[0];
  const std::string& y = vars[1];
  const Poly F = input.alignedTo(vars);
  const int d = F.totalDegree();
  if (d == 1) throwInput("line_curve", "a line has no evolute");
  if (d > cfg.maxDegree)
    throwInput("degree_cap", "curve degree " + std::to_string(d) + " exceeds the evolute degree cap " +
                                 std::to_string(cfg.maxDegree));
  if (!elim::isSquarefree(F)) throwInput("not_squarefree", "curve equation is not squarefree");

  EvoluteResult res;
  res.genericityFlag = topFormGeneric(F, x, y);
  const Derivatives der = derivatives(F, x, y);
  res.samplePoints = samplePoints(der, x, y, cfg, res.sampleCenters);
  if (static_cast<int>(res.samplePoints.size()) < cfg.minSamples)
    throwInput("insufficient_samples", "insufficient rational sample points (found " +
                                           std::to_string(res.samplePoints.size()) + ")");

  // A component whose centers of curvature are all equal to the first sample
  // center: its evolute is a point.
  {
    const Point& c0 = res.sampleCenters.front();
    const Poly n = der.Fx * der.Fx + der.Fy * der.Fy;
    const Poly den = der.Fy * der.Fy * der.Fxx - Rational(2) * der.Fx * der.Fy * der.Fxy + der.Fx * der.Fx * der.Fyy;
    const Poly kx = (Poly::variable(x, vars) - Poly::constant(c0.first, vars)) * den - n * der.Fx;
    const Poly ky = (Poly::variable(y, vars) - Poly::constant(c0.second, vars)) * den - n * der.Fy;
    const Poly common = elim::gcd(elim::gcd(F, kx), ky);
    if (!common.isZero() && !common.isConstant()) {
      res.degenerate = true;
      res.center = c0;
      res.eliminant = Poly(kEvoluteVars);
      return res;
    }
  }

  const Poly e = rawEliminant(F, x, y);
  if (e.isZero()) {
    res.degenerate = true;
    res.eliminant = e;
    return res;
  }

  std::vector<Poly> gens = multiplicityLayers(e);
  // The same eliminant for a rotated copy, mapped back. Rotations move the
  // true evolute along with the curve; extraneous factors generally do not.
  const Rational c(3, 5), s(4, 5);
  const Poly rotated = applyLinearChange(F, LinearChange::linear({{c, -s}, {s, c}}));
  const Poly e2 = rawEliminant(rotated, x, y);
  if (!e2.isZero()) {
    const Poly back = applyLinearChange(e2, LinearChange::linear({{c, s}, {-s, c}}));
    gens.push_back(elim::gcd(gens.front(), back));
  }
  for (const auto& v : kEvoluteVars) {
    const Poly cv = elim::content(gens.front(), v);
    if (!cv.isConstant()) gens.push_back(cv);
  }
  for (const auto& sp : counting::singularPointsCurve(F).points)
    if (auto lines = linesThrough(gens.front(), {sp.x, sp.y})) gens.push_back(*lines);

  Poly kept = Poly::constant(1, kEvoluteVars);
  for (const auto& piece : coprimeBasis(gens)) {
    const bool onAll = std::all_of(res.sampleCenters.begin(), res.sampleCenters.end(), [&](const Point& q) {
      return evaluate(piece, {{kEvoluteVars[0], q.first}, {kEvoluteVars[1], q.second}}) == 0;
    });
    if (onAll) {
      kept *= piece;
    } else {
      res.extraneousFactorsRemoved.push_back(piece);
    }
  }
  if (kept.isConstant())
    throwConsistency("evolute_filter", "no eliminant factor vanishes at every sampled center of curvature");
  res.eliminant = primitiveNormalized(kept);
  res.degree = res.eliminant.totalDegree();
  return res;
}

}  // namespace polar::focal
