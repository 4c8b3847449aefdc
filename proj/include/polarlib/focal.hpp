#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "polarlib/poly.hpp"
#include "polarlib/rankcalc.hpp"

namespace polar::focal {

struct SmoothSurfaceChernData {
  std::int64_t d = 0;
  std::int64_t c1h = 0;   // c1(Omega^1) . h
  std::int64_t c1sq = 0;  // c1(Omega^1)^2
  std::int64_t c2 = 0;    // c2(Omega^1)

  /// Chern numbers of a smooth degree-d surface in P^3.
  static SmoothSurfaceChernData surfaceInP3(std::int64_t d);
};

/// 3 mu1 + kappa, after checking it equals 3 mu0 + iota.
std::int64_t focalPlaneCurve(std::int64_t mu0, std::int64_t mu1, std::int64_t kappa, std::int64_t iota);
/// 3d(d-1) - 6 delta - 8 kappa, cross-checked against focalPlaneCurve.
std::int64_t focalSalmon(const rankcalc::PluckerData& p);
/// 6(d + g - 1)
std::int64_t focalSmoothCurve(std::int64_t d, std::int64_t g);
/// 2(15d + 9 c1h + c1sq + c2)
std::int64_t focalSmoothSurface(const SmoothSurfaceChernData& c);
/// (n-1) mu_{n-1} + 2(mu_0 - 1) sum_{i<=n-2} mu_i, for hypersurfaces.
std::int64_t focalHypersurfaceRanks(const rankcalc::RankVector& r);

struct EvoluteConfig {
  std::uint64_t seed = 0;
  int maxDegree = 3;
  int samples = 6;        // centers of curvature used by the factor filter
  int minSamples = 3;
  int searchHeight = 12;  // enumerate lines x = p/q, y = p/q with |p|, q up to this
  int randomLines = 400;  // extra seeded random lines after the enumeration
};

struct EvoluteResult {
  Poly eliminant;  // in (X, Y); zero when degenerate
  int degree = 0;
  std::vector<Poly> extraneousFactorsRemoved;
  bool genericityFlag = false;
  bool degenerate = false;
  std::optional<std::pair<Rational, Rational>> center;  // set when degenerate
  std::vector<std::pair<Rational, Rational>> samplePoints;
  std::vector<std::pair<Rational, Rational>> sampleCenters;
};

/// Evolute of a plane curve by elimination: y, then x, from
///   F = 0,  G = (X-x)F_y - (Y-y)F_x = 0,  dG/dx F_y - dG/dy F_x = 0,
/// followed by the center-of-curvature factor filter.
EvoluteResult evoluteEliminant(const Poly& F, const EvoluteConfig& config = {});

/// Center of curvature of F at a smooth, non-inflectional point, or nullopt.
std::optional<std::pair<Rational, Rational>> centerOfCurvature(const Poly& F, const Rational& x, const Rational& y);

}  // namespace polar::focal
