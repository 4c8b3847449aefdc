#pragma once

#include <cstdint>
#include <vector>

namespace polar::rankcalc {

/// Ranks mu_0..mu_m of an m-dimensional variety in P^n.
struct RankVector {
  int n = 0;
  int m = 0;
  std::vector<std::int64_t> ranks;

  /// Validates 0 <= m < n, non-negative entries and mu_0 >= 1; m = size - 1.
  static RankVector make(int n, std::vector<std::int64_t> ranks);
};

/// Degrees c_0..c_m of the Chern-Mather classes against hyperplane powers.
struct ChernMatherVector {
  int m = 0;
  std::vector<std::int64_t> c;

  static ChernMatherVector make(std::vector<std::int64_t> c);
};

/// Degree, nodes and ordinary cusps of a plane curve.
struct PluckerData {
  std::int64_t d = 0;
  std::int64_t delta = 0;
  std::int64_t kappa = 0;
};

struct PluckerInvariants {
  std::int64_t mu1 = 0;   // class
  std::int64_t iota = 0;  // inflections
  std::int64_t genus = 0;
};

/// Surface with a double curve of degree eps, t triple points, nu2 pinch points.
struct OrdinarySurfaceData {
  std::int64_t d = 0;
  std::int64_t eps = 0;
  std::int64_t t = 0;
  std::int64_t nu2 = 0;
};

struct SingularityDatum {
  std::int64_t milnor = 0;     // mu^(n)
  std::int64_t sectional = 0;  // mu^(n-1)
};

RankVector ranksSmoothHypersurface(std::int64_t d, int n);
std::int64_t edFromRanks(const RankVector& r);
std::int64_t edHypersurfaceIsolated(std::int64_t d, int n, const std::vector<SingularityDatum>& sing);
std::int64_t edSurfaceOrdinary(const OrdinarySurfaceData& s);

/// c_k = sum_{i=0..k} (-1)^(k-i) C(m+1-k+i, i) mu_{k-i}
ChernMatherVector chernMatherFromRanks(const RankVector& r);
/// Inverse transform (same coefficients); n is the ambient dimension.
RankVector ranksFromChernMather(const ChernMatherVector& c, int n);

PluckerInvariants pluckerRanks(const PluckerData& p);
/// Plücker data of the dual curve: d* = mu1, kappa* = iota, same genus.
PluckerData dualPlucker(const PluckerData& p);

/// Rank reversal; only for m = n - 1.
RankVector dualRanks(const RankVector& r);

std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace polar::rankcalc
