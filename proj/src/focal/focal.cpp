#include "polarlib/focal.hpp"

#include <string>

#include "polarlib/checked.hpp"
#include "polarlib/error.hpp"

namespace polar::focal {

using checked::add;
using checked::mul;
using checked::sub;

SmoothSurfaceChernData SmoothSurfaceChernData::surfaceInP3(std::int64_t d) {
  if (d < 1) throwInput("invalid_degree", "degree must be at least 1");
  SmoothSurfaceChernData c;
  c.d = d;
  c.c1h = mul(d, d - 4);
  c.c1sq = mul(d, mul(d - 4, d - 4));
  c.c2 = mul(d, add(sub(mul(d, d), mul(4, d)), 6));
  return c;
}

std::int64_t focalPlaneCurve(std::int64_t mu0, std::int64_t mu1, std::int64_t kappa, std::int64_t iota) {
  if (mu0 < 1 || mu1 < 0 || kappa < 0 || iota < 0)
    throwInput("invalid_curve_invariants", "curve invariants must be non-negative with mu0 >= 1");
  const std::int64_t a = add(mul(3, mu1), kappa);
  const std::int64_t b = add(mul(3, mu0), iota);
  if (a != b)
    throwInput("inconsistent_curve_invariants", "inconsistent curve invariants: 3*mu1 + kappa = " +
                                                    std::to_string(a) + " but 3*mu0 + iota = " + std::to_string(b));
  return a;
}

std::int64_t focalSalmon(const rankcalc::PluckerData& p) {
  const auto inv = rankcalc::pluckerRanks(p);
  const std::int64_t salmon = sub(sub(mul(mul(3, p.d), p.d - 1), mul(6, p.delta)), mul(8, p.kappa));
  const std::int64_t general = focalPlaneCurve(p.d, inv.mu1, p.kappa, inv.iota);
  if (salmon != general)
    throwConsistency("salmon_mismatch", "Salmon's formula gives " + std::to_string(salmon) +
                                            " but 3*mu1 + kappa gives " + std::to_string(general));
  return salmon;
}

std::int64_t focalSmoothCurve(std::int64_t d, std::int64_t g) {
  if (d < 1 || g < 0) throwInput("invalid_curve_data", "need d >= 1 and g >= 0");
  return mul(6, sub(add(d, g), 1));
}

std::int64_t focalSmoothSurface(const SmoothSurfaceChernData& c) {
  if (c.d < 1) throwInput("invalid_degree", "degree must be at least 1");
  return mul(2, add(add(add(mul(15, c.d), mul(9, c.c1h)), c.c1sq), c.c2));
}

std::int64_t focalHypersurfaceRanks(const rankcalc::RankVector& r) {
  if (r.m != r.n - 1) throwInput("not_hypersurface", "focal hypersurface formula needs m = n - 1");
  std::int64_t s = 0;
  for (int i = 0; i <= r.n - 2; ++i) s = add(s, r.ranks[static_cast<std::size_t>(i)]);
  const std::int64_t last = r.ranks[static_cast<std::size_t>(r.n - 1)];
  return add(mul(r.n - 1, last), mul(mul(2, r.ranks[0] - 1), s));
}

}  // namespace polar::focal
