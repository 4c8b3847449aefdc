#include "polarlib/rankcalc.hpp"

#include <algorithm>
#include <string>

#include "polarlib/checked.hpp"
#include "polarlib/error.hpp"

namespace polar::rankcalc {

using checked::add;
using checked::mul;
using checked::sub;

RankVector RankVector::make(int n, std::vector<std::int64_t> ranks) {
  if (ranks.empty()) throwInput("invalid_ranks", "rank vector is empty");
  const int m = static_cast<int>(ranks.size()) - 1;
  if (n < 1 || m >= n)
    throwInput("invalid_ranks", "need 0 <= m < n, got m = " + std::to_string(m) + ", n = " + std::to_string(n));
  if (ranks[0] < 1) throwInput("invalid_ranks", "mu_0 is a degree and must be at least 1");
  if (std::any_of(ranks.begin(), ranks.end(), [](std::int64_t v) { return v < 0; }))
    throwInput("invalid_ranks", "ranks must be non-negative");
  RankVector r;
  r.n = n;
  r.m = m;
  r.ranks = std::move(ranks);
  return r;
}

ChernMatherVector ChernMatherVector::make(std::vector<std::int64_t> c) {
  if (c.empty()) throwInput("invalid_chern_mather", "Chern-Mather vector is empty");
  if (c[0] < 1) throwInput("invalid_chern_mather", "c_0 is a degree and must be at least 1");
  ChernMatherVector v;
  v.m = static_cast<int>(c.size()) - 1;
  v.c = std::move(c);
  return v;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = mul(r, n - k + i) / i;
  return r;
}

RankVector ranksSmoothHypersurface(std::int64_t d, int n) {
  if (d < 1) throwInput("invalid_degree", "degree must be at least 1");
  if (n < 2) throwInput("invalid_dimension", "ambient dimension must be at least 2");
  std::vector<std::int64_t> mu;
  std::int64_t v = d;
  for (int i = 0; i < n; ++i) {
    mu.push_back(v);
    v = mul(v, d - 1);
  }
  return RankVector::make(n, std::move(mu));
}

std::int64_t edFromRanks(const RankVector& r) {
  std::int64_t s = 0;
  for (auto v : r.ranks) s = add(s, v);
  return s;
}

std::int64_t edHypersurfaceIsolated(std::int64_t d, int n, const std::vector<SingularityDatum>& sing) {
  if (d < 2) throwInput("invalid_degree", "isolated singularities need degree at least 2");
  std::int64_t ed = edFromRanks(ranksSmoothHypersurface(d, n));
  for (const auto& s : sing) {
    if (s.milnor < 1 || s.sectional < 1)
      throwInput("invalid_milnor", "Milnor numbers must be positive");
    ed = sub(ed, add(s.milnor, s.sectional));
  }
  if (ed < 0) throwInput("inconsistent_singularity_data", "inconsistent singularity data");
  return ed;
}

std::int64_t edSurfaceOrdinary(const OrdinarySurfaceData& s) {
  if (s.d < 1 || s.eps < 0 || s.t < 0 || s.nu2 < 0)
    throwInput("invalid_surface_data", "surface data must be non-negative with d >= 1");
  const std::int64_t d = s.d;
  std::int64_t v = add(sub(mul(mul(d, d), d), mul(d, d)), d);
  v = sub(v, mul(sub(mul(3, d), 2), s.eps));
  v = sub(v, mul(3, s.t));
  v = sub(v, mul(2, s.nu2));
  if (v < 0) throwInput("inconsistent_surface_data", "ED degree formula is negative for this surface data");
  return v;
}

namespace {

std::vector<std::int64_t> transform(const std::vector<std::int64_t>& in) {
  const auto m = static_cast<std::int64_t>(in.size()) - 1;
  std::vector<std::int64_t> out(in.size(), 0);
  for (std::int64_t k = 0; k <= m; ++k) {
    std::int64_t s = 0;
    for (std::int64_t i = 0; i <= k; ++i) {
      const std::int64_t term = mul(binomial(m + 1 - k + i, i), in[static_cast<std::size_t>(k - i)]);
      s = (k - i) % 2 == 0 ? add(s, term) : sub(s, term);
    }
    out[static_cast<std::size_t>(k)] = s;
  }
  return out;
}

}  // namespace

ChernMatherVector chernMatherFromRanks(const RankVector& r) {
  return ChernMatherVector::make(transform(r.ranks));
}

RankVector ranksFromChernMather(const ChernMatherVector& c, int n) {
  if (c.m >= n)
    throwInput("dimension_mismatch", "Chern-Mather vector of dimension " + std::to_string(c.m) +
                                         " does not fit in P^" + std::to_string(n));
  return RankVector::make(n, transform(c.c));
}

PluckerInvariants pluckerRanks(const PluckerData& p) {
  if (p.d < 2 || p.delta < 0 || p.kappa < 0)
    throwInput("invalid_plucker_data", "need d >= 2 and non-negative node and cusp counts");
  PluckerInvariants out;
  out.mu1 = sub(sub(mul(p.d, p.d - 1), mul(2, p.delta)), mul(3, p.kappa));
  out.iota = sub(sub(mul(mul(3, p.d), p.d - 2), mul(6, p.delta)), mul(8, p.kappa));
  out.genus = sub(sub(mul(p.d - 1, p.d - 2) / 2, p.delta), p.kappa);
  if (out.genus < 0 || out.mu1 <= 0 || out.iota < 0)
    throwInput("invalid_plucker_data", "node and cusp counts exceed what a degree " + std::to_string(p.d) +
                                           " curve allows");
  return out;
}

PluckerData dualPlucker(const PluckerData& p) {
  const auto inv = pluckerRanks(p);
  PluckerData dual;
  dual.d = inv.mu1;
  dual.kappa = inv.iota;
  dual.delta = sub(sub(mul(dual.d - 1, dual.d - 2) / 2, dual.kappa), inv.genus);
  return dual;
}

RankVector dualRanks(const RankVector& r) {
  if (r.m != r.n - 1)
    throwInput("duality_case", "duality reversal implemented for the stated rank-reversal case only");
  if (r.ranks.back() < 1)
    throwInput("duality_case", "dual variety is not a hypersurface (last rank is 0)");
  std::vector<std::int64_t> rev(r.ranks.rbegin(), r.ranks.rend());
  return RankVector::make(r.n, std::move(rev));
}

}  // namespace polar::rankcalc
