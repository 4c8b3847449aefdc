#pragma once

#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "polarlib/error.hpp"
#include "polarlib/poly.hpp"
#include "polarlib/random.hpp"

namespace testing {

inline polar::Poly P(const std::string& s) { return polar::parsePolynomial(s); }

inline polar::Poly P(const std::string& s, const std::vector<std::string>& vars) {
  return polar::parsePolynomial(s, vars);
}

inline polar::Rational Q(const std::string& s) { return polar::parseRational(s); }

// Random polynomial over `vars` with total degree <= maxDeg and small
// integer coefficients; roughly half of the monomials are present.
inline polar::Poly randomPoly(polar::Rng& rng, const std::vector<std::string>& vars, int maxDeg,
                              int coeffBound = 5) {
  polar::Poly::TermMap terms;
  const std::size_t k = vars.size();
  polar::Exponents e(k, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == k) {
      if (rng.uniform(0, 1) == 0) return;
      const auto c = rng.uniform(-coeffBound, coeffBound);
      if (c != 0) terms.emplace(e, polar::Rational(c));
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[i] = static_cast<std::uint32_t>(a);
      self(self, i + 1, left - a);
    }
    e[i] = 0;
  };
  rec(rec, 0, maxDeg);
  return polar::Poly(vars, std::move(terms));
}

inline std::map<std::string, polar::Rational> randomPoint(polar::Rng& rng,
                                                          const std::vector<std::string>& vars) {
  std::map<std::string, polar::Rational> pt;
  for (const auto& v : vars) pt[v] = rng.rational(20, 7);
  return pt;
}

}  // namespace testing

// Runs `expr` and reports the code of the PolarError it throws ("" if none).
#define POLAR_ERROR_CODE(expr)                 \
  [&]() -> std::string {                       \
    try {                                      \
      (void)(expr);                            \
    } catch (const polar::PolarError& e) {     \
      return e.code();                         \
    }                                          \
    return "";                                 \
  }()

namespace doctest {
template <>
struct StringMaker<polar::Poly> {
  static String convert(const polar::Poly& p) { return p.toString().c_str(); }
};
}  // namespace doctest
