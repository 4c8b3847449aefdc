#include <algorithm>
#include <optional>

#include "polarlib/elim.hpp"
#include "polarlib/error.hpp"
#include "polarlib/upoly.hpp"

namespace polar::elim {
namespace {

Poly gcdAligned(const Poly& a, const Poly& b);

Poly one(const std::vector<std::string>& vars) { return Poly::constant(1, vars); }

}  // namespace

Poly pseudoRemainder(const Poly& a, const Poly& b, std::string_view var) {
  if (b.isZero()) throwInput("division_by_zero", "pseudo-remainder by zero");
  const auto vars = unionVariables(a.variables(), b.variables());
  auto r = coefficientsIn(a.alignedTo(vars), var);
  const auto bc = coefficientsIn(b.alignedTo(vars), var);
  const std::size_t db = bc.size() - 1;
  const Poly& lb = bc.back();
  while (!r.empty() && r.size() - 1 >= db) {
    const Poly lr = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& c : r) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= lr * bc[j];
    while (!r.empty() && r.back().isZero()) r.pop_back();
  }
  if (r.empty()) return Poly(vars);
  return fromCoefficients(r, var).alignedTo(vars);
}

Poly content(const Poly& p, std::string_view var) {
  if (p.isZero()) return p;
  Poly g(p.variables());
  for (const auto& c : coefficientsIn(p, var)) {
    if (c.isZero()) continue;
    g = g.isZero() ? primitiveNormalized(c) : gcdAligned(g, c);
    if (g.isConstant()) return one(p.variables());
  }
  return g;
}

Poly primitivePart(const Poly& p, std::string_view var) {
  if (p.isZero()) return p;
  return primitiveNormalized(divideExact(p, content(p, var)));
}

namespace {

Integer maxNorm(const Poly& p) {
  Integer m = 0;
  for (const auto& [e, c] : p.terms()) m = std::max(m, Integer(abs(c.get_num())));
  return m;
}

// Integer content of a polynomial with integer coefficients.
Integer integerContent(const Poly& p) {
  Integer g = 0;
  for (const auto& [e, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

std::optional<Poly> heuristicGcd(const Poly& a, const Poly& b, int depth);

// gcd of integer polynomials including the integer content.
std::optional<Poly> heuristicGcdWithContent(const Poly& a, const Poly& b, int depth) {
  const Integer ca = integerContent(a);
  const Integer cb = integerContent(b);
  Integer c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  auto g = heuristicGcd(a * Rational(1 / Rational(ca)), b * Rational(1 / Rational(cb)), depth + 1);
  if (!g) return std::nullopt;
  return *g * Rational(c);
}

// Heuristic gcd (evaluate the main variable at a large integer, recurse, read
// the result back from balanced xi-adic digits, verify by division). Inputs
// are aligned, nonzero, with coprime integer coefficients.
std::optional<Poly> heuristicGcd(const Poly& a, const Poly& b, int depth) {
  const auto& vars = a.variables();
  const auto used = unionVariables(a.usedVariables(), b.usedVariables());
  if (used.empty()) return one(vars);
  if (depth > 8) return std::nullopt;
  const std::string v = used.back();
  Integer xi = 2 * std::min(maxNorm(a), maxNorm(b)) + 29;
  for (int round = 0; round < 6; ++round) {
    const Poly ea = substitute(a, v, Rational(xi));
    const Poly eb = substitute(b, v, Rational(xi));
    if (ea.isZero() || eb.isZero()) return std::nullopt;
    auto h = heuristicGcdWithContent(ea, eb, depth);
    if (!h) return std::nullopt;
    Poly rest = *h;
    Poly out(vars);
    const Integer half = xi / 2;
    for (unsigned i = 0; !rest.isZero(); ++i) {
      Poly::TermMap digits;
      for (const auto& [e, c] : rest.terms()) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), c.get_num_mpz_t(), xi.get_mpz_t());
        if (r > half) r -= xi;
        if (r != 0) digits.emplace(e, Rational(r));
      }
      const Poly digit(rest.variables(), std::move(digits));
      out += digit.alignedTo(vars) * pow(Poly::variable(v, vars), i);
      rest = (rest - digit) * Rational(1 / Rational(xi));
    }
    if (!out.isZero()) {
      out = primitiveNormalized(out);
      if (tryDivide(a, out) && tryDivide(b, out)) return out;
    }
    Integer s;
    mpz_sqrt(s.get_mpz_t(), xi.get_mpz_t());
    mpz_sqrt(s.get_mpz_t(), s.get_mpz_t());
    xi = xi * 73794 * s / 27011;
  }
  return std::nullopt;
}

Poly gcdAligned(const Poly& a, const Poly& b) {
  const auto& vars = a.variables();
  if (a.isZero()) return primitiveNormalized(b);
  if (b.isZero()) return primitiveNormalized(a);
  if (a.isConstant() || b.isConstant()) return one(vars);
  if (auto h = heuristicGcd(primitiveNormalized(a), primitiveNormalized(b), 0)) return primitiveNormalized(*h);

  const auto used = unionVariables(a.usedVariables(), b.usedVariables());
  if (used.size() == 1) {
    const UPoly g = gcd(UPoly::fromPoly(a), UPoly::fromPoly(b));
    return primitiveNormalized(g.toPoly(used.front()).alignedTo(vars));
  }
  // Main variable: the last used one, so recursion peels variables from the end.
  const std::string v = used.back();
  const int da = a.degreeIn(v);
  const int db = b.degreeIn(v);
  if (da == 0) return gcdAligned(a, content(b, v));
  if (db == 0) return gcdAligned(content(a, v), b);

  const Poly ca = content(a, v);
  const Poly cb = content(b, v);
  const Poly c = gcdAligned(ca, cb);
  Poly p = primitiveNormalized(divideExact(a, ca));
  Poly q = primitiveNormalized(divideExact(b, cb));
  if (p.degreeIn(v) < q.degreeIn(v)) std::swap(p, q);
  for (;;) {
    Poly r = pseudoRemainder(p, q, v);
    if (r.isZero()) break;
    if (r.degreeIn(v) == 0) {
      q = one(vars);
      break;
    }
    p = std::move(q);
    q = primitivePart(r, v);
  }
  return primitiveNormalized(c * q);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  const auto vars = unionVariables(a.variables(), b.variables());
  return gcdAligned(a.alignedTo(vars), b.alignedTo(vars));
}

Poly radical(const Poly& p) {
  if (p.isZero()) throwInput("zero_polynomial", "radical of the zero polynomial");
  Poly g = p;
  for (const auto& v : p.usedVariables()) {
    g = gcd(g, differentiate(p, v));
    if (g.isConstant()) break;
  }
  return primitiveNormalized(divideExact(p, g));
}

bool isSquarefree(const Poly& p) {
  if (p.isZero()) return false;
  Poly g = p;
  for (const auto& v : p.usedVariables()) {
    g = gcd(g, differentiate(p, v));
    if (g.isConstant()) return true;
  }
  return g.isConstant();
}

}  // namespace polar::elim
