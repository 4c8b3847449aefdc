#include "polarlib/elim.hpp"
#include "polarlib/error.hpp"
#include "polarlib/upoly.hpp"

namespace polar::elim {
namespace {

UPoly requireNonzero(const Poly& p, const char* what) {
  if (p.isZero()) throwInput("zero_polynomial", std::string(what) + " of the zero polynomial");
  return UPoly::fromPoly(p);
}

Poly backTo(const UPoly& u, const Poly& like) { return u.toPoly(mainVariable(like)).alignedTo(like.variables()); }

}  // namespace

Poly SquarefreeDecomposition::reconstruct() const {
  Poly out = Poly::constant(content);
  for (const auto& [f, k] : factors) out *= pow(f, static_cast<unsigned>(k));
  return out;
}

Poly squarefreePart(const Poly& p) {
  const UPoly u = requireNonzero(p, "squarefree part");
  return backTo(divmod(u, gcd(u, u.derivative())).first.monic(), p);
}

SquarefreeDecomposition squarefreeDecompose(const Poly& p) {
  const UPoly u = requireNonzero(p, "squarefree decomposition");
  SquarefreeDecomposition out;
  out.content = u.leading();
  // Yun's algorithm on the monic associate.
  const UPoly f = u.monic();
  const UPoly a0 = gcd(f, f.derivative());
  UPoly b = divmod(f, a0).first;
  UPoly c = divmod(f.derivative(), a0).first;
  UPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const UPoly a = gcd(b, d);
    if (a.degree() > 0) out.factors.emplace_back(backTo(a, p), i);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  return out;
}

int rootMultiplicity(const Poly& p, const Rational& a) {
  UPoly u = requireNonzero(p, "root multiplicity");
  const UPoly lin(std::vector<Rational>{-a, Rational(1)});
  int k = 0;
  for (;;) {
    auto [q, r] = divmod(u, lin);
    if (!r.isZero()) return k;
    u = std::move(q);
    ++k;
  }
}

int countDistinctRoots(const Poly& p) {
  const UPoly u = requireNonzero(p, "root count");
  if (u.degree() <= 0) return 0;
  return divmod(u, gcd(u, u.derivative())).first.degree();
}

std::vector<Rational> rationalRoots(const Poly& p) { return rationalRoots(UPoly::fromPoly(p)); }

}  // namespace polar::elim
