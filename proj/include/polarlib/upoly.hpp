#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polarlib/poly.hpp"

namespace polar::elim {

/// Dense univariate polynomial over Q, coefficients stored low to high.
/// Used internally for gcds, squarefree work and root extraction.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  /// Throws unless p involves at most one variable.
  static UPoly fromPoly(const Poly& p);
  Poly toPoly(const std::string& var) const;

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool isZero() const noexcept { return c_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero when both inputs are zero).
UPoly gcd(UPoly a, UPoly b);
/// Distinct rational roots in increasing order.
std::vector<Rational> rationalRoots(const UPoly& p);

/// The single variable p depends on, or its only listed variable, or "x".
std::string mainVariable(const Poly& p);

}  // namespace polar::elim
