#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polarlib/rational.hpp"

namespace polar {

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order, descending: larger total degree first, ties
/// broken lexicographically with the first variable most significant.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// The variable list is explicit and ordered; every exponent vector has one
/// entry per variable. Zero coefficients are never stored, so two polynomials
/// over the same variable list are equal iff their term maps are equal.
/// Binary operations on polynomials over different variable lists align the
/// operands by name first (left operand's variables, then the new ones).
class Poly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  Poly() = default;
  explicit Poly(std::vector<std::string> variables);
  Poly(std::vector<std::string> variables, TermMap terms);

  static Poly constant(const Rational& c, std::vector<std::string> variables = {});
  /// The polynomial `name`; `name` is appended to `variables` if missing.
  static Poly variable(const std::string& name, std::vector<std::string> variables = {});

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool isZero() const noexcept { return terms_.empty(); }
  bool isConstant() const noexcept;

  std::optional<std::size_t> indexOf(std::string_view name) const;
  bool hasVariable(std::string_view name) const { return indexOf(name).has_value(); }
  /// Variables that occur with a positive exponent, in variable-list order.
  std::vector<std::string> usedVariables() const;

  int totalDegree() const;
  /// Degree in one variable; 0 when the variable is not in the list.
  int degreeIn(std::string_view name) const;
  bool isHomogeneous() const;
  /// Coefficient of the grlex-leading term (0 for the zero polynomial).
  Rational leadingCoefficient() const;
  Rational constantTerm() const;

  /// Re-expresses the polynomial over `variables`. Throws if a variable that
  /// actually occurs is missing from the target list.
  Poly alignedTo(const std::vector<std::string>& variables) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  /// Canonical text form: grlex-descending terms, e.g. "3/2*x^2*y - x + 1".
  /// The output parses back to the same polynomial.
  std::string toString() const;

 private:
  void addTerm(const Exponents& e, const Rational& c);

  std::vector<std::string> vars_;
  TermMap terms_;
};

std::vector<std::string> unionVariables(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b);

Poly differentiate(const Poly& p, std::string_view var);

/// Exact value at a point binding every variable in p's variable list.
Rational evaluate(const Poly& p, const std::map<std::string, Rational>& point);

/// Substitutes a value for `var` and drops it from the variable list.
Poly substitute(const Poly& p, std::string_view var, const Rational& value);
/// Substitutes a polynomial for `var`; the result is over the union of the
/// remaining variables and those of `value`.
Poly substitute(const Poly& p, std::string_view var, const Poly& value);

/// Homogenizes with a fresh variable appended to the list.
Poly homogenize(const Poly& p, const std::string& newVar);
/// Sets `var` to 1 and removes it; p must be homogeneous.
Poly dehomogenize(const Poly& p, std::string_view var);

Poly pow(const Poly& p, unsigned k);

/// Coefficients of p viewed as a polynomial in `var`: entry k multiplies
/// var^k. The coefficients keep p's variable list (with var's exponent 0).
std::vector<Poly> coefficientsIn(const Poly& p, std::string_view var);
Poly fromCoefficients(const std::vector<Poly>& coeffs, std::string_view var);

/// Exact quotient a/b if b divides a, otherwise nullopt.
std::optional<Poly> tryDivide(const Poly& a, const Poly& b);
/// Exact quotient; throws a consistency error when b does not divide a.
Poly divideExact(const Poly& a, const Poly& b);

/// Scales p by a rational so that its coefficients are coprime integers
/// and the leading coefficient is positive. Zero stays zero.
Poly primitiveNormalized(const Poly& p);

/// Parses the polynomial grammar used throughout the CLI:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*        ('/' only by constants)
///   factor := ('+'|'-') factor | atom ('^' integer)?
///   atom   := integer | variable | '(' expr ')'
/// Variables match [a-zA-Z][a-zA-Z0-9]*. Without `variables` the list is
/// inferred in first-appearance order; with it, unknown names are errors.
Poly parsePolynomial(std::string_view text,
                     const std::optional<std::vector<std::string>>& variables = std::nullopt);

}  // namespace polar
