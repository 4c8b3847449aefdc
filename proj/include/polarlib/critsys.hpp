#pragma once

#include <string>
#include <vector>

#include "polarlib/bareiss.hpp"
#include "polarlib/poly.hpp"

namespace polar::critsys {

/// The quadric that defines orthogonality for reciprocal polars.
struct QuadricSpec {
  enum class Kind { General, Euclidean };

  Kind kind = Kind::Euclidean;
  Poly q;                       // General: homogeneous of degree 2
  std::string homogenizingVar;  // General: the x0 of q
  std::vector<Rational> center; // Euclidean: a1..an

  static QuadricSpec general(Poly q, std::string homogenizingVar = "x0");
  static QuadricSpec euclidean(std::vector<Rational> center);
};

/// X = Z(F1..Fr) in affine n-space, of expected dimension `dim`.
struct PolySystem {
  std::vector<Poly> equations;
  int dim = 0;
  std::vector<std::string> variables;

  /// Validates r >= n - m and 0 <= m < n. Without `variables` the list is the
  /// union of the equations' lists.
  static PolySystem make(std::vector<Poly> equations, int dim,
                         std::vector<std::string> variables = {});
  int ambient() const { return static_cast<int>(variables.size()); }
};

using DataPoint = std::vector<Rational>;

struct CriticalMatrix {
  elim::PolyMatrix rows;  // row 0: quadric row, rows 1..r: gradients
  int minorSize = 0;
  std::vector<std::string> warnings;
};

CriticalMatrix buildReciprocalMatrix(const PolySystem& sys, const QuadricSpec& quad);
CriticalMatrix buildEDMatrix(const PolySystem& sys, const DataPoint& data);

/// All minorSize-minors, ordered lexicographically by (row set, column set).
std::vector<Poly> minors(const CriticalMatrix& mat);

struct PlaneEDSystem {
  Poly F;
  Poly G;  // (x - u1) F_y - (y - u2) F_x
  bool degenerate = false;  // G identically zero
};

PlaneEDSystem planeCurveEDSystem(const Poly& F, const DataPoint& data);

/// The two coordinate names of a plane curve (or pair of curves), padding
/// with "x"/"y" when fewer are listed; x always precedes y. Throws when more
/// than two occur.
std::vector<std::string> planeVariables(const Poly& a, const Poly& b = Poly());

}  // namespace polar::critsys
