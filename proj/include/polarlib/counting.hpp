#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polarlib/poly.hpp"

namespace polar::counting {

struct SingularPoint {
  Rational x;
  Rational y;
  std::optional<int> milnor;           // mu^(n)
  std::optional<int> sectionalMilnor;  // mu^(n-1)
};

struct SingularScan {
  std::vector<SingularPoint> points;  // rational affine singular points, sorted
  /// Eliminant factors (in x after the shear x -> x + shear*y) whose roots are
  /// irrational candidate singular abscissae; empty when everything resolved.
  std::vector<Poly> unresolved;
  Rational shear;
};

/// One data point (or pole) worth of counting. The ledger
/// rawDegree = count + sum(subtracted) holds for every recorded trial.
struct CountTrial {
  int index = 0;
  int attempt = 0;
  std::uint64_t seed = 0;
  std::vector<Rational> point;  // data point (ED) or pole (polar)
  int rawDegree = 0;
  int atInfinity = 0;           // multiplicity on the line at infinity
  std::vector<int> subtracted;  // one entry per singular point
  int residualDegree = 0;       // affine part left after all subtractions
  bool residualSquarefree = false;
  int count = 0;
  bool resolved = false;        // false when no attempt produced a clean count
};

struct CountReport {
  int count = 0;
  std::vector<CountTrial> trials;
  bool stable = false;
  std::optional<int> expectedGeneric;
  bool deviatesFromGeneric = false;
  int atInfinity = 0;
  std::vector<std::string> warnings;
};

struct CountConfig {
  int trials = 2;
  int maxRetries = 5;
  bool parallel = true;
  bool throwOnUnstable = true;
};

/// Distinct common solutions in the affine plane of two bivariate
/// polynomials, counted via a random shear and checked with a second one.
int countCommonRoots(const Poly& f, const Poly& g, std::uint64_t shearSeed);

/// Affine singular points with rational coordinates. F must be squarefree.
SingularScan singularPointsCurve(const Poly& F);

/// ED-critical points of a plane curve, counted on the projective closure
/// with multiplicity and with the singular-point contributions removed.
CountReport edDegreeCount(const Poly& F, const std::vector<SingularPoint>& sing, std::uint64_t seed,
                          const CountConfig& config = {});

/// Smooth points of F on its first polar with respect to `pole`
/// (coordinates paired with x, y and the homogenizing variable).
CountReport polarClassCount(const Poly& F, const std::array<Rational, 3>& pole, std::uint64_t seed,
                            const CountConfig& config = {});

}  // namespace polar::counting
