#pragma once

#include <string>
#include <variant>
#include <vector>

#include "realforms/elliptic/torsion.hpp"

namespace realforms {

/// Evidence that no n != 0 with max|n_i| <= bound has sum n_i P_i = O.
struct IndependenceWitness {
  std::vector<CurvePoint> points;
  long bound = 0;
  std::string method;  // "enumeration" or "lattice"
  long precision_bits = 0;
  long scale_bits = 0;  // lattice method: log2 of the scale C
  std::vector<int> component_bits;
  std::vector<TorsionEvidence> torsion;
  /// Lattice method: certified lower bound for squared lengths of nonzero
  /// lattice vectors, and the squared length any bounded relation would have.
  Rational min_norm;
  Rational relation_norm;
};

struct RelationFound {
  std::vector<Integer> coefficients;
  std::string confirmation;  // "exact", "elliptic-log", "torsion"
};

using IndependenceResult = std::variant<IndependenceWitness, RelationFound>;

/// Points must be real on a two-component curve. Torsion is checked first.
IndependenceResult independence_witness(const CubicCurve& curve,
                                        const std::vector<CurvePoint>& points, long bound,
                                        const PrecisionPolicy& policy = {},
                                        long torsion_max_order = 200);

/// Recomputes the search recorded in the witness at its recorded precision and
/// scale and checks it reaches the same conclusion.
bool replay_independence(const CubicCurve& curve, const IndependenceWitness& w);

/// Enumeration is used when (2N+1)^s is at most this many vectors.
inline constexpr double kEnumerationLimit = 1e5;

}  // namespace realforms
