#pragma once

#include <optional>
#include <string>

#include "realforms/elliptic/group.hpp"

namespace realforms {

struct TorsionEvidence {
  std::optional<long> order;  // least n <= max_order with [n]P = O
  std::string method;         // "exact", "elliptic-log", "group-law"
  long precision_bits = 0;    // 0 for exact
  bool proven = false;        // false: bounded evidence only
};

/// Least n <= max_order with [n]P = O. Rational points are decided exactly
/// with orders above 12 excluded over Q. Other points are screened through
/// the elliptic logarithm; a candidate order that survives at the precision
/// ceiling is reported as torsion (bounded evidence).
TorsionEvidence torsion_evidence(const CubicCurve& curve, const CurvePoint& p, long max_order,
                                 const PrecisionPolicy& policy = {});

std::optional<long> torsion_test(const CubicCurve& curve, const CurvePoint& p, long max_order,
                                 const PrecisionPolicy& policy = {});

}  // namespace realforms
