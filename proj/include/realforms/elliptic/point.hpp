#pragma once

#include <optional>
#include <utility>

#include "realforms/elliptic/curve.hpp"
#include "realforms/numeric/real.hpp"

namespace realforms {

/// Point at infinity (the neutral inflection point) or an affine real point.
class CurvePoint {
 public:
  CurvePoint() = default;  // infinity
  static CurvePoint infinity() { return CurvePoint(); }
  static CurvePoint affine(Real x, Real y);

  bool is_infinity() const { return inf_; }
  const Real& x() const;
  const Real& y() const;

  /// Both coordinates exact rationals.
  std::optional<std::pair<Rational, Rational>> rational_coords() const;
  bool is_rational() const { return inf_ || rational_coords().has_value(); }

 private:
  bool inf_ = true;
  Real x_, y_;
};

enum class Component { Identity, Oval };

/// The point with the given rational abscissa; y is sqrt(F(x)) with the sign
/// of `ysign` (ignored when F(x) = 0). Throws PreconditionViolated if F(x) < 0.
CurvePoint point_from_x(const CubicCurve& curve, const Rational& x, int ysign);

/// y^2 - F(x) vanishes exactly (rational points) or its enclosure contains 0.
bool on_curve(const CubicCurve& curve, const CurvePoint& p, const PrecisionPolicy& policy = {});

/// Identity component (x >= largest root, or infinity) vs compact oval.
Component component_of(const CubicCurve& curve, const CurvePoint& p,
                       const PrecisionPolicy& policy = {});

}  // namespace realforms
