#pragma once

#include "realforms/elliptic/point.hpp"

namespace realforms {

/// Real points of a two-component curve as R/Z x Z/2. `t` encloses the
/// identity-component coordinate in [0, 1); `component` is 1 on the oval.
struct EllipticLog {
  Interval t;
  int component = 0;
};

/// Enclosure of Carlson's R_F(x, y, z) for nonnegative arguments, at most one zero.
Interval carlson_rf(const Interval& x, const Interval& y, const Interval& z, mpfr_prec_t prec);

/// Full real period: integral of dx / sqrt(F) over the identity component.
Interval real_period(const CubicCurve& curve, mpfr_prec_t prec);

/// Throws InsufficientPrecision if the enclosure cannot be formed at prec, and
/// PreconditionViolated on a one-component curve.
EllipticLog elliptic_log(const CubicCurve& curve, const CurvePoint& p, mpfr_prec_t prec);

/// Identity-component point with elliptic log t (0 < t < 1, t != 1/2), with
/// abscissa rounded to a rational of denominator at most 2^den_bits.
CurvePoint point_at_parameter(const CubicCurve& curve, const Rational& t, long den_bits);

}  // namespace realforms
