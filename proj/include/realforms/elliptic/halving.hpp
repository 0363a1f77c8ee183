#pragma once

#include <vector>

#include "realforms/elliptic/group.hpp"

namespace realforms {

/// {O, (a1,0), (a2,0), (a3,0)} in ascending x. Throws NotAllReal on a
/// one-component curve.
std::vector<CurvePoint> two_torsion(const CubicCurve& curve);

/// Numerator of x(2P) = A(x) / (4 F(x)).
Polynomial duplication_numerator(const CubicCurve& curve);
/// 3-division polynomial; its roots are the abscissae of the inflection points.
Polynomial psi3(const CubicCurve& curve);

/// All real q with [2]q = s, sorted by ascending x then y sign. Coordinates of
/// s must be exact (rational or algebraic leaves).
std::vector<CurvePoint> halve(const CubicCurve& curve, const CurvePoint& s,
                              const PrecisionPolicy& policy = {});

bool is_two_torsion(const CurvePoint& p);
/// Exact test: p is an affine point whose x is a root of psi3.
bool is_inflection(const CubicCurve& curve, const CurvePoint& p);

/// The four points q whose tangent passes through p, i.e. halve(-p).
/// Throws InflectionPoint, NoRealAssociates (p on the oval), or
/// PreconditionViolated (p is 2-torsion). Infinity is the neutral flex.
std::vector<CurvePoint> associated_points(const CubicCurve& curve, const CurvePoint& p,
                                          const PrecisionPolicy& policy = {});

/// 2 y_q (y_p - y_q) - F'(x_q)(x_p - x_q): zero iff the tangent at q meets p.
Interval tangency_residual(const CubicCurve& curve, const CurvePoint& q, const CurvePoint& p,
                           mpfr_prec_t prec);

/// Sorts by ascending x, ties broken by y sign.
void sort_points(std::vector<CurvePoint>& pts, const PrecisionPolicy& policy = {});

}  // namespace realforms
