#pragma once

#include "realforms/elliptic/point.hpp"

namespace realforms {

enum class GroupOpKind { Add, Negate, ScalarMul };

/// Chord-tangent law with the point at infinity as neutral element. Exact on
/// rational inputs. Throws PrecisionExhausted when the chord/tangent case
/// cannot be decided within the policy's ceiling.
CurvePoint add(const CubicCurve& curve, const CurvePoint& p, const CurvePoint& q,
               const PrecisionPolicy& policy = {});
CurvePoint negate(const CurvePoint& p);
CurvePoint subtract(const CubicCurve& curve, const CurvePoint& p, const CurvePoint& q,
                    const PrecisionPolicy& policy = {});
CurvePoint double_point(const CubicCurve& curve, const CurvePoint& p);
CurvePoint scalar_mul(const CubicCurve& curve, const CurvePoint& p, const Integer& n,
                      const PrecisionPolicy& policy = {});

/// Dispatcher; `q` is ignored for Negate and ScalarMul, `n` only used by ScalarMul.
CurvePoint group_op(const CubicCurve& curve, const CurvePoint& p, const CurvePoint& q,
                    GroupOpKind kind, const Integer& n = 0, const PrecisionPolicy& policy = {});

/// Exact equality when decidable from the representation, otherwise by
/// separating enclosures (PrecisionExhausted if they never separate).
bool points_equal(const CurvePoint& p, const CurvePoint& q, const PrecisionPolicy& policy = {});

/// Coordinates agree within 2^-tol_bits. Throws PrecisionExhausted when the
/// enclosures straddle the tolerance at the ceiling.
bool approx_equal(const CurvePoint& p, const CurvePoint& q, long tol_bits,
                  const PrecisionPolicy& policy = {});

}  // namespace realforms
