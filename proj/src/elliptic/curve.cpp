#include "realforms/elliptic/curve.hpp"

#include "realforms/errors.hpp"

namespace realforms {

CubicCurve::CubicCurve(const Rational& c2, const Rational& c1, const Rational& c0)
    : c2_(c2), c1_(c1), c0_(c0) {
  f_ = Polynomial({c0, c1, c2, Rational(1)});
  df_ = f_.derivative();
  Rational b2 = 4 * c2, b4 = 2 * c1, b6 = 4 * c0;
  Rational b8 = 4 * c2 * c0 - c1 * c1;
  Rational c4 = b2 * b2 - 24 * b4;
  disc_ = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
  if (sgn(disc_) == 0)
    throw ZeroDiscriminant("singular cubic: F = " + f_.to_string() + " has a repeated root");
  j_ = c4 * c4 * c4 / disc_;
  roots_ = AlgebraicNumber::real_roots(f_);
}

CubicCurve CubicCurve::from_roots(const Rational& a1, const Rational& a2, const Rational& a3) {
  return CubicCurve(-(a1 + a2 + a3), a1 * a2 + a1 * a3 + a2 * a3, -a1 * a2 * a3);
}

CurveProperties curve_properties(const CubicCurve& curve) {
  return {curve.discriminant(), curve.component_count(), curve.j_invariant(),
          curve.aut_gp_is_Z2()};
}

}  // namespace realforms
