#pragma once

#include <vector>

#include "realforms/numeric/algebraic.hpp"
#include "realforms/numeric/polynomial.hpp"
#include "realforms/numeric/rational.hpp"

namespace realforms {

/// y^2 = F(x) = x^3 + c2 x^2 + c1 x + c0 over Q, smooth.
class CubicCurve {
 public:
  /// Throws ZeroDiscriminant if F has a repeated root.
  CubicCurve(const Rational& c2, const Rational& c1, const Rational& c0);
  /// y^2 = (x - a1)(x - a2)(x - a3).
  static CubicCurve from_roots(const Rational& a1, const Rational& a2, const Rational& a3);

  const Rational& c2() const { return c2_; }
  const Rational& c1() const { return c1_; }
  const Rational& c0() const { return c0_; }
  const Polynomial& F() const { return f_; }
  const Polynomial& dF() const { return df_; }

  /// Weierstrass discriminant from the b-invariants; equals 16 disc(F).
  const Rational& discriminant() const { return disc_; }
  const Rational& j_invariant() const { return j_; }
  int component_count() const { return disc_ > 0 ? 2 : 1; }
  /// Group automorphisms fixing the neutral point are only +-1.
  bool aut_gp_is_Z2() const { return j_ != 0 && j_ != 1728; }

  /// Real roots of F in ascending order (1 or 3 of them).
  const std::vector<AlgebraicNumber>& real_roots() const { return roots_; }

  friend bool operator==(const CubicCurve& a, const CubicCurve& b) {
    return a.c2_ == b.c2_ && a.c1_ == b.c1_ && a.c0_ == b.c0_;
  }

 private:
  Rational c2_, c1_, c0_;
  Polynomial f_, df_;
  Rational disc_, j_;
  std::vector<AlgebraicNumber> roots_;
};

struct CurveProperties {
  Rational discriminant;
  int component_count;
  Rational j_invariant;
  bool aut_gp_is_Z2;
};

CurveProperties curve_properties(const CubicCurve& curve);

}  // namespace realforms
