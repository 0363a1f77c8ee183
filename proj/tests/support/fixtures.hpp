#pragma once

#include <random>
#include <vector>

#include "realforms/elliptic/group.hpp"
#include "realforms/elliptic/halving.hpp"
#include "realforms/elliptic/point.hpp"

namespace realforms::testing {

inline bool is_square(const Rational& q) {
  if (sgn(q) < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

inline Rational rational_sqrt(const Rational& q) {
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Rational(n, d);
}

/// Rational points with x = n/d^2, |n| <= span, d <= 3, both signs of y.
inline std::vector<CurvePoint> rational_points(const CubicCurve& c, long span = 200) {
  std::vector<CurvePoint> out;
  for (long d = 1; d <= 3; ++d)
    for (long n = -span; n <= span; ++n) {
      Rational x(n, d * d);
      x.canonicalize();
      if (d > 1 && x.get_den() != d * d) continue;
      Rational fx = c.F().eval(x);
      if (!is_square(fx)) continue;
      Rational y = rational_sqrt(fx);
      out.push_back(CurvePoint::affine(Real(x), Real(y)));
      if (sgn(y) != 0) out.push_back(CurvePoint::affine(Real(x), Real(Rational(-y))));
    }
  return out;
}

/// Curves of positive rank with several small rational points.
inline std::vector<CubicCurve> rank_one_curves() {
  return {CubicCurve(0, -36, 0), CubicCurve(0, 0, 17), CubicCurve(0, -1, 1), CubicCurve(0, -2, 2)};
}

/// Two-component curves with j not in {0, 1728}.
inline std::vector<CubicCurve> two_component_curves() {
  return {CubicCurve::from_roots(-1, 0, 2), CubicCurve::from_roots(1, 2, 4),
          CubicCurve::from_roots(Rational(-3), Rational(1, 2), Rational(7, 4)),
          CubicCurve(0, -7, 3), CubicCurve(Rational(-7, 4), Rational(-451, 4), Rational(605, 2))};
}

/// A point with rational abscissa x > largest root (identity component).
inline CurvePoint identity_point(const CubicCurve& c, const Rational& offset, int ysign) {
  auto [lo, hi] = c.real_roots().back().bounds();
  (void)lo;
  Rational x = ceil_of(hi) + offset;
  return point_from_x(c, x, ysign);
}

/// A point with rational abscissa strictly between the two smallest roots.
inline CurvePoint oval_point(const CubicCurve& c, const Rational& frac, int ysign) {
  c.real_roots()[0].refine(40);
  c.real_roots()[1].refine(40);
  Rational a = c.real_roots()[0].bounds().second, b = c.real_roots()[1].bounds().first;
  return point_from_x(c, a + frac * (b - a), ysign);
}

}  // namespace realforms::testing
