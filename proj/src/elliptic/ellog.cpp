#include "realforms/elliptic/ellog.hpp"

#include <cmath>
#include <optional>

#include "realforms/elliptic/group.hpp"
#include "realforms/errors.hpp"

namespace realforms {

Interval carlson_rf(const Interval& x0, const Interval& y0, const Interval& z0, mpfr_prec_t prec) {
  Interval x = x0.clamp_nonnegative(), y = y0.clamp_nonnegative(), z = z0.clamp_nonnegative();
  Interval quarter(Rational(1, 4), prec), one(1L, prec);
  std::optional<Interval> best;
  for (long it = 0; it < 4 * prec; ++it) {
    Interval h = Interval::hull(Interval::hull(x, y), z);
    if (h.is_positive()) {
      // R_F lies between 1/sqrt(max) and 1/sqrt(min) of its arguments.
      Interval big(h.upper(), prec), small(h.lower(), prec);
      Interval bound = Interval::hull(one / sqrt(big), one / sqrt(small));
      if (!best || bound.width_log2() < best->width_log2()) best = bound;
      if (bound.width_log2() - std::log2(bound.upper_double()) < -static_cast<double>(prec - 24))
        return bound;
    }
    Interval sx = sqrt(x), sy = sqrt(y), sz = sqrt(z);
    Interval lam = sx * sy + sy * sz + sz * sx;
    x = (x + lam) * quarter;
    y = (y + lam) * quarter;
    z = (z + lam) * quarter;
  }
  if (!best) throw InsufficientPrecision("R_F did not converge");
  return *best;
}

Interval real_period(const CubicCurve& curve, mpfr_prec_t prec) {
  if (curve.component_count() != 2)
    throw PreconditionViolated("real period is only implemented for two-component curves");
  const auto& r = curve.real_roots();
  Interval a1 = r[0].enclose(prec), a2 = r[1].enclose(prec), a3 = r[2].enclose(prec);
  return Interval(4L, prec) * carlson_rf(a3 - a1, a3 - a2, Interval(0L, prec), prec);
}

EllipticLog elliptic_log(const CubicCurve& curve, const CurvePoint& p, mpfr_prec_t prec) {
  if (curve.component_count() != 2)
    throw PreconditionViolated("elliptic log is only implemented for two-component curves");
  EllipticLog out{Interval(0L, prec), 0};
  if (p.is_infinity()) return out;
  CurvePoint q = p;
  PrecisionPolicy local{static_cast<long>(prec), static_cast<long>(prec)};
  if (component_of(curve, p, local) == Component::Oval) {
    out.component = 1;
    CurvePoint t1 = CurvePoint::affine(Real(curve.real_roots()[0]), Real(0L));
    if (compare(p.x(), t1.x(), local) == 0) return out;
    q = add(curve, p, t1, local);
  }
  if (q.is_infinity()) return out;
  if (q.y().is_exact_zero()) {
    out.t = Interval(Rational(1, 2), prec);
    return out;
  }
  const auto& r = curve.real_roots();
  Interval x = q.x().enclose(prec);
  Interval a1 = r[0].enclose(prec), a2 = r[1].enclose(prec), a3 = r[2].enclose(prec);
  Interval integral = Interval(2L, prec) * carlson_rf(x - a1, x - a2, x - a3, prec);
  Interval omega = real_period(curve, prec);
  Interval frac = integral / omega;
  Interval y = q.y().enclose(prec);
  if (y.is_positive())
    out.t = frac;
  else if (y.is_negative())
    out.t = Interval(1L, prec) - frac;
  else
    throw InsufficientPrecision("sign of y undecided");
  return out;
}

CurvePoint point_at_parameter(const CubicCurve& curve, const Rational& t, long den_bits) {
  if (!(t > 0 && t < 1) || t == Rational(1, 2))
    throw PreconditionViolated("parameter must lie in (0,1) minus {1/2}");
  const mpfr_prec_t prec = 128;
  Interval omega = real_period(curve, prec);
  Rational target_frac = t < Rational(1, 2) ? t : Rational(1 - t);
  double target = (Interval(target_frac, prec) * omega).mid_double();
  Rational a3 = curve.real_roots()[2].bounds().second;
  auto I = [&](const Rational& x) {
    Interval xi(x, prec);
    const auto& r = curve.real_roots();
    return (Interval(2L, prec) *
            carlson_rf(xi - r[0].enclose(prec), xi - r[1].enclose(prec), xi - r[2].enclose(prec), prec))
        .mid_double();
  };
  Rational lo = a3, hi = a3 + 1;
  while (I(hi) > target) hi = lo + 2 * (hi - lo);
  Rational step(1);
  mpq_div_2exp(step.get_mpq_t(), step.get_mpq_t(), static_cast<mp_bitcnt_t>(den_bits));
  while (hi - lo > step) {
    Rational mid = (lo + hi) / 2;
    if (I(mid) > target)
      lo = mid;
    else
      hi = mid;
  }
  Rational x = dyadic_above(hi, static_cast<unsigned long>(den_bits));
  if (!(curve.real_roots()[2].compare(x) < 0)) x += step;
  return point_from_x(curve, x, t < Rational(1, 2) ? 1 : -1);
}

}  // namespace realforms
