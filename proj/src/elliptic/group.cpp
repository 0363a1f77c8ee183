#include "realforms/elliptic/group.hpp"

#include <stdexcept>

#include "realforms/errors.hpp"

namespace realforms {

CurvePoint CurvePoint::affine(Real x, Real y) {
  CurvePoint p;
  p.inf_ = false;
  p.x_ = std::move(x);
  p.y_ = std::move(y);
  return p;
}

const Real& CurvePoint::x() const {
  if (inf_) throw PreconditionViolated("point at infinity has no affine x");
  return x_;
}

const Real& CurvePoint::y() const {
  if (inf_) throw PreconditionViolated("point at infinity has no affine y");
  return y_;
}

std::optional<std::pair<Rational, Rational>> CurvePoint::rational_coords() const {
  if (inf_) return std::nullopt;
  auto qx = x_.as_rational(), qy = y_.as_rational();
  if (!qx || !qy) return std::nullopt;
  return std::make_pair(*qx, *qy);
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& v) {
  if (sgn(v) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(v.get_num_mpz_t()) || !mpz_perfect_square_p(v.get_den_mpz_t()))
    return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), v.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), v.get_den_mpz_t());
  return Rational(n, d);
}

// F evaluated on a Real.
Real eval_F(const CubicCurve& c, const Real& x) {
  return ((x + Real(c.c2())) * x + Real(c.c1())) * x + Real(c.c0());
}

Real eval_dF(const CubicCurve& c, const Real& x) {
  return (Real(3L) * x + Real(Rational(2 * c.c2()))) * x + Real(c.c1());
}

}  // namespace

CurvePoint point_from_x(const CubicCurve& curve, const Rational& x, int ysign) {
  Rational f = curve.F().eval(x);
  if (sgn(f) < 0)
    throw PreconditionViolated("F(" + to_string(x) + ") < 0: no real point with this abscissa");
  if (sgn(f) == 0) return CurvePoint::affine(Real(x), Real(0L));
  if (ysign == 0) throw PreconditionViolated("y sign required when F(x) != 0");
  if (auto r = rational_sqrt(f)) return CurvePoint::affine(Real(x), Real(ysign > 0 ? *r : -*r));
  auto roots = AlgebraicNumber::real_roots(Polynomial({-f, Rational(0), Rational(1)}));
  return CurvePoint::affine(Real(x), Real(ysign > 0 ? roots[1] : roots[0]));
}

bool on_curve(const CubicCurve& curve, const CurvePoint& p, const PrecisionPolicy& policy) {
  if (p.is_infinity()) return true;
  if (auto rc = p.rational_coords()) return rc->second * rc->second == curve.F().eval(rc->first);
  Real residual = p.y() * p.y() - eval_F(curve, p.x());
  try {
    return policy.run([&](long prec) {
      Interval e = residual.enclose(prec);
      if (!e.contains_zero()) return false;
      if (!e.narrower_than(prec / 2)) throw InsufficientPrecision("residual too wide");
      return true;
    });
  } catch (const PrecisionExhausted&) {
    return false;
  }
}

Component component_of(const CubicCurve& curve, const CurvePoint& p, const PrecisionPolicy& policy) {
  if (p.is_infinity() || curve.component_count() == 1) return Component::Identity;
  int c = compare(p.x(), Real(curve.real_roots()[1]), policy);
  return c <= 0 ? Component::Oval : Component::Identity;
}

CurvePoint negate(const CurvePoint& p) {
  if (p.is_infinity()) return p;
  return CurvePoint::affine(p.x(), -p.y());
}

CurvePoint double_point(const CubicCurve& curve, const CurvePoint& p) {
  if (p.is_infinity() || p.y().is_exact_zero()) return CurvePoint::infinity();
  const Real& x = p.x();
  Real lambda = eval_dF(curve, x) / (Real(2L) * p.y());
  Real x3 = lambda * lambda - Real(curve.c2()) - x - x;
  Real y3 = lambda * (x - x3) - p.y();
  return CurvePoint::affine(x3, y3);
}

CurvePoint add(const CubicCurve& curve, const CurvePoint& p, const CurvePoint& q,
               const PrecisionPolicy& policy) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  if (compare(p.x(), q.x(), policy) == 0) {
    if (p.y().is_exact_zero() || q.y().is_exact_zero()) return CurvePoint::infinity();
    if (p.y().same_node(q.y())) return double_point(curve, p);
    if (compare(p.y(), q.y(), policy) == 0) return double_point(curve, p);
    return CurvePoint::infinity();
  }
  Real lambda = (q.y() - p.y()) / (q.x() - p.x());
  Real x3 = lambda * lambda - Real(curve.c2()) - p.x() - q.x();
  Real y3 = lambda * (p.x() - x3) - p.y();
  return CurvePoint::affine(x3, y3);
}

CurvePoint subtract(const CubicCurve& curve, const CurvePoint& p, const CurvePoint& q,
                    const PrecisionPolicy& policy) {
  return add(curve, p, negate(q), policy);
}

CurvePoint scalar_mul(const CubicCurve& curve, const CurvePoint& p, const Integer& n,
                      const PrecisionPolicy& policy) {
  if (sgn(n) == 0 || p.is_infinity()) return CurvePoint::infinity();
  if (sgn(n) < 0) return negate(scalar_mul(curve, p, Integer(-n), policy));
  CurvePoint acc;
  for (long bit = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
    acc = acc.is_infinity() ? acc : add(curve, acc, acc, policy);
    if (mpz_tstbit(n.get_mpz_t(), bit)) acc = add(curve, acc, p, policy);
  }
  return acc;
}

CurvePoint group_op(const CubicCurve& curve, const CurvePoint& p, const CurvePoint& q,
                    GroupOpKind kind, const Integer& n, const PrecisionPolicy& policy) {
  switch (kind) {
    case GroupOpKind::Add: return add(curve, p, q, policy);
    case GroupOpKind::Negate: return negate(p);
    case GroupOpKind::ScalarMul: return scalar_mul(curve, p, n, policy);
  }
  throw std::logic_error("bad group op");
}

bool points_equal(const CurvePoint& p, const CurvePoint& q, const PrecisionPolicy& policy) {
  if (p.is_infinity() || q.is_infinity()) return p.is_infinity() && q.is_infinity();
  if (compare(p.x(), q.x(), policy) != 0) return false;
  if (p.y().same_node(q.y())) return true;
  return compare(p.y(), q.y(), policy) == 0;
}

namespace {

// |a - b| <= 2^-tol; throws InsufficientPrecision if undecided at prec.
bool within(const Real& a, const Real& b, long tol_bits, long prec) {
  Interval d = (a - b).enclose(prec);
  Rational tol(1);
  mpq_div_2exp(tol.get_mpq_t(), tol.get_mpq_t(), static_cast<mp_bitcnt_t>(tol_bits));
  Rational lo = d.lower(), hi = d.upper();
  if (lo >= -tol && hi <= tol) return true;
  if (lo > tol || hi < -tol) return false;
  throw InsufficientPrecision("tolerance undecided");
}

}  // namespace

bool approx_equal(const CurvePoint& p, const CurvePoint& q, long tol_bits,
                  const PrecisionPolicy& policy) {
  if (p.is_infinity() || q.is_infinity()) return p.is_infinity() && q.is_infinity();
  PrecisionPolicy pol = policy;
  pol.start = std::max(pol.start, tol_bits + 32);
  pol.ceiling = std::max(pol.ceiling, pol.start);
  return pol.run(
      [&](long prec) {
        return within(p.x(), q.x(), tol_bits, prec) && within(p.y(), q.y(), tol_bits, prec);
      },
      "approximate point equality");
}

}  // namespace realforms
