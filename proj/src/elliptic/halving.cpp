#include "realforms/elliptic/halving.hpp"

#include <algorithm>

#include "realforms/errors.hpp"

namespace realforms {

namespace {

Real F_of(const CubicCurve& c, const Real& x) {
  return ((x + Real(c.c2())) * x + Real(c.c1())) * x + Real(c.c0());
}

Real dF_of(const CubicCurve& c, const Real& x) {
  return (Real(3L) * x + Real(Rational(2 * c.c2()))) * x + Real(c.c1());
}

// y = sign * sqrt(F(x)) as an algebraic number, for a real algebraic x with F(x) > 0.
AlgebraicNumber sqrt_F(const CubicCurve& curve, const AlgebraicNumber& x, int sign,
                       const PrecisionPolicy& policy) {
  if (x.is_rational()) {
    auto pt = point_from_x(curve, x.rational_value(), sign);
    return *pt.y().as_algebraic();
  }
  Polynomial n = image_polynomial(x.polynomial(), curve.F());
  Polynomial g = n.compose(Polynomial({Rational(0), Rational(0), Rational(1)}));
  std::vector<AlgebraicNumber> cands;
  for (auto& r : AlgebraicNumber::real_roots(g))
    if (r.sign() == sign) cands.push_back(r);
  if (cands.size() == 1) return cands[0];
  return policy.run(
      [&](long prec) {
        Interval target = sqrt(curve.F().eval(x.enclose(prec)));
        if (sign < 0) target = -target;
        const AlgebraicNumber* hit = nullptr;
        int hits = 0;
        for (const auto& c : cands)
          if (c.enclose(prec).overlaps(target)) {
            hit = &c;
            ++hits;
          }
        if (hits == 0) throw PreconditionViolated("sqrt(F(x)) matches no conjugate");
        if (hits > 1) throw InsufficientPrecision("conjugates not yet separated");
        return *hit;
      },
      "isolating a half-point ordinate");
}

// Decides whether the algebraic value v (a root of xs's polynomial) equals xs,
// given an enclosure function for v.
template <class Enc>
bool matches_root(const AlgebraicNumber& xs, Enc&& enc, const PrecisionPolicy& policy) {
  if (xs.is_rational()) return true;
  // v is some real root of the defining polynomial of xs; it is xs once it
  // is separated from every other root.
  std::vector<AlgebraicNumber> others;
  for (const auto& rho : AlgebraicNumber::real_roots(xs.polynomial()))
    if (!(rho == xs)) others.push_back(rho);
  return policy.run(
      [&](long prec) {
        Interval v = enc(prec);
        if (!v.overlaps(xs.enclose(prec))) return false;
        for (const auto& rho : others)
          if (v.overlaps(rho.enclose(prec))) throw InsufficientPrecision("undecided");
        return true;
      },
      "matching a halving root");
}

}  // namespace

std::vector<CurvePoint> two_torsion(const CubicCurve& curve) {
  if (curve.component_count() != 2)
    throw NotAllReal("curve has one real component: only one real 2-torsion point");
  std::vector<CurvePoint> out{CurvePoint::infinity()};
  for (const auto& a : curve.real_roots()) out.push_back(CurvePoint::affine(Real(a), Real(0L)));
  return out;
}

Polynomial duplication_numerator(const CubicCurve& c) {
  return Polynomial({c.c1() * c.c1() - 4 * c.c2() * c.c0(), Rational(-8 * c.c0()),
                     Rational(-2 * c.c1()), Rational(0), Rational(1)});
}

Polynomial psi3(const CubicCurve& c) {
  return Polynomial({4 * c.c2() * c.c0() - c.c1() * c.c1(), Rational(12 * c.c0()),
                     Rational(6 * c.c1()), Rational(4 * c.c2()), Rational(3)});
}

bool is_two_torsion(const CurvePoint& p) { return !p.is_infinity() && p.y().is_exact_zero(); }

bool is_inflection(const CubicCurve& curve, const CurvePoint& p) {
  if (p.is_infinity()) return true;
  Polynomial ps = psi3(curve);
  if (auto x = p.x().as_algebraic()) {
    for (const auto& r : AlgebraicNumber::real_roots(ps))
      if (r == *x) return true;
    return false;
  }
  PrecisionPolicy pol;
  return pol.run([&](long prec) {
    Interval e = ps.eval(p.x().enclose(prec));
    if (!e.contains_zero()) return false;
    throw InsufficientPrecision("psi3 undecided");
  });
}

std::vector<CurvePoint> halve(const CubicCurve& curve, const CurvePoint& s,
                              const PrecisionPolicy& policy) {
  std::vector<CurvePoint> out;
  if (s.is_infinity()) {
    out.push_back(CurvePoint::infinity());
    for (const auto& a : curve.real_roots()) out.push_back(CurvePoint::affine(Real(a), Real(0L)));
    return out;
  }
  auto xs_opt = s.x().as_algebraic();
  if (!xs_opt) throw PreconditionViolated("halve needs a point whose abscissa is an exact leaf");
  const AlgebraicNumber& xs = *xs_opt;

  Polynomial m = xs.polynomial().monic();
  Polynomial A = duplication_numerator(curve);
  Polynomial F4 = curve.F() * Rational(4);
  int e = m.degree();
  Polynomial H;
  for (int k = 0; k <= e; ++k) H += m.coeff(k) * A.pow(k) * F4.pow(e - k);

  bool torsion_target = s.y().is_exact_zero();
  for (const auto& X : AlgebraicNumber::real_roots(H)) {
    bool root_of_F = false;
    for (const auto& a : curve.real_roots())
      if (a == X) root_of_F = true;
    if (root_of_F) continue;
    bool hit = matches_root(
        xs,
        [&](long prec) {
          Interval xe = X.enclose(prec);
          return A.eval(xe) / F4.eval(xe);
        },
        policy);
    if (!hit) continue;
    int fsign = policy.run([&](long prec) {
      Interval f = curve.F().eval(X.enclose(prec));
      if (f.is_positive()) return 1;
      if (f.is_negative()) return -1;
      throw InsufficientPrecision("sign of F");
    });
    if (fsign < 0) continue;
    if (torsion_target) {
      out.push_back(CurvePoint::affine(Real(X), Real(sqrt_F(curve, X, -1, policy))));
      out.push_back(CurvePoint::affine(Real(X), Real(sqrt_F(curve, X, 1, policy))));
      continue;
    }
    Real xq(X);
    Real y_expr = -(Real(2L) * F_of(curve, xq) + dF_of(curve, xq) * (s.x() - xq)) /
                  (Real(2L) * s.y());
    int ysign = sign(y_expr, policy);
    out.push_back(CurvePoint::affine(xq, Real(sqrt_F(curve, X, ysign, policy))));
  }
  sort_points(out, policy);
  return out;
}

std::vector<CurvePoint> associated_points(const CubicCurve& curve, const CurvePoint& p,
                                          const PrecisionPolicy& policy) {
  if (p.is_infinity()) throw InflectionPoint("the neutral point is an inflection point");
  if (is_two_torsion(p)) throw PreconditionViolated("associated points of a 2-torsion point");
  if (is_inflection(curve, p)) throw InflectionPoint("point is 3-torsion (inflection)");
  auto qs = halve(curve, negate(p), policy);
  if (qs.empty())
    throw NoRealAssociates("no real associated points: the point lies on the compact oval");
  return qs;
}

Interval tangency_residual(const CubicCurve& curve, const CurvePoint& q, const CurvePoint& p,
                           mpfr_prec_t prec) {
  Interval xq = q.x().enclose(prec), yq = q.y().enclose(prec);
  Interval xp = p.x().enclose(prec), yp = p.y().enclose(prec);
  return Interval(2L, prec) * yq * (yp - yq) - curve.dF().eval(xq) * (xp - xq);
}

void sort_points(std::vector<CurvePoint>& pts, const PrecisionPolicy& policy) {
  std::stable_sort(pts.begin(), pts.end(), [&](const CurvePoint& a, const CurvePoint& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && !b.is_infinity();
    int c = compare(a.x(), b.x(), policy);
    if (c != 0) return c < 0;
    int sa = a.y().is_exact_zero() ? 0 : sign(a.y(), policy);
    int sb = b.y().is_exact_zero() ? 0 : sign(b.y(), policy);
    return sa < sb;
  });
}

}  // namespace realforms
