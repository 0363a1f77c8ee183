#include <gtest/gtest.h>

#include "realforms/elliptic/group.hpp"
#include "realforms/elliptic/halving.hpp"
#include "realforms/errors.hpp"
#include "support/fixtures.hpp"

using namespace realforms;
using namespace realforms::testing;

namespace {

CurvePoint pt(const Rational& x, const Rational& y) { return CurvePoint::affine(Real(x), Real(y)); }

bool residual_contains_zero(const CurvePoint& a, const CurvePoint& b, mpfr_prec_t prec) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && b.is_infinity();
  return (a.x() - b.x()).enclose(prec).contains_zero() && (a.y() - b.y()).enclose(prec).contains_zero();
}

}  // namespace

TEST(TwoTorsion, RationalRoots) {
  auto t = two_torsion(CubicCurve::from_roots(1, 2, 3));
  ASSERT_EQ(t.size(), 4u);
  EXPECT_TRUE(t[0].is_infinity());
  for (int k = 1; k <= 3; ++k) EXPECT_TRUE(points_equal(t[static_cast<size_t>(k)], pt(k, 0)));
}

TEST(TwoTorsion, XCubedMinusFourX) {
  auto t = two_torsion(CubicCurve(0, -4, 0));
  EXPECT_TRUE(points_equal(t[1], pt(-2, 0)));
  EXPECT_TRUE(points_equal(t[2], pt(0, 0)));
  EXPECT_TRUE(points_equal(t[3], pt(2, 0)));
}

TEST(TwoTorsion, IrrationalRootsIsolated) {
  CubicCurve c(0, -2, Rational(1, 3));
  auto t = two_torsion(c);
  ASSERT_EQ(t.size(), 4u);
  for (size_t k = 1; k < 4; ++k) {
    auto a = t[k].x().as_algebraic();
    ASSERT_TRUE(a.has_value());
    auto [lo, hi] = a->bounds();
    EXPECT_NE(c.F().sign_at(lo), c.F().sign_at(hi));
    EXPECT_TRUE(is_two_torsion(t[k]));
  }
}

TEST(TwoTorsion, OneComponentRejected) { EXPECT_THROW(two_torsion(CubicCurve(0, 0, 1)), NotAllReal); }

TEST(Halve, InfinityGivesTwoTorsion) {
  auto c = CubicCurve::from_roots(1, 2, 3);
  auto h = halve(c, CurvePoint::infinity());
  auto t = two_torsion(c);
  ASSERT_EQ(h.size(), 4u);
  for (size_t k = 0; k < 4; ++k) EXPECT_TRUE(points_equal(h[k], t[k]));
}

TEST(Halve, InvertsHandDoubling) {
  CubicCurve c(0, 0, 1);
  auto h = halve(c, pt(0, 1));
  bool found = false;
  for (const auto& q : h) found = found || points_equal(q, pt(2, 3));
  EXPECT_TRUE(found);
}

TEST(Halve, OvalPointHasNoRealHalves) {
  for (const auto& c : two_component_curves()) {
    EXPECT_TRUE(halve(c, oval_point(c, Rational(1, 3), 1)).empty());
    EXPECT_EQ(halve(c, identity_point(c, 2, -1)).size(), 4u);
  }
}

// [2]q reproduces S for every half q; residual enclosures at 128 bits contain 0.
TEST(Halve, DoublingRoundTrip) {
  int count = 0;
  for (const auto& c : two_component_curves())
    for (int k = 1; k <= 4; ++k) {
      CurvePoint s = identity_point(c, Rational(k, 3), k % 2 ? 1 : -1);
      auto h = halve(c, s);
      ASSERT_EQ(h.size(), 4u);
      for (const auto& q : h) {
        EXPECT_TRUE(on_curve(c, q));
        EXPECT_TRUE(residual_contains_zero(double_point(c, q), s, 128));
        ++count;
      }
    }
  EXPECT_GE(count, 80);
}

TEST(AssociatedPoints, FourWithTangency) {
  auto c = CubicCurve::from_roots(-1, 0, 2);
  for (int k = 1; k <= 3; ++k) {
    CurvePoint p = point_from_x(c, Rational(2 + k, 1), 1);
    auto qs = associated_points(c, p);
    ASSERT_EQ(qs.size(), 4u);
    for (const auto& q : qs) EXPECT_TRUE(tangency_residual(c, q, p, 128).contains_zero());
  }
}

TEST(AssociatedPoints, OvalRejected) {
  auto c = CubicCurve::from_roots(-1, 0, 2);
  EXPECT_THROW(associated_points(c, point_from_x(c, Rational(-1, 2), 1)), NoRealAssociates);
}

TEST(AssociatedPoints, BadInputsRejected) {
  auto c = CubicCurve::from_roots(-1, 0, 2);
  EXPECT_THROW(associated_points(c, CurvePoint::infinity()), InflectionPoint);
  EXPECT_THROW(associated_points(c, pt(2, 0)), PreconditionViolated);
}

// (0,1) has order 3 on y^2 = x^3 + 1.
TEST(AssociatedPoints, InflectionRejected) {
  CubicCurve c(0, 0, 1);
  EXPECT_TRUE(is_inflection(c, pt(0, 1)));
  EXPECT_FALSE(is_inflection(c, pt(2, 3)));
  EXPECT_THROW(associated_points(c, pt(0, 1)), InflectionPoint);
}

// The differences q_i - q_4 run through the nonzero 2-torsion points, and
// complementary pairs agree.
TEST(AssociatedPoints, DifferencesRealizeTwoTorsion) {
  auto c = CubicCurve::from_roots(Rational(-3), Rational(1, 2), Rational(7, 4));
  auto t = two_torsion(c);
  CurvePoint p = point_from_x(c, 5, -1);
  auto q = associated_points(c, p);
  ASSERT_EQ(q.size(), 4u);
  std::array<bool, 4> hit{};
  for (size_t a = 0; a < 3; ++a) {
    CurvePoint d = subtract(c, q[a], q[3]);
    for (size_t k = 1; k < 4; ++k)
      if (approx_equal(d, t[k], 100)) hit[k] = true;
  }
  EXPECT_TRUE(hit[1] && hit[2] && hit[3]);
  EXPECT_TRUE(approx_equal(subtract(c, q[0], q[1]), subtract(c, q[2], q[3]), 100));
  EXPECT_TRUE(approx_equal(subtract(c, q[0], q[2]), subtract(c, q[1], q[3]), 100));
  EXPECT_TRUE(approx_equal(subtract(c, q[0], q[3]), subtract(c, q[1], q[2]), 100));
}
