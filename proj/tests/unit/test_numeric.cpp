#include <gtest/gtest.h>

#include <random>

#include "realforms/errors.hpp"
#include "realforms/numeric/algebraic.hpp"
#include "realforms/numeric/interval.hpp"
#include "realforms/numeric/lll.hpp"
#include "realforms/numeric/polynomial.hpp"
#include "realforms/numeric/real.hpp"

using namespace realforms;

TEST(Rational, RoundTripsThroughText) {
  Rational q(-6, 4);
  q.canonicalize();
  EXPECT_EQ(to_string(q), "-3/2");
  EXPECT_EQ(to_string(Rational(5)), "5/1");
  EXPECT_EQ(parse_rational("-3/2"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Rational, Rounding) {
  EXPECT_EQ(floor_of(Rational(-7, 2)), -4);
  EXPECT_EQ(ceil_of(Rational(-7, 2)), -3);
  EXPECT_EQ(round_of(Rational(5, 2)), 3);
  EXPECT_EQ(round_of(Rational(-5, 2)), -2);
  Rational q(1, 3);
  EXPECT_LE(dyadic_below(q, 10), q);
  EXPECT_GE(dyadic_above(q, 10), q);
  EXPECT_EQ(dyadic_above(q, 10) - dyadic_below(q, 10), Rational(1, 1024));
}

TEST(Polynomial, GcdAndSquarefree) {
  Polynomial a{-1, 0, 1};        // x^2 - 1
  Polynomial b{1, 2, 1};         // (x + 1)^2
  EXPECT_EQ(gcd(a, b), (Polynomial{1, 1}));
  EXPECT_EQ(squarefree_part(b * Polynomial{-2, 1}).degree(), 2);
}

// The spec asks for a cubic with irrational real roots: x^3 - 2x + 1/3.
TEST(Polynomial, IsolatesIrrationalRoots) {
  Polynomial f{Rational(1, 3), -2, 0, 1};
  auto iv = isolate_real_roots(f);
  ASSERT_EQ(iv.size(), 3u);
  for (const auto& r : iv) {
    EXPECT_FALSE(r.exact);
    EXPECT_LT(r.lo, r.hi);
    EXPECT_NE(f.sign_at(r.lo), f.sign_at(r.hi));
  }
  EXPECT_LE(iv[0].hi, iv[1].lo);
  EXPECT_LE(iv[1].hi, iv[2].lo);
}

TEST(Polynomial, SturmCountsRoots) {
  Polynomial f = Polynomial{-1, 1} * Polynomial{-2, 1} * Polynomial{-3, 1};
  auto s = sturm_sequence(f);
  EXPECT_EQ(count_roots(s, 0, 10), 3);
  EXPECT_EQ(count_roots(s, Rational(3, 2), Rational(5, 2)), 1);
  EXPECT_EQ(count_roots(s, 1, 2), 1);  // (1, 2]
}

TEST(Polynomial, CharacteristicPolynomial) {
  std::vector<std::vector<Rational>> m{{2, 1}, {1, 2}};
  EXPECT_EQ(characteristic_polynomial(m), (Polynomial{3, -4, 1}));
}

TEST(Interval, EnclosesAndRounds) {
  Interval third(Rational(1, 3), 64);
  EXPECT_TRUE(third.contains(Rational(1, 3)));
  Interval x = third * Interval(3L, 64) - Interval(1L, 64);
  EXPECT_TRUE(x.contains_zero());
  EXPECT_TRUE(x.narrower_than(60));
  EXPECT_THROW(Interval(1L, 64) / x, InsufficientPrecision);
  Interval r2 = sqrt(Interval(2L, 128));
  EXPECT_LT(r2.lower(), Rational(141421356238, 100000000000));
  EXPECT_GT(r2.upper(), Rational(141421356237, 100000000000));
  EXPECT_TRUE(r2.narrower_than(120));
}

TEST(Algebraic, RootsOrderedAndComparable) {
  Polynomial f{-2, 0, 1};
  auto r = AlgebraicNumber::real_roots(f);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_LT(r[0].approx(), -1.41);
  EXPECT_GT(r[1].approx(), 1.41);
  EXPECT_EQ(r[1].compare(Rational(3, 2)), -1);
  EXPECT_EQ(r[1].sign(), 1);
  EXPECT_TRUE(AlgebraicNumber(Rational(3, 2)).is_rational());
  EXPECT_TRUE(r[0] < r[1]);
}

// Refining an isolating interval at twice the precision keeps the same root.
TEST(Algebraic, IsolationSurvivesRefinement) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(-9, 9);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial f{c(rng), c(rng), c(rng), c(rng), 1};
    auto roots = AlgebraicNumber::real_roots(f);
    for (const auto& a : roots) {
      Polynomial p = a.polynomial();
      a.refine(64);
      auto [lo1, hi1] = a.bounds();
      a.refine(128);
      auto [lo2, hi2] = a.bounds();
      EXPECT_LE(lo1, lo2);
      EXPECT_GE(hi1, hi2);
      if (lo2 < hi2) EXPECT_EQ(count_roots(sturm_sequence(p), lo2, hi2), 1);
      ++checked;
    }
  }
  EXPECT_GT(checked, 40);
}

TEST(Real, ExactSignOfLeaves) {
  PrecisionPolicy pol;
  Real a(Rational(1, 3));
  EXPECT_EQ(sign(a - Real(Rational(1, 3)), pol), 0);
  Real s2(AlgebraicNumber::real_roots(Polynomial{-2, 0, 1})[1]);
  // An exact zero hidden inside an expression cannot be decided by enclosures.
  EXPECT_THROW(sign(s2 * s2 - Real(2L), PrecisionPolicy{64, 256}), PrecisionExhausted);
  EXPECT_TRUE((s2 * s2 - Real(2L)).enclose(256).contains_zero());
  EXPECT_EQ(compare(s2, Real(Rational(141, 100)), pol), 1);
}

namespace {

Integer norm2(const IntRow& v) {
  Integer s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

}  // namespace

// The certified lower bound from LLL never exceeds the true minimum, found by
// enumerating small combinations of the input rows.
TEST(Lll, LowerBoundAgainstEnumeration) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> c(-30, 30);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<IntRow> rows(3, IntRow(4));
    for (auto& r : rows)
      for (auto& x : r) x = c(rng);
    LllResult res;
    try {
      res = lll_reduce(rows);
    } catch (const std::invalid_argument&) {
      continue;  // dependent rows
    }
    Integer best = -1;
    for (long a = -6; a <= 6; ++a)
      for (long b = -6; b <= 6; ++b)
        for (long d = -6; d <= 6; ++d) {
          if (!a && !b && !d) continue;
          IntRow v(4);
          for (size_t k = 0; k < 4; ++k) v[k] = a * rows[0][k] + b * rows[1][k] + d * rows[2][k];
          Integer n = norm2(v);
          if (n != 0 && (best < 0 || n < best)) best = n;
        }
    EXPECT_LE(res.min_gs_norm(), Rational(best));
    for (const auto& v : res.basis) EXPECT_GE(Rational(norm2(v)), res.min_gs_norm());
  }
}
