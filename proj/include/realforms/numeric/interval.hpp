#pragma once

#include <mpfr.h>

#include <iosfwd>

#include "realforms/numeric/rational.hpp"

namespace realforms {

/// Closed interval [lo, hi] with MPFR endpoints. Every operation rounds the
/// lower endpoint down and the upper endpoint up, so the result always
/// encloses the exact result for any choice of arguments inside the inputs.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 64);
  Interval(long value, mpfr_prec_t prec);
  Interval(const Rational& value, mpfr_prec_t prec);
  Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec);

  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  Rational lower() const;
  Rational upper() const;
  double lower_double() const;
  double upper_double() const;
  double mid_double() const;

  bool contains_zero() const;
  bool is_positive() const;  // lo > 0
  bool is_negative() const;  // hi < 0
  bool contains(const Rational& q) const;
  bool overlaps(const Interval& other) const;
  /// True iff hi - lo <= 2^-bits.
  bool narrower_than(long bits) const;
  /// log2(hi - lo), or -infinity for a point interval.
  double width_log2() const;

  /// Smallest interval containing both arguments.
  static Interval hull(const Interval& a, const Interval& b);
  /// Intersects with [0, +inf); throws InsufficientPrecision if hi < 0.
  Interval clamp_nonnegative() const;

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Throws InsufficientPrecision when b contains zero.
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval square(const Interval& a);
  /// Square root of the nonnegative part; throws InsufficientPrecision if hi < 0.
  friend Interval sqrt(const Interval& a);

  friend std::ostream& operator<<(std::ostream& os, const Interval& x);

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace realforms
