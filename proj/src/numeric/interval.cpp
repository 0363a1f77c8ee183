#include "realforms/numeric/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "realforms/errors.hpp"

namespace realforms {

namespace {

mpfr_prec_t joint(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

void min4(mpfr_ptr out, mpfr_srcptr a, mpfr_srcptr b, mpfr_srcptr c, mpfr_srcptr d) {
  mpfr_set(out, a, MPFR_RNDD);
  if (mpfr_less_p(b, out)) mpfr_set(out, b, MPFR_RNDD);
  if (mpfr_less_p(c, out)) mpfr_set(out, c, MPFR_RNDD);
  if (mpfr_less_p(d, out)) mpfr_set(out, d, MPFR_RNDD);
}

void max4(mpfr_ptr out, mpfr_srcptr a, mpfr_srcptr b, mpfr_srcptr c, mpfr_srcptr d) {
  mpfr_set(out, a, MPFR_RNDU);
  if (mpfr_greater_p(b, out)) mpfr_set(out, b, MPFR_RNDU);
  if (mpfr_greater_p(c, out)) mpfr_set(out, c, MPFR_RNDU);
  if (mpfr_greater_p(d, out)) mpfr_set(out, d, MPFR_RNDU);
}

}  // namespace

Interval::Interval(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long value, mpfr_prec_t prec) : Interval(prec) {
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

Interval::Interval(const Rational& value, mpfr_prec_t prec) : Interval(prec) {
  mpfr_set_q(lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, value.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec) : Interval(prec) {
  mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& other) {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other) {}

Interval& Interval::operator=(const Interval& other) {
  if (this == &other) return *this;
  mpfr_set_prec(lo_, other.precision());
  mpfr_set_prec(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  if (this == &other) return *this;
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Rational Interval::lower() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), lo_);
  return q;
}

Rational Interval::upper() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), hi_);
  return q;
}

double Interval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid_double() const {
  mpfr_t m;
  mpfr_init2(m, precision() + 1);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::is_negative() const { return mpfr_sgn(hi_) < 0; }

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Interval::overlaps(const Interval& other) const {
  return mpfr_lessequal_p(lo_, other.hi_) && mpfr_lessequal_p(other.lo_, hi_);
}

double Interval::width_log2() const {
  mpfr_t w;
  mpfr_init2(w, 64);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double out;
  if (mpfr_zero_p(w)) {
    out = -std::numeric_limits<double>::infinity();
  } else {
    mpfr_log2(w, w, MPFR_RNDU);
    out = mpfr_get_d(w, MPFR_RNDU);
  }
  mpfr_clear(w);
  return out;
}

bool Interval::narrower_than(long bits) const {
  return width_log2() <= -static_cast<double>(bits);
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::clamp_nonnegative() const {
  if (mpfr_sgn(hi_) < 0) throw InsufficientPrecision("interval is entirely negative");
  Interval r(*this);
  if (mpfr_sgn(r.lo_) < 0) mpfr_set_zero(r.lo_, 1);
  return r;
}

Interval Interval::operator-() const {
  Interval r(precision());
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  mpfr_prec_t p = joint(a, b);
  Interval r(p);
  mpfr_t d[4], u[4];
  for (int i = 0; i < 4; ++i) {
    mpfr_init2(d[i], p);
    mpfr_init2(u[i], p);
  }
  mpfr_mul(d[0], a.lo_, b.lo_, MPFR_RNDD);
  mpfr_mul(d[1], a.lo_, b.hi_, MPFR_RNDD);
  mpfr_mul(d[2], a.hi_, b.lo_, MPFR_RNDD);
  mpfr_mul(d[3], a.hi_, b.hi_, MPFR_RNDD);
  mpfr_mul(u[0], a.lo_, b.lo_, MPFR_RNDU);
  mpfr_mul(u[1], a.lo_, b.hi_, MPFR_RNDU);
  mpfr_mul(u[2], a.hi_, b.lo_, MPFR_RNDU);
  mpfr_mul(u[3], a.hi_, b.hi_, MPFR_RNDU);
  min4(r.lo_, d[0], d[1], d[2], d[3]);
  max4(r.hi_, u[0], u[1], u[2], u[3]);
  for (int i = 0; i < 4; ++i) {
    mpfr_clear(d[i]);
    mpfr_clear(u[i]);
  }
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw InsufficientPrecision("division by an interval containing zero");
  mpfr_prec_t p = joint(a, b);
  Interval r(p);
  mpfr_t d[4], u[4];
  for (int i = 0; i < 4; ++i) {
    mpfr_init2(d[i], p);
    mpfr_init2(u[i], p);
  }
  mpfr_div(d[0], a.lo_, b.lo_, MPFR_RNDD);
  mpfr_div(d[1], a.lo_, b.hi_, MPFR_RNDD);
  mpfr_div(d[2], a.hi_, b.lo_, MPFR_RNDD);
  mpfr_div(d[3], a.hi_, b.hi_, MPFR_RNDD);
  mpfr_div(u[0], a.lo_, b.lo_, MPFR_RNDU);
  mpfr_div(u[1], a.lo_, b.hi_, MPFR_RNDU);
  mpfr_div(u[2], a.hi_, b.lo_, MPFR_RNDU);
  mpfr_div(u[3], a.hi_, b.hi_, MPFR_RNDU);
  min4(r.lo_, d[0], d[1], d[2], d[3]);
  max4(r.hi_, u[0], u[1], u[2], u[3]);
  for (int i = 0; i < 4; ++i) {
    mpfr_clear(d[i]);
    mpfr_clear(u[i]);
  }
  return r;
}

Interval square(const Interval& a) {
  Interval r(a.precision());
  if (a.contains_zero()) {
    mpfr_set_zero(r.lo_, 1);
    mpfr_t t;
    mpfr_init2(t, a.precision());
    mpfr_sqr(r.hi_, a.lo_, MPFR_RNDU);
    mpfr_sqr(t, a.hi_, MPFR_RNDU);
    if (mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
  } else if (a.is_positive()) {
    mpfr_sqr(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
  } else {
    mpfr_sqr(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_sqr(r.hi_, a.lo_, MPFR_RNDU);
  }
  return r;
}

Interval sqrt(const Interval& a) {
  Interval c = a.clamp_nonnegative();
  Interval r(a.precision());
  mpfr_sqrt(r.lo_, c.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, c.hi_, MPFR_RNDU);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Interval& x) {
  return os << "[" << x.lower_double() << ", " << x.upper_double() << "]";
}

}  // namespace realforms
