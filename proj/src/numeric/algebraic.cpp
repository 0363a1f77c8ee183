#include "realforms/numeric/algebraic.hpp"

#include <mutex>
#include <stdexcept>

#include "realforms/errors.hpp"

namespace realforms {

struct AlgebraicNumber::State {
  std::mutex mu;
  Polynomial p;
  Rational lo, hi;
  bool exact = false;
  int sign_lo = 0;  // sign of p at lo, fixed for the lifetime of the state
};

AlgebraicNumber::AlgebraicNumber() : AlgebraicNumber(Rational(0)) {}

AlgebraicNumber::AlgebraicNumber(const Rational& q) : s_(std::make_shared<State>()) {
  s_->p = Polynomial({-q, Rational(1)}).primitive();
  s_->lo = s_->hi = q;
  s_->exact = true;
}

AlgebraicNumber::AlgebraicNumber(const Polynomial& p, const Rational& lo, const Rational& hi)
    : s_(std::make_shared<State>()) {
  if (!(lo < hi)) throw PreconditionViolated("isolating interval must have lo < hi");
  Polynomial sf = p.primitive();
  int sl = sf.sign_at(lo), sh = sf.sign_at(hi);
  if (sl == 0 || sh == 0 || sl == sh)
    throw PreconditionViolated("interval endpoints must bracket a sign change of " + sf.to_string());
  s_->p = sf;
  s_->lo = lo;
  s_->hi = hi;
  s_->sign_lo = sl;
  if (sf.degree() == 1) {
    Rational r = -sf.coeff(0) / sf.coeff(1);
    s_->p = Polynomial({-r, Rational(1)}).primitive();
    s_->lo = s_->hi = r;
    s_->exact = true;
  }
}

std::vector<AlgebraicNumber> AlgebraicNumber::real_roots(const Polynomial& p) {
  std::vector<AlgebraicNumber> out;
  Polynomial sf = squarefree_part(p);
  for (const auto& ri : isolate_real_roots(sf)) {
    if (ri.exact)
      out.emplace_back(ri.lo);
    else
      out.emplace_back(sf, ri.lo, ri.hi);
  }
  return out;
}

bool AlgebraicNumber::is_rational() const {
  std::lock_guard<std::mutex> g(s_->mu);
  return s_->exact;
}

Rational AlgebraicNumber::rational_value() const {
  std::lock_guard<std::mutex> g(s_->mu);
  if (!s_->exact) throw PreconditionViolated("algebraic number is not known to be rational");
  return s_->lo;
}

Polynomial AlgebraicNumber::polynomial() const {
  std::lock_guard<std::mutex> g(s_->mu);
  return s_->p;
}

std::pair<Rational, Rational> AlgebraicNumber::bounds() const {
  std::lock_guard<std::mutex> g(s_->mu);
  return {s_->lo, s_->hi};
}

void AlgebraicNumber::refine(long bits) const {
  std::lock_guard<std::mutex> g(s_->mu);
  State& s = *s_;
  if (s.exact) return;
  Rational target(1);
  mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  while (s.hi - s.lo > target) {
    Rational mid = (s.lo + s.hi) / 2;
    int v = s.p.sign_at(mid);
    if (v == 0) {
      s.lo = s.hi = mid;
      s.exact = true;
      s.p = Polynomial({-mid, Rational(1)}).primitive();
      return;
    }
    if (v == s.sign_lo)
      s.lo = mid;
    else
      s.hi = mid;
  }
}

Interval AlgebraicNumber::enclose(mpfr_prec_t prec) const {
  refine(static_cast<long>(prec) + 2);
  auto [lo, hi] = bounds();
  return Interval(lo, hi, prec);
}

double AlgebraicNumber::approx() const {
  refine(60);
  auto [lo, hi] = bounds();
  return Rational((lo + hi) / 2).get_d();
}

int AlgebraicNumber::sign() const { return compare(Rational(0)); }

int AlgebraicNumber::compare(const Rational& q) const {
  std::lock_guard<std::mutex> g(s_->mu);
  const State& s = *s_;
  if (s.exact) return cmp(s.lo, q) > 0 ? 1 : (cmp(s.lo, q) < 0 ? -1 : 0);
  if (q <= s.lo) return 1;
  if (q >= s.hi) return -1;
  int v = s.p.sign_at(q);
  if (v == 0) return 0;  // q is the unique root inside (lo, hi)
  return v == s.sign_lo ? 1 : -1;
}

int AlgebraicNumber::compare(const AlgebraicNumber& o) const {
  if (s_ == o.s_) return 0;
  if (o.is_rational()) return compare(o.rational_value());
  if (is_rational()) return -o.compare(rational_value());
  Polynomial g = gcd(polynomial(), o.polynomial());
  if (g.degree() > 0) {
    auto [a_lo, a_hi] = bounds();
    auto [b_lo, b_hi] = o.bounds();
    Rational lo = a_lo > b_lo ? a_lo : b_lo;
    Rational hi = a_hi < b_hi ? a_hi : b_hi;
    if (lo < hi) {
      auto seq = sturm_sequence(g);
      int n = count_roots(seq, lo, hi) - (g.sign_at(hi) == 0 ? 1 : 0);
      if (n > 0) return 0;
    }
  }
  for (long bits = 8;; bits *= 2) {
    auto [a_lo, a_hi] = bounds();
    auto [b_lo, b_hi] = o.bounds();
    if (a_hi <= b_lo) return -1;
    if (b_hi <= a_lo) return 1;
    refine(bits);
    o.refine(bits);
    if (is_rational() || o.is_rational()) return compare(o);
  }
}

Polynomial image_polynomial(const Polynomial& minpoly, const Polynomial& g) {
  Polynomial m = minpoly.monic();
  int e = m.degree();
  if (e <= 0) throw PreconditionViolated("image_polynomial needs a nonconstant polynomial");
  std::vector<std::vector<Rational>> comp(e, std::vector<Rational>(e));
  for (int i = 1; i < e; ++i) comp[i][i - 1] = 1;
  for (int i = 0; i < e; ++i) comp[i][e - 1] = -m.coeff(i);
  // Horner evaluation of g at the companion matrix.
  std::vector<std::vector<Rational>> acc(e, std::vector<Rational>(e));
  for (int k = g.degree(); k >= 0; --k) {
    std::vector<std::vector<Rational>> next(e, std::vector<Rational>(e));
    for (int i = 0; i < e; ++i)
      for (int l = 0; l < e; ++l)
        if (sgn(acc[i][l]) != 0)
          for (int j = 0; j < e; ++j) next[i][j] += acc[i][l] * comp[l][j];
    for (int i = 0; i < e; ++i) next[i][i] += g.coeff(k);
    acc = std::move(next);
  }
  return characteristic_polynomial(acc);
}

}  // namespace realforms
