#include "realforms/numeric/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace realforms {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[k];
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Interval Polynomial::eval(const Interval& x) const {
  mpfr_prec_t p = x.precision();
  if (c_.empty()) return Interval(0L, p);
  Interval acc(c_.back(), p);
  for (int k = degree() - 1; k >= 0; --k) acc = acc * x + Interval(c_[k], p);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (degree() <= 0) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return {};
  Polynomial r(*this);
  Rational lc = leading();
  for (auto& c : r.c_) c /= lc;
  return r;
}

Polynomial Polynomial::primitive() const {
  if (c_.empty()) return {};
  Integer lcm_den = 1;
  for (const auto& c : c_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& c : c_) {
    Integer v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (sgn(ints.back()) < 0) g = -g;
  std::vector<Rational> out;
  for (auto& v : ints) out.emplace_back(v / g);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial base(*this), acc = constant(1);
  while (k) {
    if (k & 1u) acc *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = c_;
  int dd = d.degree();
  if (degree() < dd) return {Polynomial(), *this};
  std::vector<Rational> q(degree() - dd + 1);
  const Rational& lc = d.leading();
  for (int k = degree(); k >= dd; --k) {
    if (sgn(rem[k]) == 0) continue;
    Rational f = rem[k] / lc;
    q[k - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * d.c_[j];
  }
  rem.resize(dd);
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t k = 0; k < c_.size(); ++k) os << (k ? ", " : "") << realforms::to_string(c_[k]);
  os << "]";
  return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = r.primitive();
  }
  return a.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  Polynomial g = gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

Rational root_bound(const Polynomial& p) {
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k) {
    Rational v = abs(p.coeff(k) / p.leading());
    if (v > m) m = v;
  }
  return m + 1;
}

namespace {

// Integer rescaling by a positive factor.
Polynomial same_sign_primitive(const Polynomial& p) {
  Polynomial r = p.primitive();
  return sgn(r.leading()) == sgn(p.leading()) ? r : -r;
}

}  // namespace

SturmSequence sturm_sequence(const Polynomial& p) {
  SturmSequence s{same_sign_primitive(p)};
  if (p.degree() <= 0) return s;
  s.push_back(same_sign_primitive(p.derivative()));
  while (s.back().degree() > 0) {
    Polynomial r = s[s.size() - 2].divmod(s.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps the sign pattern of the sequence intact.
    Polynomial pr = r.primitive();
    if (sgn(pr.leading()) != -sgn(r.leading())) pr = -pr;
    s.push_back(pr);
  }
  return s;
}

namespace {

int sign_changes(const SturmSequence& s, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : s) {
    int v = p.sign_at(x);
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

struct Isolator {
  const Polynomial& p;
  const SturmSequence& s;
  std::vector<RootInterval>& out;

  // Invariant: p(a) != 0, p(b) != 0 and `count` roots lie in (a, b).
  void run(const Rational& a, const Rational& b, int count) {
    if (count == 0) return;
    if (count == 1) {
      out.push_back({a, b, false});
      return;
    }
    Rational mid = (a + b) / 2;
    if (p.sign_at(mid) != 0) {
      int left = count_roots(s, a, mid);
      run(a, mid, left);
      run(mid, b, count - left);
      return;
    }
    Rational eps = (b - a) / 4;
    while (p.sign_at(mid - eps) == 0 || p.sign_at(mid + eps) == 0 ||
           count_roots(s, mid - eps, mid + eps) != 1)
      eps /= 2;
    int left = count_roots(s, a, mid - eps);
    run(a, mid - eps, left);
    out.push_back({mid, mid, true});
    run(mid + eps, b, count - left - 1);
  }
};

}  // namespace

int count_roots(const SturmSequence& s, const Rational& a, const Rational& b) {
  return sign_changes(s, a) - sign_changes(s, b);
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& p) {
  std::vector<RootInterval> out;
  if (p.degree() <= 0) return out;
  Polynomial sf = squarefree_part(p);
  if (sf.degree() == 1) {
    Rational r = -sf.coeff(0) / sf.coeff(1);
    out.push_back({r, r, true});
    return out;
  }
  SturmSequence s = sturm_sequence(sf);
  Rational b = root_bound(sf);
  Isolator iso{sf, s, out};
  iso.run(-b, b, count_roots(s, -b, b));
  return out;
}

Polynomial characteristic_polynomial(const std::vector<std::vector<Rational>>& a) {
  // Faddeev-LeVerrier.
  size_t n = a.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  std::vector<std::vector<Rational>> mk(n, std::vector<Rational>(n));
  for (size_t k = 1; k <= n; ++k) {
    for (size_t i = 0; i < n; ++i) mk[i][i] += c[n - k + 1];
    std::vector<std::vector<Rational>> am(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < n; ++l)
        if (sgn(a[i][l]) != 0)
          for (size_t j = 0; j < n; ++j) am[i][j] += a[i][l] * mk[l][j];
    Rational tr = 0;
    for (size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr / static_cast<long>(k);
    mk = std::move(am);
  }
  return Polynomial(std::move(c));
}

}  // namespace realforms
