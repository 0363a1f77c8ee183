#include "realforms/numeric/real.hpp"

#include <cstdlib>
#include <limits>
#include <mutex>
#include <stdexcept>

namespace realforms {

PrecisionPolicy PrecisionPolicy::from_env() {
  PrecisionPolicy p;
  if (const char* env = std::getenv("REALFORMS_PRECISION_BITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 32) p.start = v;
  }
  if (p.ceiling < p.start) p.ceiling = p.start;
  return p;
}

struct Real::Node {
  Kind kind;
  Rational q;
  std::optional<AlgebraicNumber> alg;
  std::shared_ptr<const Node> a, b;

  mutable std::mutex mu;
  mutable mpfr_prec_t cached_prec = 0;
  mutable std::optional<Interval> cached;

  Interval eval(mpfr_prec_t prec) const {
    {
      std::lock_guard<std::mutex> g(mu);
      if (cached && cached_prec == prec) return *cached;
    }
    Interval r = compute(prec);
    std::lock_guard<std::mutex> g(mu);
    cached_prec = prec;
    cached = r;
    return r;
  }

  Interval compute(mpfr_prec_t prec) const {
    switch (kind) {
      case Kind::Rational: return Interval(q, prec);
      case Kind::Algebraic: return alg->enclose(prec);
      case Kind::Add: return a->eval(prec) + b->eval(prec);
      case Kind::Sub: return a->eval(prec) - b->eval(prec);
      case Kind::Mul: return a->eval(prec) * b->eval(prec);
      case Kind::Div: return a->eval(prec) / b->eval(prec);
      case Kind::Neg: return -a->eval(prec);
    }
    throw std::logic_error("bad node kind");
  }
};

Real::Real() : Real(Rational(0)) {}

Real::Real(long q) : Real(Rational(q)) {}

Real::Real(const Rational& q) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Rational;
  n->q = q;
  n_ = n;
}

Real::Real(const AlgebraicNumber& v) {
  auto n = std::make_shared<Node>();
  if (v.is_rational()) {
    n->kind = Kind::Rational;
    n->q = v.rational_value();
  } else {
    n->kind = Kind::Algebraic;
    n->alg = v;
  }
  n_ = n;
}

Real::Kind Real::kind() const { return n_->kind; }

std::optional<Rational> Real::as_rational() const {
  if (n_->kind == Kind::Rational) return n_->q;
  if (n_->kind == Kind::Algebraic && n_->alg->is_rational()) return n_->alg->rational_value();
  return std::nullopt;
}

std::optional<AlgebraicNumber> Real::as_algebraic() const {
  if (n_->kind == Kind::Rational) return AlgebraicNumber(n_->q);
  if (n_->kind == Kind::Algebraic) return n_->alg;
  return std::nullopt;
}

bool Real::is_exact_zero() const {
  auto q = as_rational();
  return q && sgn(*q) == 0;
}

Interval Real::enclose(mpfr_prec_t prec) const { return n_->eval(prec); }

double Real::approx() const {
  if (auto q = as_rational()) return q->get_d();
  if (n_->kind == Kind::Algebraic) return n_->alg->approx();
  for (mpfr_prec_t p = 128; p <= 4096; p *= 2) {
    try {
      return enclose(p).mid_double();
    } catch (const InsufficientPrecision&) {
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

Real operator+(const Real& a, const Real& b) {
  auto qa = a.as_rational(), qb = b.as_rational();
  if (qa && qb) return Real(*qa + *qb);
  if (qa && sgn(*qa) == 0) return b;
  if (qb && sgn(*qb) == 0) return a;
  // y + (-y)
  if (b.n_->kind == Real::Kind::Neg && b.n_->a == a.n_) return Real(0L);
  if (a.n_->kind == Real::Kind::Neg && a.n_->a == b.n_) return Real(0L);
  auto n = std::make_shared<Real::Node>();
  n->kind = Real::Kind::Add;
  n->a = a.n_;
  n->b = b.n_;
  return Real(std::shared_ptr<const Real::Node>(n));
}

Real operator-(const Real& a, const Real& b) {
  auto qa = a.as_rational(), qb = b.as_rational();
  if (qa && qb) return Real(*qa - *qb);
  if (qb && sgn(*qb) == 0) return a;
  if (qa && sgn(*qa) == 0) return -b;
  if (a.n_ == b.n_) return Real(0L);
  auto n = std::make_shared<Real::Node>();
  n->kind = Real::Kind::Sub;
  n->a = a.n_;
  n->b = b.n_;
  return Real(std::shared_ptr<const Real::Node>(n));
}

Real operator*(const Real& a, const Real& b) {
  auto qa = a.as_rational(), qb = b.as_rational();
  if (qa && qb) return Real(*qa * *qb);
  if ((qa && sgn(*qa) == 0) || (qb && sgn(*qb) == 0)) return Real(0L);
  if (qa && *qa == 1) return b;
  if (qb && *qb == 1) return a;
  auto n = std::make_shared<Real::Node>();
  n->kind = Real::Kind::Mul;
  n->a = a.n_;
  n->b = b.n_;
  return Real(std::shared_ptr<const Real::Node>(n));
}

Real operator/(const Real& a, const Real& b) {
  auto qa = a.as_rational(), qb = b.as_rational();
  if (qb && sgn(*qb) == 0) throw std::domain_error("Real division by exact zero");
  if (qa && qb) return Real(*qa / *qb);
  if (qa && sgn(*qa) == 0) return Real(0L);
  if (qb && *qb == 1) return a;
  auto n = std::make_shared<Real::Node>();
  n->kind = Real::Kind::Div;
  n->a = a.n_;
  n->b = b.n_;
  return Real(std::shared_ptr<const Real::Node>(n));
}

Real Real::operator-() const {
  if (auto q = as_rational()) return Real(Rational(-*q));
  if (n_->kind == Kind::Neg) return Real(n_->a);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Neg;
  n->a = n_;
  return Real(std::shared_ptr<const Real::Node>(n));
}

int sign(const Real& x, const PrecisionPolicy& policy) {
  if (auto v = x.as_algebraic()) return v->sign();
  return policy.run(
      [&](long prec) {
        Interval e = x.enclose(prec);
        if (e.is_positive()) return 1;
        if (e.is_negative()) return -1;
        throw InsufficientPrecision("sign undecided");
      },
      "sign of a real expression");
}

int compare(const Real& a, const Real& b, const PrecisionPolicy& policy) {
  if (a.same_node(b)) return 0;
  auto va = a.as_algebraic(), vb = b.as_algebraic();
  if (va && vb) return va->compare(*vb);
  return sign(a - b, policy);
}

}  // namespace realforms
