#pragma once

#include <string>
#include <utility>
#include <vector>

#include "realforms/numeric/interval.hpp"
#include "realforms/numeric/rational.hpp"

namespace realforms {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);
  static Polynomial x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  Interval eval(const Interval& x) const;
  int sign_at(const Rational& x) const { return sgn(eval(x)); }

  Polynomial derivative() const;
  Polynomial monic() const;
  /// Integer coefficients with content 1 and positive leading coefficient.
  Polynomial primitive() const;
  Polynomial compose(const Polynomial& inner) const;
  Polynomial pow(unsigned k) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws std::domain_error on a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);
Polynomial squarefree_part(const Polynomial& p);

/// Every real root of p has absolute value strictly below the returned bound.
Rational root_bound(const Polynomial& p);

using SturmSequence = std::vector<Polynomial>;
SturmSequence sturm_sequence(const Polynomial& p);
/// Number of distinct real roots in the half-open interval (a, b].
int count_roots(const SturmSequence& s, const Rational& a, const Rational& b);

struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact = false;  // lo == hi is the root itself
};

/// Isolates the distinct real roots of p in ascending order. Non-exact entries
/// are open intervals containing exactly one root, with a sign change of the
/// squarefree part of p across them.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p);

/// Characteristic polynomial det(X*I - M) of a square rational matrix.
Polynomial characteristic_polynomial(const std::vector<std::vector<Rational>>& m);

}  // namespace realforms
