#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "realforms/numeric/interval.hpp"
#include "realforms/numeric/polynomial.hpp"

namespace realforms {

/// Real algebraic number: a squarefree defining polynomial over Q plus an open
/// isolating interval (lo, hi) holding exactly one of its roots. Rational values
/// are stored exactly. Copies share the refinement state, so refining one copy
/// tightens all of them; the state is guarded by a mutex.
class AlgebraicNumber {
 public:
  AlgebraicNumber();
  AlgebraicNumber(const Rational& q);  // NOLINT implicit
  AlgebraicNumber(long q) : AlgebraicNumber(Rational(q)) {}  // NOLINT implicit
  /// Requires p squarefree with exactly one root in (lo, hi), p(lo), p(hi) != 0.
  AlgebraicNumber(const Polynomial& p, const Rational& lo, const Rational& hi);

  /// Distinct real roots of p in ascending order.
  static std::vector<AlgebraicNumber> real_roots(const Polynomial& p);

  bool is_rational() const;
  /// Only valid if is_rational().
  Rational rational_value() const;
  /// Defining polynomial (x - q for rationals), primitive.
  Polynomial polynomial() const;
  std::pair<Rational, Rational> bounds() const;

  /// Shrinks the isolating interval below width 2^-bits.
  void refine(long bits) const;
  Interval enclose(mpfr_prec_t prec) const;
  double approx() const;

  int sign() const;
  int compare(const Rational& q) const;
  int compare(const AlgebraicNumber& o) const;
  bool operator==(const AlgebraicNumber& o) const { return compare(o) == 0; }
  bool operator<(const AlgebraicNumber& o) const { return compare(o) < 0; }

 private:
  struct State;
  std::shared_ptr<State> s_;
};

/// Given the defining data of an algebraic x and a rational polynomial g, returns
/// a polynomial over Q vanishing at g(x): the characteristic polynomial of g
/// evaluated at the companion matrix of x's polynomial.
Polynomial image_polynomial(const Polynomial& minpoly, const Polynomial& g);

}  // namespace realforms
