#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "realforms/errors.hpp"
#include "realforms/numeric/algebraic.hpp"
#include "realforms/numeric/interval.hpp"

namespace realforms {

/// Interval precision schedule: start at `start` bits and double on every
/// InsufficientPrecision until `ceiling`, then raise PrecisionExhausted.
struct PrecisionPolicy {
  long start = 128;
  long ceiling = 2048;

  /// Defaults, with `start` overridden by REALFORMS_PRECISION_BITS if set.
  static PrecisionPolicy from_env();

  template <class F>
  auto run(F&& f, const char* what = "interval evaluation") const -> decltype(f(0L)) {
    for (long p = start;; p *= 2) {
      if (p > ceiling) p = ceiling;
      try {
        return f(p);
      } catch (const InsufficientPrecision&) {
        if (p >= ceiling)
          throw PrecisionExhausted(std::string(what) + ": undecided at " +
                                   std::to_string(ceiling) + " bits");
      }
    }
  }
};

/// Immutable real number built as an expression DAG over exact rational and
/// algebraic leaves. Nodes are shared and cache their last enclosure.
class Real {
 public:
  enum class Kind { Rational, Algebraic, Add, Sub, Mul, Div, Neg };

  Real();
  Real(const Rational& q);         // NOLINT implicit
  Real(long q);                    // NOLINT implicit
  Real(const AlgebraicNumber& a);  // NOLINT implicit

  Kind kind() const;
  /// Rational value if this is a rational leaf (or an algebraic leaf that
  /// has been found to be rational).
  std::optional<Rational> as_rational() const;
  /// Leaf value as an algebraic number, if this is a leaf.
  std::optional<AlgebraicNumber> as_algebraic() const;
  bool is_exact_zero() const;
  bool same_node(const Real& o) const { return n_ == o.n_; }

  /// Enclosure at the given working precision. Throws InsufficientPrecision.
  Interval enclose(mpfr_prec_t prec) const;
  /// Best-effort double for display.
  double approx() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real operator-() const;

 private:
  struct Node;
  explicit Real(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

/// Exact for leaves; otherwise decided by enclosures under the policy.
int sign(const Real& x, const PrecisionPolicy& policy);
int compare(const Real& a, const Real& b, const PrecisionPolicy& policy);

}  // namespace realforms
