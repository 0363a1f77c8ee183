#include "realforms/elliptic/torsion.hpp"

#include <vector>

#include "realforms/elliptic/ellog.hpp"
#include "realforms/elliptic/halving.hpp"
#include "realforms/errors.hpp"

namespace realforms {

namespace {

constexpr long kRationalTorsionBound = 12;

bool contains_integer(const Interval& v) { return ceil_of(v.lower()) <= floor_of(v.upper()); }

std::vector<long> surviving_orders(const EllipticLog& lg, long max_order) {
  std::vector<long> out;
  mpfr_prec_t prec = lg.t.precision();
  for (long n = 1; n <= max_order; ++n) {
    if ((n * lg.component) % 2 != 0) continue;
    if (contains_integer(Interval(n, prec) * lg.t)) out.push_back(n);
  }
  return out;
}

}  // namespace

TorsionEvidence torsion_evidence(const CubicCurve& curve, const CurvePoint& p, long max_order,
                                 const PrecisionPolicy& policy) {
  if (max_order < kRationalTorsionBound)
    throw PreconditionViolated("torsion_test needs max_order >= 12");
  if (p.is_infinity()) return {1, "exact", 0, true};
  if (is_two_torsion(p)) return {2, "exact", 0, true};

  if (p.is_rational()) {
    // Mazur: a point of finite order over Q has order at most 12.
    CurvePoint acc = p;
    for (long n = 2; n <= kRationalTorsionBound; ++n) {
      acc = add(curve, acc, p, policy);
      if (acc.is_infinity()) return {n, "exact", 0, true};
    }
    return {std::nullopt, "exact", 0, true};
  }

  if (curve.component_count() == 2) {
    for (long prec = policy.start;; prec = std::min(prec * 2, policy.ceiling)) {
      try {
        auto survivors = surviving_orders(elliptic_log(curve, p, prec), max_order);
        if (survivors.empty()) return {std::nullopt, "elliptic-log", prec, true};
        if (prec >= policy.ceiling) return {survivors.front(), "elliptic-log", prec, false};
      } catch (const InsufficientPrecision&) {
        if (prec >= policy.ceiling) throw PrecisionExhausted("torsion test: elliptic log undecided");
      }
    }
  }

  CurvePoint acc = p;
  for (long n = 2; n <= max_order; ++n) {
    acc = add(curve, acc, p, policy);
    if (acc.is_infinity()) return {n, "group-law", policy.ceiling, false};
  }
  return {std::nullopt, "group-law", policy.ceiling, false};
}

std::optional<long> torsion_test(const CubicCurve& curve, const CurvePoint& p, long max_order,
                                 const PrecisionPolicy& policy) {
  return torsion_evidence(curve, p, max_order, policy).order;
}

}  // namespace realforms
