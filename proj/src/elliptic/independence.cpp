#include "realforms/elliptic/independence.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "realforms/elliptic/ellog.hpp"
#include "realforms/errors.hpp"
#include "realforms/numeric/lll.hpp"

namespace realforms {

namespace {

struct Logs {
  std::vector<Interval> t;
  std::vector<int> b;
  long prec = 0;
};

Logs compute_logs(const CubicCurve& curve, const std::vector<CurvePoint>& pts, long prec) {
  Logs l;
  l.prec = prec;
  for (const auto& p : pts) {
    EllipticLog e = elliptic_log(curve, p, prec);
    l.t.push_back(e.t);
    l.b.push_back(e.component);
  }
  return l;
}

bool parity_even(const Logs& l, const std::vector<Integer>& n) {
  Integer s = 0;
  for (size_t i = 0; i < n.size(); ++i)
    if (l.b[i]) s += n[i];
  return mpz_even_p(s.get_mpz_t());
}

bool sum_near_integer(const Logs& l, const std::vector<Integer>& n) {
  Interval acc(0L, l.prec);
  for (size_t i = 0; i < n.size(); ++i) acc = acc + Interval(Rational(n[i]), l.prec) * l.t[i];
  return ceil_of(acc.lower()) <= floor_of(acc.upper());
}

bool is_candidate(const Logs& l, const std::vector<Integer>& n) {
  return parity_even(l, n) && sum_near_integer(l, n);
}

Integer sup_norm(const std::vector<Integer>& n) {
  Integer m = 0;
  for (const auto& v : n)
    if (abs(v) > m) m = abs(v);
  return m;
}

void normalize_sign(std::vector<Integer>& n) {
  for (const auto& v : n) {
    if (sgn(v) == 0) continue;
    if (sgn(v) < 0)
      for (auto& w : n) w = -w;
    return;
  }
}

// Candidates for a relation with |n_i| <= N, first nonzero entry positive,
// ordered by sup-norm and then lexicographically.
std::vector<std::vector<Integer>> enumerate_candidates(const Logs& l, long N) {
  size_t s = l.t.size();
  std::vector<std::vector<Interval>> table(s);
  for (size_t i = 0; i < s; ++i)
    for (long v = -N; v <= N; ++v) table[i].push_back(Interval(v, l.prec) * l.t[i]);
  std::vector<std::vector<Integer>> out;
  std::vector<long> n(s, -N);
  while (true) {
    size_t first = 0;
    while (first < s && n[first] == 0) ++first;
    if (first < s && n[first] > 0) {
      long par = 0;
      Interval acc(0L, l.prec);
      for (size_t i = 0; i < s; ++i) {
        if (l.b[i]) par += n[i];
        acc = acc + table[i][n[i] + N];
      }
      if (par % 2 == 0 && ceil_of(acc.lower()) <= floor_of(acc.upper())) {
        std::vector<Integer> v;
        for (long x : n) v.emplace_back(x);
        out.push_back(std::move(v));
      }
    }
    size_t k = s;
    while (k > 0 && n[k - 1] == N) n[--k] = -N;
    if (k == 0) break;
    ++n[k - 1];
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return sup_norm(a) < sup_norm(b); });
  return out;
}

bool exact_relation(const CubicCurve& curve, const std::vector<CurvePoint>& pts,
                    const std::vector<Integer>& n, const PrecisionPolicy& policy) {
  CurvePoint acc;
  for (size_t i = 0; i < pts.size(); ++i)
    acc = add(curve, acc, scalar_mul(curve, pts[i], n[i], policy), policy);
  return acc.is_infinity();
}

bool all_rational(const std::vector<CurvePoint>& pts) {
  return std::all_of(pts.begin(), pts.end(), [](const CurvePoint& p) { return p.is_rational(); });
}

struct LatticeOutcome {
  bool certified = false;
  Rational min_norm, relation_norm;
  std::vector<Integer> short_n;
};

LatticeOutcome lattice_check(const Logs& l, long N, long c) {
  size_t s = l.t.size();
  Integer C = 1;
  mpz_mul_2exp(C.get_mpz_t(), C.get_mpz_t(), static_cast<mp_bitcnt_t>(c));
  Rational max_w = 0;
  std::vector<IntRow> rows;
  for (size_t i = 0; i < s; ++i) {
    Rational lo = l.t[i].lower(), hi = l.t[i].upper();
    if (hi - lo > max_w) max_w = hi - lo;
    IntRow r(s + 1, Integer(0));
    r[i] = 1;
    r[s] = round_of(Rational(C) * (lo + hi) / 2);
    rows.push_back(r);
  }
  IntRow last(s + 1, Integer(0));
  last[s] = C;
  rows.push_back(last);
  // |T_i - C t_i| <= 1/2 + C * width(t_i)
  Rational delta = Rational(1, 2) + Rational(C) * max_w;
  Rational sN = Rational(static_cast<long>(s) * N);
  LatticeOutcome out;
  out.relation_norm = sN * N + sN * delta * sN * delta;
  LllResult red = lll_reduce(rows);
  out.min_norm = red.min_gs_norm();
  out.certified = out.min_norm > out.relation_norm;
  if (!out.certified) out.short_n.assign(red.basis[0].begin(), red.basis[0].begin() + s);
  return out;
}

long initial_scale(size_t s, long N) {
  double per = std::log2(std::sqrt(static_cast<double>(s)) * static_cast<double>(N)) + 1;
  return static_cast<long>(std::ceil((s + 1) * per)) + static_cast<long>(s) + 8;
}

// Smallest divisor-reduction of n (n/d for d | gcd) that is still a candidate.
std::vector<Integer> reduce_relation(const Logs& l, std::vector<Integer> n) {
  Integer g = 0;
  for (const auto& v : n) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  for (Integer d = g; d > 1; --d) {
    if (!mpz_divisible_p(g.get_mpz_t(), d.get_mpz_t())) continue;
    std::vector<Integer> m;
    for (const auto& v : n) m.push_back(v / d);
    if (is_candidate(l, m)) {
      n = m;
      break;
    }
  }
  normalize_sign(n);
  return n;
}

}  // namespace

IndependenceResult independence_witness(const CubicCurve& curve,
                                        const std::vector<CurvePoint>& points, long bound,
                                        const PrecisionPolicy& policy, long torsion_max_order) {
  if (bound < 1) throw PreconditionViolated("relation bound must be positive");
  if (curve.component_count() != 2)
    throw PreconditionViolated("independence witness needs a two-component curve");
  size_t s = points.size();
  IndependenceWitness w;
  w.points = points;
  w.bound = bound;
  for (size_t i = 0; i < s; ++i) {
    TorsionEvidence ev = torsion_evidence(curve, points[i], torsion_max_order, policy);
    if (ev.order) {
      std::vector<Integer> n(s, Integer(0));
      n[i] = *ev.order;
      return RelationFound{n, "torsion"};
    }
    w.torsion.push_back(ev);
  }
  bool enumerate = std::pow(2.0 * bound + 1, static_cast<double>(s)) <= kEnumerationLimit;
  w.method = enumerate ? "enumeration" : "lattice";
  long c = enumerate ? 0 : initial_scale(s, bound);
  long prec = std::max(policy.start, c + 64);
  bool rational = all_rational(points);

  while (true) {
    if (prec > policy.ceiling)
      throw PrecisionExhausted("independence search needs more than " +
                               std::to_string(policy.ceiling) + " bits");
    Logs logs;
    try {
      logs = compute_logs(curve, points, prec);
    } catch (const InsufficientPrecision&) {
      prec *= 2;
      continue;
    }
    w.precision_bits = prec;
    w.scale_bits = c;
    w.component_bits = logs.b;

    std::vector<Integer> rel;
    if (enumerate) {
      auto cands = enumerate_candidates(logs, bound);
      if (cands.empty()) return w;
      if (rational)
        for (const auto& n : cands)
          if (exact_relation(curve, points, n, policy)) return RelationFound{n, "exact"};
      rel = cands.front();
    } else {
      LatticeOutcome lo = lattice_check(logs, bound, c);
      if (lo.certified) {
        w.min_norm = lo.min_norm;
        w.relation_norm = lo.relation_norm;
        return w;
      }
      std::vector<Integer> n = lo.short_n;
      bool zero = std::all_of(n.begin(), n.end(), [](const Integer& v) { return sgn(v) == 0; });
      if (zero || !sum_near_integer(logs, n)) {
        // A short vector that is not a near-relation: enlarge the scale.
        c += c / 2;
        prec = std::max(prec, c + 64);
        continue;
      }
      if (!parity_even(logs, n))
        for (auto& v : n) v *= 2;
      rel = reduce_relation(logs, n);
      if (rational && exact_relation(curve, points, rel, policy)) return RelationFound{rel, "exact"};
    }
    if (prec >= policy.ceiling) return RelationFound{rel, "elliptic-log"};
    prec = std::min(prec * 2, policy.ceiling);
  }
}

bool replay_independence(const CubicCurve& curve, const IndependenceWitness& w) {
  Logs logs;
  try {
    logs = compute_logs(curve, w.points, w.precision_bits);
  } catch (const InsufficientPrecision&) {
    return false;
  }
  if (logs.b != w.component_bits) return false;
  if (w.method == "enumeration") return enumerate_candidates(logs, w.bound).empty();
  if (w.method == "lattice") {
    LatticeOutcome lo = lattice_check(logs, w.bound, w.scale_bits);
    return lo.certified && lo.min_norm == w.min_norm && lo.relation_norm == w.relation_norm;
  }
  return false;
}

}  // namespace realforms
