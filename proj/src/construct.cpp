#include "realforms/construct.hpp"

#include <algorithm>
#include <random>

#include "realforms/elliptic/ellog.hpp"
#include "realforms/errors.hpp"

namespace realforms {

namespace {

// Keeps the curve and point streams apart for the same user seed.
constexpr std::uint64_t kPointStream = 0x9e3779b97f4a7c15ULL;

std::vector<CurvePoint> all_points(const SurfaceConfig& c) {
  std::vector<CurvePoint> out;
  for (int i = 1; i <= c.r; ++i)
    for (int j = 0; j <= 4; ++j) out.push_back(c.point(i, j));
  return out;
}

PointIndex index_of(size_t k) { return {static_cast<int>(k / 5) + 1, static_cast<int>(k % 5)}; }

Interval collinearity_det(const CurvePoint& a, const CurvePoint& b, const CurvePoint& c, mpfr_prec_t prec) {
  Interval x1 = a.x().enclose(prec), y1 = a.y().enclose(prec);
  Interval x2 = b.x().enclose(prec), y2 = b.y().enclose(prec);
  Interval x3 = c.x().enclose(prec), y3 = c.y().enclose(prec);
  return (x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1);
}

void check_not_collinear(const std::vector<CurvePoint>& pts, const PrecisionPolicy& policy) {
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = a + 1; b < pts.size(); ++b)
      for (size_t c = b + 1; c < pts.size(); ++c) {
        bool separated = false;
        for (long prec = policy.start; !separated; prec *= 2) {
          try {
            separated = !collinearity_det(pts[a], pts[b], pts[c], prec).contains_zero();
          } catch (const InsufficientPrecision&) {
          }
          if (!separated && prec >= policy.ceiling) {
            auto [i1, j1] = index_of(a);
            auto [i2, j2] = index_of(b);
            auto [i3, j3] = index_of(c);
            throw CollinearTriple("points (" + std::to_string(i1) + "," + std::to_string(j1) + "), (" +
                                  std::to_string(i2) + "," + std::to_string(j2) + "), (" +
                                  std::to_string(i3) + "," + std::to_string(j3) +
                                  ") are not separated from a line");
          }
        }
      }
}

}  // namespace

const CurvePoint& SurfaceConfig::point(int i, int j) const {
  if (i < 1 || i > r || j < 0 || j > 4) throw PreconditionViolated("point index out of range");
  return j == 0 ? base[static_cast<size_t>(i - 1)] : associated[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
}

bool SurfaceConfig::all_real() const {
  return real.size() == 5 * static_cast<size_t>(r) && std::all_of(real.begin(), real.end(), [](bool b) { return b; });
}

bool curve_qualifies(const CubicCurve& curve) { return curve.component_count() == 2 && curve.aut_gp_is_Z2(); }

CubicCurve search_curve(std::uint64_t seed, long attempts) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-12, 12), den(1, 4);
  for (long k = 0; k < attempts; ++k) {
    std::array<Rational, 3> roots;
    for (auto& a : roots) {
      a = Rational(num(rng), den(rng));
      a.canonicalize();
    }
    std::sort(roots.begin(), roots.end());
    if (roots[0] == roots[1] || roots[1] == roots[2]) continue;
    CubicCurve c = CubicCurve::from_roots(roots[0], roots[1], roots[2]);
    if (curve_qualifies(c)) return c;
  }
  throw SearchExhausted("no qualifying curve after " + std::to_string(attempts) + " attempts");
}

IndependenceResult screen_base_points(const CubicCurve& curve, const std::vector<CurvePoint>& points,
                                      const SearchOptions& opt) {
  for (const auto& p : points)
    if (!p.is_infinity() && !is_two_torsion(p) && component_of(curve, p, opt.policy) != Component::Identity)
      throw PreconditionViolated("base points must lie on the identity component");
  return independence_witness(curve, points, opt.relation_bound, opt.policy, opt.torsion_max_order);
}

BaseSample sample_base_points(const CubicCurve& curve, int r, std::uint64_t seed, const SearchOptions& opt) {
  if (!curve_qualifies(curve)) throw PreconditionViolated("curve does not qualify");
  if (r < 1) throw PreconditionViolated("need at least one base point");
  std::mt19937_64 rng(seed ^ kPointStream);
  long den = 1L << opt.parameter_bits;
  std::uniform_int_distribution<long> pick(1, den - 1);
  BaseSample out;
  while (static_cast<int>(out.points.size()) < r) {
    if (out.attempts >= opt.point_attempts)
      throw SearchExhausted("only " + std::to_string(out.points.size()) + " of " + std::to_string(r) +
                            " base points after " + std::to_string(out.attempts) + " attempts");
    ++out.attempts;
    long k = pick(rng);
    if (2 * k == den) continue;
    CurvePoint cand = point_at_parameter(curve, Rational(k, den), opt.abscissa_bits);
    std::vector<CurvePoint> trial = out.points;
    trial.push_back(cand);
    try {
      IndependenceResult res = screen_base_points(curve, trial, opt);
      if (auto* w = std::get_if<IndependenceWitness>(&res)) {
        out.points = std::move(trial);
        out.witness = *w;
      }
    } catch (const PrecisionExhausted&) {
      // Undecided candidates are dropped, never accepted.
    }
  }
  return out;
}

int match_delta(const CubicCurve& curve, const CurvePoint& q, const CurvePoint& q4,
                const PrecisionPolicy& policy) {
  CurvePoint d;
  try {
    d = subtract(curve, q, q4, policy);
  } catch (const PrecisionExhausted& e) {
    throw LabellingAmbiguous(std::string("difference undecided: ") + e.what());
  }
  if (d.is_infinity()) throw LabellingAmbiguous("two associated points coincide");
  const auto& roots = curve.real_roots();
  for (long prec = policy.start;; prec *= 2) {
    if (prec > policy.ceiling) break;
    try {
      Interval x = d.x().enclose(prec), y = d.y().enclose(prec);
      int hit = 0, count = 0;
      for (int k = 0; k < 3; ++k)
        if (x.overlaps(roots[static_cast<size_t>(k)].enclose(prec))) {
          hit = k + 1;
          ++count;
        }
      if (count == 0) throw LabellingAmbiguous("difference of associated points is not 2-torsion");
      if (count == 1 && y.contains_zero()) return hit;
    } catch (const InsufficientPrecision&) {
    }
  }
  throw LabellingAmbiguous("2-torsion label undecided at " + std::to_string(policy.ceiling) + " bits");
}

std::vector<std::array<PointIndex, 3>> collinear_triples(int r) {
  std::vector<std::array<PointIndex, 3>> out;
  size_t n = 5 * static_cast<size_t>(r);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      for (size_t c = b + 1; c < n; ++c) {
        std::array<PointIndex, 3> t{index_of(a), index_of(b), index_of(c)};
        if (collinear_triple_test(t, r)) out.push_back(t);
      }
  return out;
}

SurfaceConfig build_surface(const CubicCurve& curve, const std::vector<CurvePoint>& base,
                            const IndependenceWitness& witness, const PrecisionPolicy& policy) {
  if (!curve_qualifies(curve)) throw PreconditionViolated("curve does not qualify");
  SurfaceConfig cfg{static_cast<int>(base.size()), curve, 0, base, {}, {}, witness, {}, policy.start};
  auto tt = two_torsion(curve);
  cfg.deltas = {tt[1], tt[2], tt[3]};

  for (const auto& p : base) {
    std::vector<CurvePoint> qs = associated_points(curve, p, policy);
    if (qs.size() != 4)
      throw NoRealAssociates("expected 4 real associated points, found " + std::to_string(qs.size()));
    for (const auto& q : qs)
      if (!tangency_residual(curve, q, p, policy.start).contains_zero())
        throw InconsistentPipeline("tangent at an associated point misses its base point");
    // p_i4 is the associated point of smallest abscissa.
    std::array<CurvePoint, 4> ordered;
    ordered[3] = qs[0];
    std::array<bool, 3> used{};
    for (size_t t = 1; t < 4; ++t) {
      int k = match_delta(curve, qs[t], qs[0], policy);
      if (used[static_cast<size_t>(k - 1)]) throw LabellingAmbiguous("two differences match the same delta");
      used[static_cast<size_t>(k - 1)] = true;
      ordered[static_cast<size_t>(k - 1)] = qs[t];
    }
    cfg.associated.push_back(ordered);
  }

  std::vector<CurvePoint> pts = all_points(cfg);
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = a + 1; b < pts.size(); ++b)
      if (points_equal(pts[a], pts[b], policy)) {
        auto [i1, j1] = index_of(a);
        auto [i2, j2] = index_of(b);
        throw InconsistentPipeline("points (" + std::to_string(i1) + "," + std::to_string(j1) + ") and (" +
                              std::to_string(i2) + "," + std::to_string(j2) + ") coincide");
      }
  if (!collinear_triples(cfg.r).empty()) throw CollinearTriple("classes of three points sum to 3p0");
  check_not_collinear(pts, policy);
  cfg.real.assign(pts.size(), true);
  return cfg;
}

SurfaceConfig construct_surface(int r, std::uint64_t seed, const SearchOptions& opt) {
  CubicCurve curve = search_curve(seed, opt.curve_attempts);
  BaseSample s = sample_base_points(curve, r, seed, opt);
  SurfaceConfig cfg = build_surface(curve, s.points, s.witness, opt.policy);
  cfg.seed = seed;
  return cfg;
}

}  // namespace realforms
