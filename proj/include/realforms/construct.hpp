#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "realforms/elliptic/halving.hpp"
#include "realforms/elliptic/independence.hpp"
#include "realforms/picgroup.hpp"

namespace realforms {

struct SearchOptions {
  long relation_bound = 50;
  long torsion_max_order = 200;
  long curve_attempts = 1000;
  long point_attempts = 200;
  long parameter_bits = 16;  // t is sampled as k / 2^parameter_bits
  long abscissa_bits = 24;   // x of a base point has denominator <= 2^abscissa_bits
  PrecisionPolicy policy = PrecisionPolicy::from_env();
};

/// Blow-up data: the curve, the 5r points p_ij and the evidence behind them.
struct SurfaceConfig {
  int r = 0;
  CubicCurve curve;
  std::uint64_t seed = 0;
  std::vector<CurvePoint> base;                    // p_10, ..., p_r0
  std::vector<std::array<CurvePoint, 4>> associated;  // p_i1..p_i4 with p_ik - p_i4 = delta_k
  std::array<CurvePoint, 3> deltas;                // 2-torsion in ascending x
  IndependenceWitness witness;
  std::vector<bool> real;                          // one flag per p_ij, basis order
  long precision_bits = 0;                         // precision of the interval checks

  const CurvePoint& point(int i, int j) const;
  bool all_real() const;
};

/// Two real components and automorphism group {+-1} (j not 0 or 1728).
bool curve_qualifies(const CubicCurve& curve);

/// y^2 = (x-a1)(x-a2)(x-a3) with distinct rational roots num/den,
/// |num| <= 12, 1 <= den <= 4. Throws SearchExhausted.
CubicCurve search_curve(std::uint64_t seed, long attempts = 1000);

struct BaseSample {
  std::vector<CurvePoint> points;
  IndependenceWitness witness;
  long attempts = 0;
};

/// Identity-component points with rational abscissa, screened for torsion
/// and for relations with |n_i| <= relation_bound.
BaseSample sample_base_points(const CubicCurve& curve, int r, std::uint64_t seed,
                              const SearchOptions& opt = {});

/// Checks a proposed set of base points: identity component, torsion and
/// bounded relations. RelationFound means the set is rejected.
IndependenceResult screen_base_points(const CubicCurve& curve, const std::vector<CurvePoint>& points,
                                      const SearchOptions& opt = {});

/// Orders the associated points of every base point by the delta labelling
/// and runs the distinctness, tangency and collinearity checks.
/// Throws LabellingAmbiguous, CollinearTriple or NoRealAssociates.
SurfaceConfig build_surface(const CubicCurve& curve, const std::vector<CurvePoint>& base,
                            const IndependenceWitness& witness, const PrecisionPolicy& policy = {});

/// search_curve, sample_base_points and build_surface in sequence.
SurfaceConfig construct_surface(int r, std::uint64_t seed, const SearchOptions& opt = {});

/// k in {1,2,3} with q - q4 = delta_k; LabellingAmbiguous if undecided.
int match_delta(const CubicCurve& curve, const CurvePoint& q, const CurvePoint& q4,
                const PrecisionPolicy& policy);

/// All triples of distinct point indices whose classes sum to 3p0.
std::vector<std::array<PointIndex, 3>> collinear_triples(int r);

}  // namespace realforms
