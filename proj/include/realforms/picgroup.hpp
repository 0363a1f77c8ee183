#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "realforms/numeric/rational.hpp"

namespace realforms {

/// m p10 + sum n_i p_i4 + s1 delta1 + s2 delta2 in the subgroup of Pic(C)
/// generated by the p_ij. The delta part lives in (Z/2)^2.
struct PicCElement {
  Integer m;
  std::vector<Integer> n;  // n[0] is n_1
  int s1 = 0, s2 = 0;

  int r() const { return static_cast<int>(n.size()); }
  static PicCElement zero(int r);

  PicCElement& operator+=(const PicCElement& o);
  PicCElement& operator-=(const PicCElement& o);
  PicCElement operator-() const;
  friend PicCElement operator+(PicCElement a, const PicCElement& b) { return a += b; }
  friend PicCElement operator-(PicCElement a, const PicCElement& b) { return a -= b; }
  friend PicCElement operator*(const Integer& k, const PicCElement& e);
  bool operator==(const PicCElement& o) const;

  /// [m, n_1, ..., n_r, s1, s2]
  std::vector<Integer> to_array() const;
  static PicCElement from_array(const std::vector<Integer>& a);
  std::string to_string() const;
};

PicCElement encode_point(int i, int j, int r);
/// 3p0 = p10 + 2p14
PicCElement encode_3p0(int r);
Integer degree(const PicCElement& e);

struct RelationVerdict {
  bool forced = false;
  Integer d;
  std::string failed_step;  // empty when forced
  std::string detail;
};

/// Decides whether e = 3d p0 holds. The steps are checked in order:
/// "n1=2m", "n2=0", ..., "nr=0", "degree", "parity".
RelationVerdict solve_relation(const PicCElement& e, const Integer& d);

using PointIndex = std::pair<int, int>;

struct CollinearityVerdict {
  bool collinear = false;
  RelationVerdict relation;
};

/// Three distinct points p_ij are collinear iff their classes sum to 3p0.
CollinearityVerdict collinearity(const std::array<PointIndex, 3>& triple, int r);
bool collinear_triple_test(const std::array<PointIndex, 3>& triple, int r);

}  // namespace realforms
