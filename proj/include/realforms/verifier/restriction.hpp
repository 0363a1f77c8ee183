#pragma once

#include <vector>

#include "realforms/lattice.hpp"
#include "realforms/verifier/diophantine.hpp"

namespace realforms {

/// Action D -> aD + deg(D) B of g restricted to the cubic, on the subgroup
/// generated by the p_ij.
struct RestrictionClass {
  int a = 1;
  PicCElement B;
  /// The eliminations used, in order m, n1, n2..nr, each for the found a.
  std::vector<DiophantineResult> eliminations;
  Integer anticanonical_pairing;  // [C~] . g*[E_10]
  Integer first_row_sum;          // 3 n_10 - sum e^{10}_ij

  /// a = 1 and B = s1 delta1 + s2 delta2.
  bool two_torsion() const;
};

/// Requires isometry_checks to pass. Throws NotPhiCompatible when no (a, B)
/// fits the images of the basis, InconsistentPipeline if a later step fails.
RestrictionClass classify_restriction(const Isometry& g);

struct ConstraintInstance {
  int i = 0, j = 0;
  Integer lhs;  // 2 e^{i0}_{ij} - 1
  Integer rhs;  // e^{i1}_{ij} + ... + e^{i4}_{ij}
  bool holds() const { return lhs == rhs; }
};

/// All 4r instances 2e^{i0}_{ij} - 1 = sum_l e^{il}_{ij}, j != 0, with the
/// coefficients read from G^{-1} = Q G^T Q.
std::vector<ConstraintInstance> evaluate_constraints(const Isometry& g);
/// As above; throws ConstraintViolated naming the first failing instance.
std::vector<ConstraintInstance> coefficient_constraints(const Isometry& g);

/// e^{kl}_{ij} of g, i.e. g*[E_kl] = n_kl[L] - sum e^{kl}_{ij}[E_ij].
Integer e_coefficient(const Isometry& g, int k, int l, int i, int j);

}  // namespace realforms
