#pragma once

#include <vector>

#include "realforms/numeric/rational.hpp"

namespace realforms {

using IntRow = std::vector<Integer>;

struct LllResult {
  std::vector<IntRow> basis;
  std::vector<Rational> gs_norms;  // squared Gram-Schmidt lengths |b_i*|^2
  /// Every nonzero lattice vector v has |v|^2 >= min_gs_norm.
  Rational min_gs_norm() const;
};

/// Exact LLL reduction of linearly independent integer rows, Lovasz constant delta.
LllResult lll_reduce(std::vector<IntRow> rows, const Rational& delta = Rational(3, 4));

}  // namespace realforms
