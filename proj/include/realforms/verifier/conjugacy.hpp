#pragma once

#include <vector>

#include "realforms/lattice.hpp"

namespace realforms {

/// sigma_i* squares to the identity. rho* is the identity on Pic(X) when all
/// blown-up points are real, so (sigma_i rho)^2 = id reduces to this check.
/// Throws NonRealConfiguration when the configuration is not all real.
bool cocycle_check(int i, int r, bool all_points_real = true);

struct ConjugacySearchResult {
  bool found = false;
  std::vector<int> word;  // A = sigma_{w0}* sigma_{w1}* ..., empty = identity
  long words_checked = 0;
};

/// Looks for a word A of length <= depth in the sigma_k* with
/// A sigma_i* = sigma_j* A. Words with a repeated adjacent letter equal
/// shorter words, so only reduced words are tested.
ConjugacySearchResult bounded_conjugacy_search(int r, int i, int j, int depth);

/// Product of the sigma_k* along a word.
IntMatrix word_matrix(int r, const std::vector<int>& word);

}  // namespace realforms
