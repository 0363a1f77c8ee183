#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "realforms/lattice.hpp"
#include "realforms/verifier/linear_form.hpp"

namespace realforms {

using Fields = std::vector<std::pair<std::string, std::string>>;

/// One replayable step of a derivation.
struct DerivationStep {
  std::string kind;
  Fields inputs;
  Fields outputs;
  std::string tag;
  bool operator==(const DerivationStep&) const = default;
};

struct InequivalenceFragment {
  int r = 0, i = 0, j = 0;
  /// Block relabelling taking the pair (1,2) to (i,j); 1-based, entry 0 unused.
  std::vector<int> permutation;
  std::vector<DerivationStep> steps;
  LinearForm final_equation;  // = 0
  std::string verdict;        // "CONTRADICTION", or "EQUIVALENT" when i == j

  bool operator==(const InequivalenceFragment&) const = default;
};

/// Symbolic derivation that no automorphism alpha satisfies
/// sigma_i alpha = alpha sigma_j. The coefficients of alpha stay unknowns
/// throughout, so the argument covers every alpha, not a searched subset.
/// For i == j the fragment records the positive control alpha = id.
InequivalenceFragment inequivalence_certificate(int r, int i, int j);

/// Re-derives the fragment and compares it step by step. Returns the first
/// failing step as "inequivalence(i,j)/<kind>", or nullopt when it replays.
std::optional<std::string> replay_inequivalence(const InequivalenceFragment& f);

/// Coordinates of alpha*[basis_k] with unknown entries.
SymbolicClass alpha_column(int r, size_t k);
SymbolicClass apply_matrix(const IntMatrix& G, const SymbolicClass& x);
/// alpha* applied to an integer class in standard coordinates.
SymbolicClass apply_alpha(int r, const std::vector<Integer>& x);

/// The permutation of blocks {1..r} with 1 -> i, 2 -> j, the rest in order.
std::vector<int> pair_permutation(int r, int i, int j);

}  // namespace realforms
