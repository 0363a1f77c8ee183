#pragma once

#include <string>
#include <vector>

#include "realforms/numeric/rational.hpp"

namespace realforms {

enum class Elimination { M, N1, Ns };

std::string to_string(Elimination which);
Elimination parse_elimination(const std::string& s);

/// The quadratic x (b + c x) = 0 obtained from the isometry identity for the
/// row vector v that reads off one coordinate of B.
struct DiophantineResult {
  Elimination which = Elimination::M;
  int r = 0;
  int a = 1;
  int s = 2;                  // block used for Ns
  std::vector<Integer> v;     // the row vector, standard basis order
  Integer b, c;               // derived coefficients
  Integer closed_b, closed_c; // the closed forms they are compared against
  std::vector<Integer> solutions;
  Rational nonzero_root;      // -b/c, the only candidate besides 0
  std::string bound;          // e.g. "0 < |m| = 6/6" or "|m| = 0"

  bool only_zero() const { return solutions.size() == 1 && sgn(solutions[0]) == 0; }
};

/// Derives the equation, checks it against the closed forms
///   m:  m (2(3-r)a + (9-5r)m) = 0
///   n1: n1 (-4(r-2)a + (9-5r)n1) = 0
///   ns: ns (4a + (5r-9)ns) = 0  (up to an overall sign)
/// and returns the integer solution set. Throws UnexpectedSolution unless it
/// is {0}, InconsistentPipeline if the derivation disagrees with the closed form.
DiophantineResult diophantine_solve(Elimination which, int r, int a, int s = 2);

}  // namespace realforms
