#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "realforms/numeric/rational.hpp"

namespace realforms {

/// Unknown coefficient of an automorphism alpha:
///   alpha*[L]    = d[L] - sum m_ab [E_ab]
///   alpha*[E_kl] = n_kl[L] - sum e^{kl}_ab [E_ab]
struct Unknown {
  char kind = 'd';  // 'd', 'm', 'n', 'e'
  int k = 0, l = 0;  // superscript block for 'e'; subscript for 'm', 'n'
  int a = 0, b = 0;  // subscript for 'e'

  static Unknown d() { return {'d', 0, 0, 0, 0}; }
  static Unknown m(int a, int b) { return {'m', a, b, 0, 0}; }
  static Unknown n(int k, int l) { return {'n', k, l, 0, 0}; }
  static Unknown e(int k, int l, int a, int b) { return {'e', k, l, a, b}; }

  std::string name() const;
  /// Replaces every block index t by perm[t] (perm is 1-based, perm[0] unused).
  Unknown relabel(const std::vector<int>& perm) const;
  auto operator<=>(const Unknown&) const = default;
};

/// Integer affine form c + sum coeff * unknown.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(Integer c) : constant_(std::move(c)) {}
  static LinearForm var(const Unknown& u, Integer coeff = 1);

  const Integer& constant() const { return constant_; }
  Integer coeff(const Unknown& u) const;
  const std::map<Unknown, Integer>& terms() const { return terms_; }
  bool is_constant() const { return terms_.empty(); }

  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(const Integer& k, const LinearForm& f);
  LinearForm operator-() const;
  bool operator==(const LinearForm& o) const = default;

  LinearForm relabel(const std::vector<int>& perm) const;
  std::string to_string() const;

 private:
  Integer constant_ = 0;
  std::map<Unknown, Integer> terms_;  // no zero coefficients
};

/// Class in Pic(X) with symbolic standard coordinates.
using SymbolicClass = std::vector<LinearForm>;

}  // namespace realforms
