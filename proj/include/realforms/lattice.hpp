#pragma once

#include <string>
#include <vector>

#include "realforms/numeric/rational.hpp"
#include "realforms/picgroup.hpp"

namespace realforms {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols);
  static IntMatrix identity(size_t n);
  static IntMatrix diagonal(const std::vector<Integer>& d);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Integer& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> column(size_t j) const;
  std::vector<Integer> row(size_t i) const;
  IntMatrix transpose() const;
  std::vector<Integer> apply(const std::vector<Integer>& v) const;  // M v
  const std::vector<Integer>& data() const { return data_; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix& o) const = default;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

/// Basis position of E_ij; L sits at position 0.
inline size_t basis_index(int i, int j) { return 1 + 5 * static_cast<size_t>(i - 1) + j; }
inline size_t pic_dimension(int r) { return 5 * static_cast<size_t>(r) + 1; }
/// r from the lattice dimension 5r+1; DimensionMismatch otherwise.
int rank_from_dimension(size_t dim);

/// The class d[L] - sum m_ij [E_ij]. m is indexed like the basis minus one.
struct PicXVector {
  int r = 0;
  Integer d;
  std::vector<Integer> m;

  static PicXVector zero(int r);
  static PicXVector line(int r);
  static PicXVector exceptional(int r, int i, int j);  // [E_ij], so m_ij = -1
  /// Coordinates x with class x_0 [L] + sum x_ij [E_ij].
  static PicXVector from_standard(int r, const std::vector<Integer>& x);
  std::vector<Integer> standard() const;

  Integer& m_at(int i, int j) { return m[basis_index(i, j) - 1]; }
  const Integer& m_at(int i, int j) const { return m[basis_index(i, j) - 1]; }
  bool operator==(const PicXVector& o) const = default;
};

Integer intersect(const PicXVector& v, const PicXVector& w);
Integer intersect_standard(const std::vector<Integer>& x, const std::vector<Integer>& y);

/// K_X = -3[L] + sum [E_ij].
PicXVector canonical_class(int r);
/// [C~] = -K_X = 3[L] - sum [E_ij].
PicXVector anticanonical_class(int r);
/// diag(1, -1, ..., -1)
IntMatrix intersection_form(int r);

struct IsometryFlags {
  bool is_isometry = false;
  bool preserves_K = false;
  bool operator==(const IsometryFlags&) const = default;
};

/// Matrix of g* on Pic(X). Column k holds the image of the k-th basis class
/// in standard coordinates (the coefficient of [E_ij] is the entry itself,
/// not its negative); use image() for the minus-sign view.
struct Isometry {
  int r = 0;
  IntMatrix G;
  IsometryFlags flags;

  static Isometry from_matrix(const IntMatrix& G);
  PicXVector image(size_t basis_position) const;
  PicXVector apply(const PicXVector& v) const;
  friend Isometry operator*(const Isometry& a, const Isometry& b);
  bool operator==(const Isometry& o) const { return r == o.r && G == o.G; }
};

IsometryFlags isometry_checks(const IntMatrix& G);
Isometry sigma_star(int i, int r);
Isometry identity_isometry(int r);

/// 3d p0 - sum m_ij p_ij rewritten in the basis p10, p14, ..., p_r4, delta1, delta2.
PicCElement phi(const PicXVector& v);

struct MainIdeaEvaluation {
  std::vector<Integer> lhs_vector;  // Q v^T
  std::vector<Integer> rhs_vector;  // G Q G^T v^T
  std::vector<Integer> vG;          // (v.G_0, v.G_10, ..., v.G_r4)
  Integer lhs_form;                 // a_0^2 - sum a_ij^2
  Integer rhs_form;                 // (v.G_0)^2 - sum (v.G_ij)^2
};

/// Evaluates both sides of the vector identity and the quadratic identity for
/// the row vector v and throws IdentityViolated if either fails.
MainIdeaEvaluation main_idea_identity(const Isometry& g, const std::vector<Integer>& v);

/// Serialization helper: "r=3 dim=16" plus the row-major entries.
std::string matrix_to_string(const IntMatrix& M);

}  // namespace realforms
