#include "realforms/lattice.hpp"

#include <sstream>

#include "realforms/errors.hpp"

namespace realforms {

IntMatrix::IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix M(n, n);
  for (size_t i = 0; i < n; ++i) M(i, i) = 1;
  return M;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& d) {
  IntMatrix M(d.size(), d.size());
  for (size_t i = 0; i < d.size(); ++i) M(i, i) = d[i];
  return M;
}

std::vector<Integer> IntMatrix::column(size_t j) const {
  std::vector<Integer> c(rows_);
  for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Integer> IntMatrix::row(size_t i) const {
  return {data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_)};
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix T(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) T(j, i) = (*this)(i, j);
  return T;
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  std::vector<Integer> out(rows_, Integer(0));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0 && sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
  IntMatrix c(a.rows_, b.cols_);
  // The sigma matrices are sparse; skipping zeros matters for long words.
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += x * b(k, j);
    }
  return c;
}

int rank_from_dimension(size_t dim) {
  if (dim < 6 || (dim - 1) % 5 != 0)
    throw DimensionMismatch("lattice dimension " + std::to_string(dim) + " is not 5r+1");
  return static_cast<int>((dim - 1) / 5);
}

PicXVector PicXVector::zero(int r) {
  PicXVector v;
  v.r = r;
  v.d = 0;
  v.m.assign(5 * static_cast<size_t>(r), Integer(0));
  return v;
}

PicXVector PicXVector::line(int r) {
  PicXVector v = zero(r);
  v.d = 1;
  return v;
}

PicXVector PicXVector::exceptional(int r, int i, int j) {
  PicXVector v = zero(r);
  v.m_at(i, j) = -1;
  return v;
}

PicXVector PicXVector::from_standard(int r, const std::vector<Integer>& x) {
  if (x.size() != pic_dimension(r)) throw DimensionMismatch("vector is not of size 5r+1");
  PicXVector v = zero(r);
  v.d = x[0];
  for (size_t k = 1; k < x.size(); ++k) v.m[k - 1] = -x[k];
  return v;
}

std::vector<Integer> PicXVector::standard() const {
  std::vector<Integer> x;
  x.reserve(m.size() + 1);
  x.push_back(d);
  for (const auto& v : m) x.push_back(-v);
  return x;
}

Integer intersect_standard(const std::vector<Integer>& x, const std::vector<Integer>& y) {
  if (x.size() != y.size() || x.empty()) throw DimensionMismatch("intersection of vectors of different size");
  Integer s = x[0] * y[0];
  for (size_t k = 1; k < x.size(); ++k) s -= x[k] * y[k];
  return s;
}

Integer intersect(const PicXVector& v, const PicXVector& w) {
  if (v.r != w.r || v.m.size() != w.m.size()) throw DimensionMismatch("classes on different surfaces");
  Integer s = v.d * w.d;
  for (size_t k = 0; k < v.m.size(); ++k) s -= v.m[k] * w.m[k];
  return s;
}

PicXVector canonical_class(int r) {
  PicXVector K = PicXVector::zero(r);
  K.d = -3;
  for (auto& v : K.m) v = -1;
  return K;
}

PicXVector anticanonical_class(int r) {
  PicXVector C = PicXVector::zero(r);
  C.d = 3;
  for (auto& v : C.m) v = 1;
  return C;
}

IntMatrix intersection_form(int r) {
  std::vector<Integer> d(pic_dimension(r), Integer(-1));
  d[0] = 1;
  return IntMatrix::diagonal(d);
}

IsometryFlags isometry_checks(const IntMatrix& G) {
  if (G.rows() != G.cols()) throw DimensionMismatch("isometry matrix must be square");
  int r = rank_from_dimension(G.rows());
  IntMatrix Q = intersection_form(r);
  IsometryFlags f;
  f.is_isometry = G * Q * G.transpose() == Q;
  std::vector<Integer> K = canonical_class(r).standard();
  f.preserves_K = G.apply(K) == K;
  return f;
}

Isometry Isometry::from_matrix(const IntMatrix& G) {
  Isometry g;
  g.flags = isometry_checks(G);
  g.r = rank_from_dimension(G.rows());
  g.G = G;
  return g;
}

PicXVector Isometry::image(size_t basis_position) const {
  return PicXVector::from_standard(r, G.column(basis_position));
}

PicXVector Isometry::apply(const PicXVector& v) const {
  if (v.r != r) throw DimensionMismatch("class and isometry on different surfaces");
  return PicXVector::from_standard(r, G.apply(v.standard()));
}

Isometry operator*(const Isometry& a, const Isometry& b) {
  if (a.r != b.r) throw DimensionMismatch("composing isometries of different surfaces");
  Isometry c;
  c.r = a.r;
  c.G = a.G * b.G;
  c.flags = {a.flags.is_isometry && b.flags.is_isometry, a.flags.preserves_K && b.flags.preserves_K};
  return c;
}

Isometry identity_isometry(int r) {
  return Isometry{r, IntMatrix::identity(pic_dimension(r)), {true, true}};
}

Isometry sigma_star(int i, int r) {
  if (r < 1 || i < 1 || i > r) throw PreconditionViolated("sigma_star index out of range");
  IntMatrix G = IntMatrix::identity(pic_dimension(r));
  size_t L = 0, e0 = basis_index(i, 0);
  // [L] -> 3[L] - 2[E_i0] - [E_i1] - ... - [E_i4]
  G(L, L) = 3;
  G(e0, L) = -2;
  for (int j = 1; j <= 4; ++j) G(basis_index(i, j), L) = -1;
  // [E_i0] -> 2[L] - [E_i0] - ... - [E_i4]
  G(L, e0) = 2;
  G(e0, e0) = -1;
  for (int j = 1; j <= 4; ++j) G(basis_index(i, j), e0) = -1;
  // [E_ij] -> [L] - [E_i0] - [E_ij]
  for (int j = 1; j <= 4; ++j) {
    size_t c = basis_index(i, j);
    G(L, c) = 1;
    G(e0, c) = -1;
    G(c, c) = -1;
  }
  return Isometry::from_matrix(G);
}

PicCElement phi(const PicXVector& v) {
  PicCElement out = v.d * encode_3p0(v.r);
  for (int i = 1; i <= v.r; ++i)
    for (int j = 0; j <= 4; ++j) {
      const Integer& mij = v.m_at(i, j);
      if (sgn(mij) != 0) out -= mij * encode_point(i, j, v.r);
    }
  return out;
}

MainIdeaEvaluation main_idea_identity(const Isometry& g, const std::vector<Integer>& v) {
  size_t n = pic_dimension(g.r);
  if (v.size() != n) throw DimensionMismatch("row vector must have size 5r+1");
  IntMatrix Q = intersection_form(g.r);
  MainIdeaEvaluation ev;
  ev.lhs_vector = Q.apply(v);
  ev.vG = g.G.transpose().apply(v);
  ev.rhs_vector = g.G.apply(Q.apply(ev.vG));
  ev.lhs_form = intersect_standard(v, v);
  ev.rhs_form = intersect_standard(ev.vG, ev.vG);
  if (ev.lhs_vector != ev.rhs_vector)
    throw IdentityViolated("Q v^T differs from G Q G^T v^T");
  if (ev.lhs_form != ev.rhs_form)
    throw IdentityViolated("a_0^2 - sum a_ij^2 = " + ev.lhs_form.get_str() +
                           " but (v.G_0)^2 - sum (v.G_ij)^2 = " + ev.rhs_form.get_str());
  return ev;
}

std::string matrix_to_string(const IntMatrix& M) {
  std::ostringstream os;
  os << "dim=" << M.rows() << "x" << M.cols();
  for (size_t i = 0; i < M.rows(); ++i) {
    os << "\n";
    for (size_t j = 0; j < M.cols(); ++j) os << (j ? " " : "") << M(i, j).get_str();
  }
  return os.str();
}

}  // namespace realforms
