#include "realforms/numeric/lll.hpp"

#include <stdexcept>

namespace realforms {

namespace {

struct GramSchmidt {
  std::vector<std::vector<Rational>> mu;
  std::vector<Rational> B;

  void compute(const std::vector<IntRow>& b) {
    size_t n = b.size(), dim = b[0].size();
    std::vector<std::vector<Rational>> star(n, std::vector<Rational>(dim));
    mu.assign(n, std::vector<Rational>(n));
    B.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
      for (size_t k = 0; k < dim; ++k) star[i][k] = b[i][k];
      for (size_t j = 0; j < i; ++j) {
        Rational d = 0;
        for (size_t k = 0; k < dim; ++k) d += Rational(b[i][k]) * star[j][k];
        mu[i][j] = d / B[j];
        for (size_t k = 0; k < dim; ++k) star[i][k] -= mu[i][j] * star[j][k];
      }
      Rational s = 0;
      for (size_t k = 0; k < dim; ++k) s += star[i][k] * star[i][k];
      if (sgn(s) == 0) throw std::invalid_argument("lll_reduce: rows are linearly dependent");
      B[i] = s;
    }
  }
};

}  // namespace

Rational LllResult::min_gs_norm() const {
  Rational m = gs_norms.at(0);
  for (const auto& v : gs_norms)
    if (v < m) m = v;
  return m;
}

LllResult lll_reduce(std::vector<IntRow> b, const Rational& delta) {
  if (b.empty()) return {};
  size_t n = b.size();
  GramSchmidt gs;
  gs.compute(b);
  size_t k = 1;
  while (k < n) {
    // size-reduce b_k against b_{k-1}, ..., b_0
    for (size_t jj = k; jj-- > 0;) {
      Integer q = round_of(gs.mu[k][jj]);
      if (sgn(q) == 0) continue;
      for (size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[jj][t];
      for (size_t t = 0; t < jj; ++t) gs.mu[k][t] -= Rational(q) * gs.mu[jj][t];
      gs.mu[k][jj] -= q;
    }
    Rational lhs = gs.B[k];
    Rational rhs = (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.B[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gs.compute(b);
      k = k > 1 ? k - 1 : 1;
    }
  }
  return LllResult{b, gs.B};
}

}  // namespace realforms
