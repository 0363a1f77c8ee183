#include "realforms/verifier/conjugacy.hpp"

#include "realforms/errors.hpp"

namespace realforms {

bool cocycle_check(int i, int r, bool all_points_real) {
  if (!all_points_real) throw NonRealConfiguration("cocycle check needs every blown-up point real");
  Isometry s = sigma_star(i, r);
  if (!(s.G * s.G == IntMatrix::identity(pic_dimension(r))))
    throw InconsistentPipeline("sigma_" + std::to_string(i) + "* is not an involution");
  return true;
}

IntMatrix word_matrix(int r, const std::vector<int>& word) {
  IntMatrix M = IntMatrix::identity(pic_dimension(r));
  for (int k : word) M = M * sigma_star(k, r).G;
  return M;
}

namespace {

struct Search {
  int r;
  std::vector<IntMatrix> sigma;
  const IntMatrix* Si;
  const IntMatrix* Sj;
  int depth;
  ConjugacySearchResult out;
  std::vector<int> word;

  bool visit(const IntMatrix& A) {
    ++out.words_checked;
    if (A * *Si == *Sj * A) {
      out.found = true;
      out.word = word;
      return true;
    }
    if (static_cast<int>(word.size()) == depth) return false;
    for (int k = 1; k <= r; ++k) {
      if (!word.empty() && word.back() == k) continue;
      word.push_back(k);
      if (visit(A * sigma[static_cast<size_t>(k)])) return true;
      word.pop_back();
    }
    return false;
  }
};

}  // namespace

ConjugacySearchResult bounded_conjugacy_search(int r, int i, int j, int depth) {
  if (depth < 1) throw PreconditionViolated("conjugacy search depth must be >= 1");
  if (i < 1 || i > r || j < 1 || j > r) throw PreconditionViolated("pair index out of range");
  Search s{r, {}, nullptr, nullptr, depth, {}, {}};
  s.sigma.emplace_back();
  for (int k = 1; k <= r; ++k) s.sigma.push_back(sigma_star(k, r).G);
  s.Si = &s.sigma[static_cast<size_t>(i)];
  s.Sj = &s.sigma[static_cast<size_t>(j)];
  s.visit(IntMatrix::identity(pic_dimension(r)));
  return s.out;
}

}  // namespace realforms
