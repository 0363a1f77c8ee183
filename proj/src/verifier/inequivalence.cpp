#include "realforms/verifier/inequivalence.hpp"

#include <algorithm>
#include <sstream>

#include "realforms/errors.hpp"
#include "realforms/verifier/diophantine.hpp"

namespace realforms {

namespace {

std::string idx(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::string equation(const LinearForm& f) { return f.to_string() + " = 0"; }

std::string perm_string(const std::vector<int>& perm) {
  std::ostringstream os;
  os << "[";
  for (size_t t = 1; t < perm.size(); ++t) os << (t > 1 ? "," : "") << perm[t];
  os << "]";
  return os.str();
}

std::string quadratic_string(const DiophantineResult& d) {
  std::string x = to_string(d.which);
  std::ostringstream os;
  os << x << "(" << d.b.get_str() << (sgn(d.c) < 0 ? " - " : " + ") << Integer(abs(d.c)).get_str() << x << ") = 0";
  return os.str();
}

std::string solution_set(const DiophantineResult& d) {
  std::string s = "{";
  for (size_t k = 0; k < d.solutions.size(); ++k) s += (k ? "," : "") + d.solutions[k].get_str();
  return s + "}";
}

// Coefficient of [E_{q,1}] in sigma_p* alpha*[L] minus that in alpha* sigma_q*[L].
struct Comparison {
  LinearForm lhs, rhs, equation;
};

Comparison compare_coefficients(int r, int p, int q) {
  size_t target = basis_index(q, 1);
  Comparison c;
  c.lhs = apply_matrix(sigma_star(p, r).G, alpha_column(r, 0))[target];
  c.rhs = apply_alpha(r, sigma_star(q, r).G.column(0))[target];
  c.equation = c.lhs - c.rhs;
  if (sgn(c.equation.coeff(Unknown::m(q, 1))) < 0) c.equation = -c.equation;
  return c;
}

// 2e^{q0}_{q1} - 1 - sum_l e^{ql}_{q1}
LinearForm constraint_form(int q) {
  LinearForm c = LinearForm::var(Unknown::e(q, 0, q, 1), 2) - LinearForm(Integer(1));
  for (int l = 1; l <= 4; ++l) c -= LinearForm::var(Unknown::e(q, l, q, 1));
  return c;
}

DerivationStep reduction_step(int i, int j) {
  std::string si = std::to_string(i), sj = std::to_string(j);
  return {"reduction",
          {{"points", "all blown-up points real"}, {"rho*", "id on Pic(X)"}},
          {{"claim", "sigma_" + si + " rho ~ sigma_" + sj + " rho iff sigma_" + si + " alpha = alpha sigma_" +
                         sj + " for some alpha in Aut(X)"},
           {"scope",
            "symbolic in the coefficients of an arbitrary alpha; the bounded conjugacy search is a "
            "separate sanity check"}},
          "real-points"};
}

DerivationStep restriction_step(int r) {
  DerivationStep s{"restriction", {{"r", std::to_string(r)}}, {}, "restriction-to-cubic"};
  for (int a : {1, -1}) {
    std::string as = a > 0 ? "+1" : "-1";
    std::vector<DiophantineResult> eqs = {diophantine_solve(Elimination::M, r, a),
                                          diophantine_solve(Elimination::N1, r, a),
                                          diophantine_solve(Elimination::Ns, r, a, 2)};
    for (const auto& d : eqs) {
      std::string key = to_string(d.which) + "[a=" + as + "]";
      s.outputs.push_back({key, quadratic_string(d) + " => " + solution_set(d) + "; " + d.bound});
    }
  }
  s.outputs.push_back({"a", "1, from 3n_{1,0} - sum e^{1,0} = a and [C~].[E_{1,0}] = 1"});
  s.outputs.push_back({"B", "s1 delta1 + s2 delta2 (2-torsion)"});
  return s;
}

}  // namespace

SymbolicClass alpha_column(int r, size_t k) {
  SymbolicClass out(pic_dimension(r));
  if (k == 0) {
    out[0] = LinearForm::var(Unknown::d());
    for (int a = 1; a <= r; ++a)
      for (int b = 0; b <= 4; ++b) out[basis_index(a, b)] = LinearForm::var(Unknown::m(a, b), -1);
    return out;
  }
  int kk = static_cast<int>((k - 1) / 5) + 1, ll = static_cast<int>((k - 1) % 5);
  out[0] = LinearForm::var(Unknown::n(kk, ll));
  for (int a = 1; a <= r; ++a)
    for (int b = 0; b <= 4; ++b) out[basis_index(a, b)] = LinearForm::var(Unknown::e(kk, ll, a, b), -1);
  return out;
}

SymbolicClass apply_matrix(const IntMatrix& G, const SymbolicClass& x) {
  if (G.cols() != x.size()) throw DimensionMismatch("symbolic class has the wrong size");
  SymbolicClass out(G.rows());
  for (size_t row = 0; row < G.rows(); ++row)
    for (size_t col = 0; col < G.cols(); ++col)
      if (sgn(G(row, col)) != 0) out[row] += G(row, col) * x[col];
  return out;
}

SymbolicClass apply_alpha(int r, const std::vector<Integer>& x) {
  if (x.size() != pic_dimension(r)) throw DimensionMismatch("class has the wrong size");
  SymbolicClass out(x.size());
  for (size_t k = 0; k < x.size(); ++k) {
    if (sgn(x[k]) == 0) continue;
    SymbolicClass col = alpha_column(r, k);
    for (size_t t = 0; t < out.size(); ++t) out[t] += x[k] * col[t];
  }
  return out;
}

std::vector<int> pair_permutation(int r, int i, int j) {
  std::vector<int> perm(static_cast<size_t>(r) + 1, 0);
  perm[1] = i;
  perm[2] = j;
  int next = 1;
  for (int t = 3; t <= r; ++t) {
    while (next == i || next == j) ++next;
    perm[static_cast<size_t>(t)] = next++;
  }
  return perm;
}

InequivalenceFragment inequivalence_certificate(int r, int i, int j) {
  if (r < 3) throw PreconditionViolated("inequivalence needs r >= 3");
  if (i < 1 || i > r || j < 1 || j > r) throw PreconditionViolated("pair index out of range");
  InequivalenceFragment f;
  f.r = r;
  f.i = i;
  f.j = j;
  f.steps.push_back(reduction_step(i, j));

  if (i == j) {
    f.permutation = pair_permutation(r, i, i == 1 ? 2 : 1);
    Isometry s = sigma_star(i, r), id = identity_isometry(r);
    bool commutes = (id * s).G == (s * id).G;
    f.steps.push_back({"self-conjugacy",
                       {{"alpha", "id"}},
                       {{"check", std::string("id* sigma_") + std::to_string(i) + "* = sigma_" +
                                      std::to_string(i) + "* id*: " + (commutes ? "holds" : "fails")}},
                       "positive-control"});
    f.verdict = commutes ? "EQUIVALENT" : "UNDECIDED";
    return f;
  }

  f.steps.push_back(restriction_step(r));

  LinearForm constraint = constraint_form(j);
  f.steps.push_back({"coefficient-constraint",
                     {{"instance", idx(j, 1)}},
                     {{"constraint", equation(constraint)}},
                     "coefficient-constraint"});

  // The argument is written for (1,2) and transported to (i,j) by relabelling
  // blocks; the direct computation for (i,j) must agree with it.
  f.permutation = pair_permutation(r, i, j);
  Comparison canonical = compare_coefficients(r, 1, 2);
  Comparison direct = compare_coefficients(r, i, j);
  LinearForm transported = canonical.equation.relabel(f.permutation);
  f.steps.push_back({"relabel",
                     {{"canonical pair", "(1,2)"}, {"canonical equation", equation(canonical.equation)}},
                     {{"permutation", perm_string(f.permutation)},
                      {"relabelled equation", equation(transported)},
                      {"agrees with direct", transported == direct.equation ? "yes" : "no"}},
                     "index-normalization"});
  if (!(transported == direct.equation))
    throw InconsistentPipeline("relabelled comparison differs from the direct one for " + idx(i, j));

  f.steps.push_back({"coefficient-comparison",
                     {{"lhs class", "sigma_" + std::to_string(i) + "* alpha* [L]"},
                      {"rhs class", "alpha* sigma_" + std::to_string(j) + "* [L]"},
                      {"coefficient", "E_{" + std::to_string(j) + ",1}"}},
                     {{"lhs", direct.lhs.to_string()},
                      {"rhs", direct.rhs.to_string()},
                      {"equation", equation(direct.equation)}},
                     "coefficient-comparison"});

  // Eliminate e^{j1}_{j1} with the constraint; the whole sum must drop out.
  Unknown pivot = Unknown::e(j, 1, j, 1);
  Integer ce = direct.equation.coeff(pivot), cc = constraint.coeff(pivot);
  if (sgn(cc) == 0 || !mpz_divisible_p(ce.get_mpz_t(), cc.get_mpz_t()))
    throw InconsistentPipeline("constraint cannot eliminate " + pivot.name());
  Integer lambda = -ce / cc;
  LinearForm reduced = direct.equation + lambda * constraint;
  for (int l = 1; l <= 4; ++l)
    if (sgn(reduced.coeff(Unknown::e(j, l, j, 1))) != 0)
      throw InconsistentPipeline("substitution left " + Unknown::e(j, l, j, 1).name());
  f.steps.push_back({"substitution",
                     {{"equation", equation(direct.equation)},
                      {"constraint", equation(constraint)},
                      {"multiplier", lambda.get_str()}},
                     {{"equation", equation(reduced)}},
                     "coefficient-constraint"});
  f.final_equation = reduced;

  bool even_terms = true;
  for (const auto& [u, c] : reduced.terms())
    if (mpz_odd_p(c.get_mpz_t())) even_terms = false;
  bool odd_constant = mpz_odd_p(reduced.constant().get_mpz_t()) != 0;
  bool contradiction = even_terms && odd_constant;
  std::string congruence = even_terms ? std::string(odd_constant ? "1" : "0") + " ≡ 0 (mod 2)" : "undetermined";
  f.steps.push_back({"parity",
                     {{"equation", equation(reduced)}},
                     {{"congruence", congruence}, {"verdict", contradiction ? "CONTRADICTION" : "NONE"}},
                     "parity"});
  f.verdict = contradiction ? "CONTRADICTION" : "UNDECIDED";
  return f;
}

std::optional<std::string> replay_inequivalence(const InequivalenceFragment& f) {
  std::string prefix = "inequivalence" + idx(f.i, f.j) + "/";
  InequivalenceFragment expect;
  try {
    expect = inequivalence_certificate(f.r, f.i, f.j);
  } catch (const std::exception&) {
    return prefix + "derivation";
  }
  for (size_t k = 0; k < std::max(f.steps.size(), expect.steps.size()); ++k) {
    if (k >= f.steps.size()) return prefix + expect.steps[k].kind;
    if (k >= expect.steps.size()) return prefix + f.steps[k].kind;
    if (!(f.steps[k] == expect.steps[k])) return prefix + expect.steps[k].kind;
  }
  if (f.permutation != expect.permutation) return prefix + "relabel";
  if (!(f.final_equation == expect.final_equation)) return prefix + "substitution";
  if (f.verdict != expect.verdict) return prefix + "verdict";
  return std::nullopt;
}

}  // namespace realforms
