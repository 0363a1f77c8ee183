#include "realforms/verifier/restriction.hpp"

#include <algorithm>
#include <optional>

#include "realforms/errors.hpp"

namespace realforms {

namespace {

std::string block(int k, int l) { return "E_{" + std::to_string(k) + "," + std::to_string(l) + "}"; }

bool divisible_by_3(const Integer& v) { return mpz_divisible_ui_p(v.get_mpz_t(), 3) != 0; }

// B with Phi(g*[L]) = a * 3p0 + 3B, if it exists.
std::optional<PicCElement> solve_for_B(const PicCElement& image, int a, int r) {
  PicCElement D = image - Integer(a) * encode_3p0(r);
  if (!divisible_by_3(D.m)) return std::nullopt;
  for (const auto& v : D.n)
    if (!divisible_by_3(v)) return std::nullopt;
  // 3 is odd, so the delta part of 3B is that of B.
  PicCElement B = D;
  B.m /= 3;
  for (auto& v : B.n) v /= 3;
  return B;
}

void check_elimination(const Isometry& g, const DiophantineResult& eq, const Integer& x,
                       RestrictionClass& out) {
  std::vector<Integer> vG = g.G.transpose().apply(eq.v);
  for (size_t k = 0; k < vG.size(); ++k) {
    Integer expect = eq.a * eq.v[k] + (k == 0 ? 3 : 1) * x;
    if (vG[k] != expect)
      throw InconsistentPipeline(to_string(eq.which) + " elimination: v.G_" + std::to_string(k) +
                                 " = " + vG[k].get_str() + " but the restriction predicts " +
                                 expect.get_str());
  }
  main_idea_identity(g, eq.v);
  if (sgn(x) != 0)
    throw InconsistentPipeline(to_string(eq.which) + " = " + x.get_str() +
                               " although the only integer solution is 0");
  out.eliminations.push_back(eq);
}

}  // namespace

bool RestrictionClass::two_torsion() const {
  return a == 1 && sgn(B.m) == 0 &&
         std::all_of(B.n.begin(), B.n.end(), [](const Integer& v) { return sgn(v) == 0; });
}

RestrictionClass classify_restriction(const Isometry& g) {
  if (!g.flags.is_isometry || !g.flags.preserves_K)
    throw PreconditionViolated("classify_restriction needs an isometry fixing K_X");
  int r = g.r;
  if (r < 3) throw PreconditionViolated("classify_restriction needs r >= 3");

  PicCElement imageL = phi(g.image(0));
  RestrictionClass out;
  std::optional<PicCElement> B;
  for (int a : {1, -1}) {
    B = solve_for_B(imageL, a, r);
    if (B) {
      out.a = a;
      break;
    }
  }
  if (!B) throw NotPhiCompatible("Phi(g*[L]) - a*3p0 is not divisible by 3 for a = +1 or -1");
  out.B = *B;

  for (int k = 1; k <= r; ++k)
    for (int l = 0; l <= 4; ++l) {
      PicCElement expect = Integer(out.a) * encode_point(k, l, r) + out.B;
      if (phi(g.image(basis_index(k, l))) != expect)
        throw NotPhiCompatible("Phi(g*" + block(k, l) + ") is not a p_kl + B");
    }

  check_elimination(g, diophantine_solve(Elimination::M, r, out.a), out.B.m, out);
  check_elimination(g, diophantine_solve(Elimination::N1, r, out.a), out.B.n[0], out);
  for (int s = 2; s <= r; ++s)
    check_elimination(g, diophantine_solve(Elimination::Ns, r, out.a, s), out.B.n[s - 1], out);

  // Summing the first r+1 entries of Phi(g*[E_10]) gives 3n_10 - sum e = a;
  // the same number is [C~].g*[E_10] = [C~].[E_10] = 1.
  PicXVector e10 = g.image(basis_index(1, 0));
  out.first_row_sum = degree(phi(e10));
  out.anticanonical_pairing = intersect(anticanonical_class(r), e10);
  if (out.first_row_sum != out.a)
    throw InconsistentPipeline("3n_10 - sum e^{10} = " + out.first_row_sum.get_str() + " but a = " +
                               std::to_string(out.a));
  if (out.anticanonical_pairing != 1)
    throw InconsistentPipeline("[C~].g*[E_10] = " + out.anticanonical_pairing.get_str());
  if (out.a != 1) throw InconsistentPipeline("a = -1 contradicts [C~].[E_10] = 1");
  return out;
}

Integer e_coefficient(const Isometry& g, int k, int l, int i, int j) {
  return -g.G(basis_index(i, j), basis_index(k, l));
}

std::vector<ConstraintInstance> evaluate_constraints(const Isometry& g) {
  int r = g.r;
  IntMatrix Q = intersection_form(r);
  IntMatrix inv = Q * g.G.transpose() * Q;
  // (g^{-1})*[E_ij] = m_ij[L] - sum_kl e^{kl}_ij [E_kl]
  auto e = [&](int k, int l, int i, int j) { return Integer(-inv(basis_index(k, l), basis_index(i, j))); };
  std::vector<ConstraintInstance> out;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= 4; ++j) {
      ConstraintInstance c;
      c.i = i;
      c.j = j;
      c.lhs = 2 * e(i, 0, i, j) - 1;
      c.rhs = 0;
      for (int l = 1; l <= 4; ++l) c.rhs += e(i, l, i, j);
      out.push_back(c);
    }
  return out;
}

std::vector<ConstraintInstance> coefficient_constraints(const Isometry& g) {
  auto out = evaluate_constraints(g);
  for (const auto& c : out)
    if (!c.holds())
      throw ConstraintViolated("2e^{" + std::to_string(c.i) + ",0}_{" + std::to_string(c.i) + "," +
                               std::to_string(c.j) + "} - 1 = " + c.lhs.get_str() + " but the sum is " +
                               c.rhs.get_str());
  return out;
}

}  // namespace realforms
