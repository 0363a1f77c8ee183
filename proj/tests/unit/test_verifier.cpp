#include <gtest/gtest.h>

#include <functional>

#include "realforms/errors.hpp"
#include "realforms/verifier/conjugacy.hpp"
#include "realforms/verifier/diophantine.hpp"
#include "realforms/verifier/inequivalence.hpp"
#include "realforms/verifier/restriction.hpp"

using namespace realforms;

namespace {

const DerivationStep* find_step(const InequivalenceFragment& f, const std::string& kind) {
  for (const auto& s : f.steps)
    if (s.kind == kind) return &s;
  return nullptr;
}

std::string output(const DerivationStep& s, const std::string& key) {
  for (const auto& [k, v] : s.outputs)
    if (k == key) return v;
  return {};
}

// Block permutation matrix moving E_{k,l} to E_{perm[k],l}.
IntMatrix block_permutation(int r, const std::vector<int>& perm) {
  IntMatrix P(pic_dimension(r), pic_dimension(r));
  P(0, 0) = 1;
  for (int k = 1; k <= r; ++k)
    for (int l = 0; l <= 4; ++l) P(basis_index(perm[static_cast<size_t>(k)], l), basis_index(k, l)) = 1;
  return P;
}

}  // namespace

TEST(Diophantine, Examples) {
  auto m = diophantine_solve(Elimination::M, 3, 1);
  EXPECT_TRUE(m.only_zero());
  EXPECT_EQ(m.b, 0);
  EXPECT_EQ(m.c, -6);
  auto ns = diophantine_solve(Elimination::Ns, 3, -1);
  EXPECT_TRUE(ns.only_zero());
  EXPECT_EQ(ns.nonzero_root, Rational(2, 3));
}

TEST(Diophantine, ClosedFormsAcrossRanks) {
  for (int r = 3; r <= 50; ++r)
    for (int a : {1, -1}) {
      auto m = diophantine_solve(Elimination::M, r, a);
      auto n1 = diophantine_solve(Elimination::N1, r, a);
      EXPECT_EQ(m.c, 9 - 5 * r);
      EXPECT_EQ(m.b, 2 * (3 - r) * a);
      EXPECT_EQ(n1.b, -4 * (r - 2) * a);
      for (int s = 2; s <= r; ++s) EXPECT_TRUE(diophantine_solve(Elimination::Ns, r, a, s).only_zero());
    }
}

TEST(Diophantine, Preconditions) {
  EXPECT_THROW(diophantine_solve(Elimination::M, 2, 1), PreconditionViolated);
  EXPECT_THROW(diophantine_solve(Elimination::M, 3, 2), PreconditionViolated);
  EXPECT_THROW(diophantine_solve(Elimination::Ns, 3, 1, 4), PreconditionViolated);
  EXPECT_EQ(parse_elimination("n1"), Elimination::N1);
  EXPECT_EQ(to_string(Elimination::Ns), "ns");
}

TEST(Restriction, Examples) {
  int r = 3;
  for (const Isometry& g : {sigma_star(1, r), sigma_star(3, r), identity_isometry(r), sigma_star(1, r) * sigma_star(2, r)}) {
    RestrictionClass rc = classify_restriction(g);
    EXPECT_EQ(rc.a, 1);
    EXPECT_EQ(rc.B, PicCElement::zero(r));
    EXPECT_TRUE(rc.two_torsion());
    EXPECT_EQ(rc.anticanonical_pairing, 1);
  }
}

TEST(Restriction, NonIsometryRejected) {
  std::vector<Integer> d(16, 1);
  d[0] = 2;
  EXPECT_THROW(classify_restriction(Isometry::from_matrix(IntMatrix::diagonal(d))), PreconditionViolated);
}

// Swapping two untouched blocks commutes with sigma_i*.
TEST(Restriction, InvariantUnderBlockRelabelling) {
  int r = 4;
  std::vector<int> perm{0, 1, 3, 2, 4};
  IntMatrix P = block_permutation(r, perm);
  Isometry s = sigma_star(1, r);
  Isometry conj = Isometry::from_matrix(P * s.G * P);
  EXPECT_EQ(conj.G, s.G);
  RestrictionClass a = classify_restriction(s), b = classify_restriction(conj);
  EXPECT_EQ(a.a, b.a);
  EXPECT_EQ(a.B, b.B);
}

TEST(Constraints, Examples) {
  int r = 3;
  Isometry s = sigma_star(2, r);
  auto cs = coefficient_constraints(s);
  EXPECT_EQ(cs.size(), 12u);
  for (const auto& c : cs)
    if (c.i == 2 && c.j == 1) {
      EXPECT_EQ(c.lhs, 1);
      EXPECT_EQ(c.rhs, 1);
    }
  for (const auto& c : coefficient_constraints(identity_isometry(r)))
    if (c.j == 1) {
      EXPECT_EQ(c.lhs, -1);
      EXPECT_EQ(e_coefficient(identity_isometry(r), c.i, 1, c.i, 1), -1);
    }
  IntMatrix G = s.G;
  G(basis_index(2, 1), basis_index(2, 0)) += 1;
  EXPECT_THROW(coefficient_constraints(Isometry::from_matrix(G)), ConstraintViolated);
}

TEST(Constraints, WordsUpToLengthFour) {
  int r = 3;
  std::function<void(std::vector<int>&)> walk = [&](std::vector<int>& w) {
    Isometry g = Isometry::from_matrix(word_matrix(r, w));
    RestrictionClass rc = classify_restriction(g);
    if (rc.two_torsion()) EXPECT_NO_THROW(coefficient_constraints(g));
    if (w.size() == 4) return;
    for (int k = 1; k <= r; ++k) {
      if (!w.empty() && w.back() == k) continue;
      w.push_back(k);
      walk(w);
      w.pop_back();
    }
  };
  std::vector<int> w;
  walk(w);
}

TEST(Inequivalence, OneTwo) {
  auto f = inequivalence_certificate(3, 1, 2);
  EXPECT_EQ(f.verdict, "CONTRADICTION");
  LinearForm expected = LinearForm::var(Unknown::m(2, 1), 2) + LinearForm::var(Unknown::e(2, 0, 2, 1), -4) + LinearForm(1);
  EXPECT_EQ(f.final_equation, expected);
  const DerivationStep* parity = find_step(f, "parity");
  ASSERT_NE(parity, nullptr);
  EXPECT_EQ(output(*parity, "congruence"), "1 ≡ 0 (mod 2)");
  EXPECT_FALSE(replay_inequivalence(f).has_value());
}

TEST(Inequivalence, PositiveControl) {
  auto f = inequivalence_certificate(3, 1, 1);
  EXPECT_EQ(f.verdict, "EQUIVALENT");
  EXPECT_EQ(find_step(f, "parity"), nullptr);
}

TEST(Inequivalence, RelabelledPair) {
  auto f = inequivalence_certificate(5, 4, 2);
  EXPECT_EQ(f.verdict, "CONTRADICTION");
  auto base = inequivalence_certificate(5, 1, 2);
  EXPECT_EQ(f.final_equation, base.final_equation.relabel(f.permutation));
  EXPECT_FALSE(replay_inequivalence(f).has_value());
}

TEST(Inequivalence, AllPairsReplay) {
  for (int r = 3; r <= 10; ++r)
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= r; ++j) {
        if (i == j) continue;
        auto f = inequivalence_certificate(r, i, j);
        ASSERT_EQ(f.verdict, "CONTRADICTION") << r << " " << i << " " << j;
        EXPECT_EQ(f.final_equation.constant(), 1);
        for (const auto& [u, c] : f.final_equation.terms()) EXPECT_EQ(c % 2, 0);
        EXPECT_FALSE(replay_inequivalence(f).has_value());
      }
}

TEST(Inequivalence, TamperedStepDetected) {
  auto f = inequivalence_certificate(3, 2, 3);
  for (auto& s : f.steps)
    if (s.kind == "parity")
      for (auto& [k, v] : s.outputs)
        if (k == "congruence") v = "0 ≡ 0 (mod 2)";
  EXPECT_EQ(replay_inequivalence(f), "inequivalence(2,3)/parity");
}

TEST(Cocycle, Examples) {
  EXPECT_TRUE(cocycle_check(1, 3));
  EXPECT_TRUE(cocycle_check(6, 6));
  EXPECT_THROW(cocycle_check(1, 3, false), NonRealConfiguration);
}

TEST(ConjugacySearch, Examples) {
  EXPECT_FALSE(bounded_conjugacy_search(3, 1, 2, 4).found);
  auto self = bounded_conjugacy_search(3, 1, 1, 1);
  EXPECT_TRUE(self.found);
  EXPECT_TRUE(self.word.empty());
  EXPECT_FALSE(bounded_conjugacy_search(4, 2, 3, 5).found);
}
