// One line per acceptance criterion; exits nonzero if any line is FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "realforms/cli/app.hpp"
#include "realforms/cli/certificate.hpp"
#include "realforms/elliptic/group.hpp"
#include "realforms/elliptic/halving.hpp"
#include "realforms/elliptic/independence.hpp"
#include "realforms/errors.hpp"
#include "realforms/verifier/conjugacy.hpp"
#include "realforms/verifier/diophantine.hpp"
#include "realforms/verifier/inequivalence.hpp"
#include "support/fixtures.hpp"

using namespace realforms;
using namespace realforms::testing;

namespace {

struct Failure {
  std::string why;
};

void check(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

int failures = 0;

void criterion(int n, const char* what, double budget_s, const std::function<std::string()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string note, why;
  bool ok = true;
  try {
    note = body();
  } catch (const Failure& f) {
    ok = false;
    why = f.why;
  } catch (const std::exception& e) {
    ok = false;
    why = std::string("exception: ") + e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (ok && budget_s > 0 && s > budget_s) {
    ok = false;
    why = "over the " + std::to_string(budget_s) + " s budget";
  }
  failures += !ok;
  std::printf("%s criterion %2d  %-34s %8.3f s  %s\n", ok ? "PASS" : "FAIL", n, what, s,
              ok ? note.c_str() : why.c_str());
  std::fflush(stdout);
}

std::vector<Integer> unit(int r, size_t k) {
  std::vector<Integer> v(pic_dimension(r), 0);
  v[k] = 1;
  return v;
}

// x (b + c x) = 0 from the grouped isometry identity, evaluated without
// factoring: (a v0 + 3x)^2 - sum_k (a v_k + x)^2 = v0^2 - sum_k v_k^2.
long brute_force_roots(const DiophantineResult& d, long window) {
  using i128 = __int128;
  i128 v0 = d.v[0].get_si(), sum = 0, sq = 0, a = d.a;
  long count = static_cast<long>(d.v.size()) - 1;
  for (size_t k = 1; k < d.v.size(); ++k) {
    sum += d.v[k].get_si();
    sq += static_cast<i128>(d.v[k].get_si()) * d.v[k].get_si();
  }
  long roots = 0;
  for (long x = -window; x <= window; ++x) {
    i128 g0 = a * v0 + 3 * x;
    i128 rhs = g0 * g0 - (sq * a * a + 2 * a * x * sum + static_cast<i128>(count) * x * x);
    if (rhs == v0 * v0 - sq) {
      check(x == 0, "nonzero solution x = " + std::to_string(x));
      ++roots;
    }
  }
  return roots;
}

}  // namespace

int main() {
  criterion(1, "sigma-matrix suite r=3..6", 1.0, [] {
    long checked = 0;
    for (int r = 3; r <= 6; ++r)
      for (int i = 1; i <= r; ++i) {
        Isometry s = sigma_star(i, r);
        check((s * s).G == IntMatrix::identity(pic_dimension(r)), "sigma^2 != id");
        IsometryFlags f = isometry_checks(s.G);
        check(f.is_isometry && f.preserves_K, "isometry_checks failed");
        for (size_t k = 0; k < pic_dimension(r); ++k) {
          PicXVector e = PicXVector::from_standard(r, unit(r, k));
          check(phi(s.apply(e)) == phi(e), "Phi not equivariant");
        }
        ++checked;
      }
    return std::to_string(checked) + " involutions";
  });

  criterion(2, "Diophantine suite r=3..50", 10.0, [] {
    long eqs = 0;
    for (int r = 3; r <= 50; ++r)
      for (int a : {1, -1}) {
        std::vector<DiophantineResult> rs{diophantine_solve(Elimination::M, r, a),
                                          diophantine_solve(Elimination::N1, r, a)};
        for (int s = 2; s <= r; ++s) {
          auto d = diophantine_solve(Elimination::Ns, r, a, s);
          check(d.only_zero(), "ns not {0}");
          if (s == 2 || s == r) rs.push_back(d);
        }
        for (const auto& d : rs) {
          check(d.only_zero(), to_string(d.which) + " not {0}");
          check(brute_force_roots(d, 1000000) == 1, "brute force disagrees");
          ++eqs;
        }
      }
    return std::to_string(eqs) + " equations brute-forced over |x| <= 1e6";
  });

  criterion(3, "parity obstruction r=3..6", 5.0, [] {
    long pairs = 0;
    for (int r = 3; r <= 6; ++r)
      for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) {
          if (i == j) continue;
          auto f = inequivalence_certificate(r, i, j);
          check(f.verdict == "CONTRADICTION", "no contradiction");
          bool congruence = false;
          for (const auto& s : f.steps)
            for (const auto& [k, v] : s.outputs) congruence = congruence || (k == "congruence" && v == "1 ≡ 0 (mod 2)");
          check(congruence, "final congruence is not 1 = 0 mod 2");
          LinearForm base = LinearForm::var(Unknown::m(2, 1), 2) + LinearForm::var(Unknown::e(2, 0, 2, 1), -4) +
                            LinearForm(1);
          check(f.final_equation == base.relabel(f.permutation), "final equation is not 2m - 4e + 1");
          check(!replay_inequivalence(f).has_value(), "replay failed");
          ++pairs;
        }
    return std::to_string(pairs) + " ordered pairs";
  });

  criterion(4, "conjugacy oracle r=3 (1,2) depth 6", 60.0, [] {
    auto s = bounded_conjugacy_search(3, 1, 2, 6);
    check(!s.found, "conjugating word found");
    return "NoneFound, " + std::to_string(s.words_checked) + " words";
  });

  criterion(5, "elliptic core", 0, [] {
    std::mt19937_64 rng(2024);
    long triples = 0;
    for (const auto& c : rank_one_curves()) {
      auto pts = rational_points(c, 60);
      std::uniform_int_distribution<size_t> pick(0, pts.size() - 1);
      for (int k = 0; k < 300; ++k, ++triples) {
        const auto &p = pts[pick(rng)], &q = pts[pick(rng)], &r = pts[pick(rng)];
        check(points_equal(add(c, add(c, p, q), r), add(c, p, add(c, q, r))), "not associative");
        check(points_equal(add(c, p, q), add(c, q, p)), "not commutative");
        check(add(c, p, negate(p)).is_infinity(), "P - P != O");
      }
    }
    long halves = 0;
    for (const auto& c : two_component_curves())
      for (int k = 1; k <= 6; ++k) {
        CurvePoint s = identity_point(c, Rational(k, 5), k % 2 ? 1 : -1);
        auto h = halve(c, s);
        check(h.size() == 4, "expected 4 halves");
        for (const auto& q : h) {
          CurvePoint d = double_point(c, q);
          check((d.x() - s.x()).enclose(128).contains_zero() && (d.y() - s.y()).enclose(128).contains_zero(),
                "[2]q != S at 128 bits");
          ++halves;
        }
      }
    check(triples >= 1000 && halves >= 100, "sample too small");
    return std::to_string(triples) + " triples on 4 curves, " + std::to_string(halves) + " halvings";
  });

  criterion(6, "associated points realize C[2]", 0, [] {
    long base = 0;
    auto curves = two_component_curves();
    for (const auto& c : curves) {
      auto t = two_torsion(c);
      for (int k = 1; k <= 5; ++k, ++base) {
        CurvePoint p = identity_point(c, Rational(2 * k - 1, 4), k % 2 ? 1 : -1);
        auto q = associated_points(c, p);
        check(q.size() == 4, "expected 4 real associated points");
        for (const auto& x : q) check(tangency_residual(c, x, p, 128).contains_zero(), "tangency");
        std::array<bool, 4> hit{};
        for (size_t a = 0; a < 3; ++a)
          for (size_t m = 1; m < 4; ++m)
            if (approx_equal(subtract(c, q[a], q[3]), t[m], 100)) hit[m] = true;
        check(hit[1] && hit[2] && hit[3], "differences miss a 2-torsion point");
        check(approx_equal(subtract(c, q[0], q[1]), subtract(c, q[2], q[3]), 100) &&
                  approx_equal(subtract(c, q[0], q[2]), subtract(c, q[1], q[3]), 100) &&
                  approx_equal(subtract(c, q[0], q[3]), subtract(c, q[1], q[2]), 100),
              "complementary pairs differ");
      }
    }
    return std::to_string(base) + " base points on " + std::to_string(curves.size()) + " curves at 2^-100";
  });

  criterion(7, "component equivalence on 100 cubics", 0, [] {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 5);
    long two = 0, curves = 0;
    while (curves < 100) {
      Rational c2(num(rng), den(rng)), c1(num(rng), den(rng)), c0(num(rng), den(rng));
      c2.canonicalize();
      c1.canonicalize();
      c0.canonicalize();
      std::optional<CubicCurve> c;
      try {
        c.emplace(c2, c1, c0);
      } catch (const ZeroDiscriminant&) {
        continue;
      }
      ++curves;
      bool comps = c->component_count() == 2;
      bool roots = isolate_real_roots(c->F()).size() == 3;
      bool torsion = true;
      try {
        torsion = two_torsion(*c).size() == 4;
      } catch (const NotAllReal&) {
        torsion = false;
      }
      check(comps == roots && roots == torsion, "equivalence broken");
      if (!comps) continue;
      ++two;
      check(halve(*c, negate(oval_point(*c, Rational(1, 2), 1))).empty(), "oval point has real halves");
      check(associated_points(*c, identity_point(*c, 1, 1)).size() == 4, "identity point lacks 4 associates");
    }
    return std::to_string(curves) + " cubics, " + std::to_string(two) + " with two components";
  });

  criterion(8, "K_X^2 = 9 - 5r for r=3..10", 0, [] {
    for (int r = 3; r <= 10; ++r) {
      PicXVector K = canonical_class(r);
      check(intersect(K, K) == 9 - 5 * r, "K^2 mismatch at r = " + std::to_string(r));
    }
    return std::string("exact");
  });

  criterion(9, "end to end construct --r 3 --seed 7", 30.0, [] {
    std::ostringstream a, b, e;
    check(run_cli({"construct", "--r", "3", "--seed", "7", "--quiet"}, a, e) == 0, "construct failed: " + e.str());
    check(run_cli({"construct", "--r", "3", "--seed", "7", "--quiet"}, b, e) == 0, "rerun failed");
    check(a.str() == b.str(), "rerun not byte-identical");
    VerifyReport rep = verify_certificate(Json::parse(a.str()));
    check(rep.pass, "verify failed at " + rep.failing_step);
    return "verify PASS, " + std::to_string(rep.checked.size()) + " steps, byte-identical rerun";
  });

  criterion(10, "negative controls", 0, [] {
    auto c = CubicCurve::from_roots(-1, 0, 2);
    CurvePoint p = point_from_x(c, 3, 1);
    check(std::holds_alternative<RelationFound>(independence_witness(c, {p, double_point(c, p)}, 50)),
          "{p, 2p} accepted");
    check(std::holds_alternative<RelationFound>(independence_witness(c, {p, add(c, p, two_torsion(c)[2])}, 50)),
          "{p, p + T} accepted");
    check(std::holds_alternative<RelationFound>(independence_witness(c, {p, two_torsion(c)[1]}, 50)),
          "2-torsion point accepted");

    std::ostringstream o, e;
    check(run_cli({"construct", "--r", "3", "--seed", "7", "--quiet"}, o, e) == 0, "construct failed");
    Json cert = Json::parse(o.str());
    Json bad = cert;
    auto& entries = bad["sigma"][0]["matrix"]["entries"];
    entries[5] = entries[5].get<long>() + 1;
    VerifyReport r1 = verify_certificate(bad);
    check(!r1.pass && r1.failing_step.rfind("isometry_checks", 0) == 0, "flipped entry failed at " + r1.failing_step);
    bad = cert;
    for (auto& s : bad["inequivalence"][0]["steps"])
      if (s["step_kind"] == "parity") s["outputs"]["congruence"] = "0 ≡ 0 (mod 2)";
    VerifyReport r2 = verify_certificate(bad);
    check(!r2.pass && r2.failing_step == "inequivalence(1,2)/parity", "forged parity failed at " + r2.failing_step);
    return "3 dependent sets rejected, tampering caught at isometry_checks and parity";
  });

  return failures == 0 ? 0 : 1;
}
