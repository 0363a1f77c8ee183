#include "realforms/cli/certificate.hpp"

#include <functional>

#include "realforms/errors.hpp"
#include "realforms/verifier/conjugacy.hpp"
#include "realforms/verifier/restriction.hpp"

namespace realforms {

namespace {

const char* kScope =
    "The inequivalence derivations keep the coefficients of alpha symbolic and so cover every "
    "automorphism alpha of X; the bounded conjugacy search only tests words in the sigma_i* up to "
    "the recorded depth and is an independent sanity check, not part of the proof.";

std::string pair_name(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::string basis_name(size_t k) {
  if (k == 0) return "L";
  return "E_{" + std::to_string((k - 1) / 5 + 1) + "," + std::to_string((k - 1) % 5) + "}";
}

Json int_array(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

bool phi_equivariant(const Isometry& s) {
  for (size_t k = 0; k < pic_dimension(s.r); ++k) {
    PicXVector e = PicXVector::from_standard(s.r, IntMatrix::identity(pic_dimension(s.r)).column(k));
    if (!(phi(s.apply(e)) == phi(e))) return false;
  }
  return true;
}

Json curve_json(const CubicCurve& c) {
  Json out;
  out["model"] = "y^2 = x^3 + c2 x^2 + c1 x + c0";
  out["c2"] = to_string(c.c2());
  out["c1"] = to_string(c.c1());
  out["c0"] = to_string(c.c0());
  out["discriminant"] = to_string(c.discriminant());
  out["j_invariant"] = to_string(c.j_invariant());
  out["components"] = c.component_count();
  out["aut_gp_is_Z2"] = c.aut_gp_is_Z2();
  return out;
}

struct StepFailure {
  std::string step;
  std::string detail;
};

void require(bool ok, const std::string& step, const std::string& detail) {
  if (!ok) throw StepFailure{step, detail};
}

}  // namespace

SearchOptions RunConfig::search_options() const {
  SearchOptions o;
  o.relation_bound = relation_bound;
  o.torsion_max_order = torsion_max_order;
  o.policy = policy();
  return o;
}

std::string verdict_text(int r) { return "at least " + std::to_string(r) + " real forms"; }

Json build_certificate(const SurfaceConfig& cfg, const RunConfig& run) {
  int r = cfg.r;
  Json c;
  c["schema"] = kCertificateSchema;
  Json jr;
  jr["r"] = r;
  jr["seed"] = run.seed;
  jr["precision_bits"] = run.precision_bits;
  jr["precision_ceiling"] = run.precision_ceiling;
  jr["relation_bound"] = run.relation_bound;
  jr["torsion_max_order"] = run.torsion_max_order;
  jr["conjugacy_depth"] = run.conjugacy_depth;
  c["run"] = jr;
  c["curve"] = curve_json(cfg.curve);

  Json deltas = Json::array();
  for (const auto& d : cfg.deltas) deltas.push_back(point_to_json(d));
  c["two_torsion"] = deltas;

  Json pts = Json::array();
  for (int i = 1; i <= r; ++i)
    for (int j = 0; j <= 4; ++j) {
      Json p;
      p["index"] = {i, j};
      p["point"] = point_to_json(cfg.point(i, j));
      p["real"] = static_cast<bool>(cfg.real.at(basis_index(i, j) - 1));
      pts.push_back(p);
    }
  c["points"] = pts;
  c["independence"] = witness_to_json(cfg.witness);

  Json lat;
  lat["coordinates"] = "standard: column k of a matrix is the image of basis class k";
  Json basis = Json::array();
  for (size_t k = 0; k < pic_dimension(r); ++k) basis.push_back(basis_name(k));
  lat["basis"] = basis;
  PicXVector K = canonical_class(r);
  lat["K_X"] = int_array(K.standard());
  lat["K_squared"] = intersect(K, K).get_si();
  lat["phi_K"] = int_array(phi(K).to_array());
  c["lattice"] = lat;

  Json sig = Json::array(), coc = Json::array(), res = Json::array();
  for (int i = 1; i <= r; ++i) {
    Isometry s = sigma_star(i, r);
    Json js;
    js["i"] = i;
    js["matrix"] = matrix_to_json(s.G, r);
    js["is_isometry"] = s.flags.is_isometry;
    js["preserves_K"] = s.flags.preserves_K;
    js["phi_equivariant"] = phi_equivariant(s);
    sig.push_back(js);

    Json jc;
    jc["i"] = i;
    jc["sigma_squared_identity"] = cocycle_check(i, r, cfg.all_real());
    jc["rho_star"] = "id (all blown-up points real)";
    coc.push_back(jc);

    RestrictionClass rc = classify_restriction(s);
    auto cons = coefficient_constraints(s);
    Json jx;
    jx["i"] = i;
    jx["a"] = rc.a;
    jx["B"] = int_array(rc.B.to_array());
    jx["anticanonical_pairing"] = rc.anticanonical_pairing.get_str();
    jx["constraints_checked"] = cons.size();
    res.push_back(jx);
  }
  c["sigma"] = sig;
  c["cocycles"] = coc;
  c["restriction"] = res;

  Json ineq = Json::array();
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      if (i != j) ineq.push_back(fragment_to_json(inequivalence_certificate(r, i, j)));
  c["inequivalence"] = ineq;

  Json conj;
  conj["depth"] = run.conjugacy_depth;
  Json pairs = Json::array();
  if (run.conjugacy_depth > 0)
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= r; ++j) {
        if (i == j) continue;
        auto s = bounded_conjugacy_search(r, i, j, run.conjugacy_depth);
        Json p;
        p["i"] = i;
        p["j"] = j;
        p["result"] = s.found ? "CounterExample" : "NoneFound";
        p["words_checked"] = s.words_checked;
        pairs.push_back(p);
      }
  conj["pairs"] = pairs;
  c["conjugacy_search"] = conj;
  c["scope"] = kScope;
  c["verdict"] = verdict_text(r);
  return c;
}

SurfaceConfig surface_from_certificate(const Json& cert) {
  const Json& jc = field(cert, "curve");
  auto rat = [&](const char* k) {
    try {
      return parse_rational(field(jc, k).get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(std::string("curve.") + k + ": " + e.what());
    }
  };
  CubicCurve curve(rat("c2"), rat("c1"), rat("c0"));
  int r = field(field(cert, "run"), "r").get<int>();
  if (r < 1) throw ParseError("r must be positive");
  const Json& pts = field(cert, "points");
  if (!pts.is_array() || pts.size() != 5 * static_cast<size_t>(r)) throw ParseError("expected 5r points");
  SurfaceConfig cfg{r, curve, field(field(cert, "run"), "seed").get<std::uint64_t>(), {}, {}, {}, {}, {}, 0};
  cfg.precision_bits = field(field(cert, "run"), "precision_bits").get<long>();
  cfg.associated.resize(static_cast<size_t>(r));
  for (const auto& p : pts) {
    auto idx = field(p, "index").get<std::vector<int>>();
    if (idx.size() != 2 || idx[0] < 1 || idx[0] > r || idx[1] < 0 || idx[1] > 4)
      throw ParseError("bad point index");
    if (static_cast<size_t>(basis_index(idx[0], idx[1]) - 1) != cfg.real.size())
      throw ParseError("points must be listed in basis order");
    CurvePoint q = point_from_json(field(p, "point"));
    if (idx[1] == 0)
      cfg.base.push_back(q);
    else
      cfg.associated[static_cast<size_t>(idx[0] - 1)][static_cast<size_t>(idx[1] - 1)] = q;
    cfg.real.push_back(field(p, "real").get<bool>());
  }
  const Json& dj = field(cert, "two_torsion");
  if (!dj.is_array() || dj.size() != 3) throw ParseError("expected three 2-torsion points");
  for (size_t k = 0; k < 3; ++k) cfg.deltas[k] = point_from_json(dj[k]);
  cfg.witness = witness_from_json(field(cert, "independence"), cfg.base);
  return cfg;
}

VerifyReport verify_certificate(const Json& cert) {
  VerifyReport rep;
  std::string current = "parse";
  auto step = [&](const std::string& name, const std::function<void()>& body) {
    current = name;
    body();
    rep.checked.push_back(name);
  };
  try {
    step("schema", [&] {
      require(field(cert, "schema") == kCertificateSchema, "schema", "unknown schema");
    });
    const Json& run = field(cert, "run");
    int r = field(run, "r").get<int>();
    PrecisionPolicy policy{field(run, "precision_bits").get<long>(), field(run, "precision_ceiling").get<long>()};
    long bound = field(run, "relation_bound").get<long>();
    long max_order = field(run, "torsion_max_order").get<long>();
    int depth = field(run, "conjugacy_depth").get<int>();
    require(r >= 3, "run", "r must be at least 3");

    SurfaceConfig cfg = surface_from_certificate(cert);
    const CubicCurve& curve = cfg.curve;

    step("curve", [&] {
      require(curve_json(curve) == field(cert, "curve"), "curve", "recorded invariants differ from recomputed");
      require(curve_qualifies(curve), "curve", "curve needs two components and j not in {0,1728}");
    });

    step("points", [&] {
      auto tt = two_torsion(curve);
      for (size_t k = 0; k < 3; ++k)
        require(points_equal(cfg.deltas[k], tt[k + 1], policy), "points", "2-torsion points out of order");
      for (int i = 1; i <= r; ++i)
        for (int j = 0; j <= 4; ++j)
          require(on_curve(curve, cfg.point(i, j), policy), "points",
                  "p" + pair_name(i, j) + " is not on the curve");
      for (int i = 1; i <= r; ++i)
        require(component_of(curve, cfg.point(i, 0), policy) == Component::Identity, "points",
                "p" + pair_name(i, 0) + " is not on the identity component");
      require(cfg.all_real(), "points", "configuration is flagged non-real");
    });

    for (int i = 1; i <= r; ++i)
      step("torsion(p" + pair_name(i, 0) + ")", [&] {
        require(cfg.witness.torsion.size() == static_cast<size_t>(r), current, "missing torsion evidence");
        TorsionEvidence t = torsion_evidence(curve, cfg.point(i, 0), max_order, policy);
        const TorsionEvidence& rec = cfg.witness.torsion[static_cast<size_t>(i - 1)];
        require(!t.order && !rec.order && t.method == rec.method && t.precision_bits == rec.precision_bits &&
                    t.proven == rec.proven,
                current, "torsion evidence does not reproduce");
      });

    step("independence", [&] {
      require(cfg.witness.bound == bound, "independence", "witness bound differs from the run bound");
      require(replay_independence(curve, cfg.witness), "independence", "witness does not replay");
    });

    step("surface", [&] {
      SurfaceConfig again = build_surface(curve, cfg.base, cfg.witness, policy);
      for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= 4; ++j)
          require(points_equal(again.point(i, j), cfg.point(i, j), policy), "surface",
                  "p" + pair_name(i, j) + " is not the labelled associated point");
    });

    const Json& lat = field(cert, "lattice");
    step("lattice", [&] {
      PicXVector K = canonical_class(r);
      require(field(lat, "K_X") == int_array(K.standard()), "lattice", "K_X differs");
      require(field(lat, "K_squared").get<long>() == 9 - 5 * r && intersect(K, K) == 9 - 5 * r, "lattice",
              "K_X^2 is not 9 - 5r");
      require(field(lat, "phi_K") == int_array(phi(K).to_array()), "lattice", "Phi(K_X) differs");
    });

    const Json& sig = field(cert, "sigma");
    require(sig.is_array() && sig.size() == static_cast<size_t>(r), "sigma", "expected r matrices");
    for (int i = 1; i <= r; ++i) {
      const Json& js = sig[static_cast<size_t>(i - 1)];
      IntMatrix G = matrix_from_json(field(js, "matrix"));
      std::string tag = "(sigma_" + std::to_string(i) + ")";
      step("isometry_checks" + tag, [&] {
        require(field(js, "i").get<int>() == i, current, "matrices out of order");
        IsometryFlags f = isometry_checks(G);
        require(f.is_isometry, current, "G Q G^T != Q");
        require(f.preserves_K, current, "G K_X != K_X");
        require(field(js, "is_isometry").get<bool>() && field(js, "preserves_K").get<bool>(), current,
                "recorded flags are not both true");
      });
      step("sigma_matrix" + tag, [&] {
        require(G == sigma_star(i, r).G, current, "matrix is not the lift of the cubic involution");
      });
      Isometry s = Isometry::from_matrix(G);
      step("phi_equivariance" + tag, [&] { require(phi_equivariant(s), current, "Phi(sigma* v) != Phi(v)"); });
      step("cocycle" + tag, [&] {
        require(cocycle_check(i, r, cfg.all_real()), current, "sigma* is not an involution");
        require(field(field(cert, "cocycles")[static_cast<size_t>(i - 1)], "sigma_squared_identity").get<bool>(),
                current, "recorded cocycle flag is false");
      });
      step("restriction" + tag, [&] {
        RestrictionClass rc = classify_restriction(s);
        const Json& jx = field(cert, "restriction")[static_cast<size_t>(i - 1)];
        require(rc.a == 1 && rc.two_torsion(), current, "restriction is not a 2-torsion translation");
        require(field(jx, "a").get<int>() == rc.a && field(jx, "B") == int_array(rc.B.to_array()), current,
                "recorded restriction differs");
      });
      step("coefficient_constraints" + tag, [&] { coefficient_constraints(s); });
    }

    const Json& ineq = field(cert, "inequivalence");
    require(ineq.is_array() && ineq.size() == static_cast<size_t>(r * (r - 1)), "inequivalence",
            "expected one derivation per ordered pair");
    size_t k = 0;
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= r; ++j) {
        if (i == j) continue;
        InequivalenceFragment f = fragment_from_json(ineq[k++]);
        std::string name = "inequivalence" + pair_name(i, j);
        current = name;
        require(f.i == i && f.j == j && f.r == r, name, "derivations out of order");
        if (auto bad = replay_inequivalence(f)) throw StepFailure{*bad, "step does not replay"};
        require(f.verdict == "CONTRADICTION", name + "/parity", "no contradiction recorded");
        rep.checked.push_back(name);
      }

    step("conjugacy_search", [&] {
      const Json& cj = field(cert, "conjugacy_search");
      require(field(cj, "depth").get<int>() == depth, current, "depth differs from the run");
      const Json& pairs = field(cj, "pairs");
      size_t n = 0;
      if (depth > 0)
        for (int i = 1; i <= r; ++i)
          for (int j = 1; j <= r; ++j) {
            if (i == j) continue;
            require(n < pairs.size(), current, "missing pair");
            const Json& p = pairs[n++];
            auto s = bounded_conjugacy_search(r, i, j, depth);
            require(!s.found && field(p, "result") == "NoneFound" &&
                        field(p, "words_checked").get<long>() == s.words_checked,
                    current + pair_name(i, j), "search result does not reproduce");
          }
      require(n == pairs.size(), current, "unexpected extra pairs");
    });

    step("verdict", [&] {
      require(field(cert, "verdict") == verdict_text(r), "verdict", "verdict text differs");
    });
    rep.pass = true;
  } catch (const StepFailure& f) {
    rep.failing_step = f.step;
    rep.detail = f.detail;
  } catch (const Json::exception& e) {
    rep.failing_step = current;
    rep.detail = std::string("malformed certificate: ") + e.what();
  } catch (const std::exception& e) {
    rep.failing_step = current;
    rep.detail = e.what();
  }
  return rep;
}

}  // namespace realforms
