#include "realforms/cli/serialize.hpp"

#include <cstdio>

#include "realforms/errors.hpp"

namespace realforms {

namespace {

Rational rational_field(const Json& j, const char* key) {
  try {
    return parse_rational(field(j, key).get<std::string>());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

template <class T>
T get_as(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

Integer integer_from(const Json& j) {
  try {
    return parse_integer(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(std::string("integer entry: ") + e.what());
  }
}

Json fields_to_json(const Fields& fs) {
  Json out = Json::object();
  for (const auto& [k, v] : fs) out[k] = v;
  return out;
}

Fields fields_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("step fields must be an object");
  Fields out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_string()) throw ParseError("step field '" + it.key() + "' must be a string");
    out.emplace_back(it.key(), it.value().get<std::string>());
  }
  return out;
}

}  // namespace

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

Json polynomial_to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("polynomial must be a nonempty array");
  std::vector<Rational> cs;
  for (const auto& c : j) {
    if (!c.is_string()) throw ParseError("polynomial coefficients must be strings");
    try {
      cs.push_back(parse_rational(c.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return Polynomial(std::move(cs));
}

Json coordinate_to_json(const Real& x) {
  Json out;
  if (auto q = x.as_rational()) {
    out["rational"] = to_string(*q);
    return out;
  }
  auto a = x.as_algebraic();
  if (!a) throw PreconditionViolated("only exact leaf coordinates can be serialized");
  Polynomial p = a->polynomial();
  auto roots = AlgebraicNumber::real_roots(p);
  size_t k = 0;
  while (k < roots.size() && !(roots[k] == *a)) ++k;
  if (k == roots.size()) throw InconsistentPipeline("coordinate is not a root of its own polynomial");
  auto [lo, hi] = a->bounds();
  out["polynomial"] = polynomial_to_json(p);
  out["root"] = k;
  out["isolating_interval"] = {to_string(lo), to_string(hi)};
  out["approx"] = decimal(a->approx());
  return out;
}

Real coordinate_from_json(const Json& j) {
  if (j.contains("rational")) return Real(rational_field(j, "rational"));
  Polynomial p = polynomial_from_json(field(j, "polynomial"));
  auto k = get_as<size_t>(j, "root");
  if (p.degree() < 1) throw ParseError("defining polynomial must be nonconstant");
  auto roots = AlgebraicNumber::real_roots(p);
  if (k >= roots.size()) throw ParseError("root index " + std::to_string(k) + " out of range");
  if (j.contains("isolating_interval")) {
    const Json& iv = j.at("isolating_interval");
    if (!iv.is_array() || iv.size() != 2 || !iv[0].is_string() || !iv[1].is_string())
      throw ParseError("isolating_interval must be two rationals");
    Rational lo, hi;
    try {
      lo = parse_rational(iv[0].get<std::string>());
      hi = parse_rational(iv[1].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    // A rational root is stored with lo == hi.
    bool ok = lo == hi ? roots[k].compare(lo) == 0
                       : lo < hi && roots[k].compare(lo) > 0 && roots[k].compare(hi) < 0 &&
                             count_roots(sturm_sequence(squarefree_part(p)), lo, hi) == 1;
    if (!ok) throw ParseError("isolating interval does not isolate root " + std::to_string(k));
  }
  return Real(roots[k]);
}

Json point_to_json(const CurvePoint& p) {
  Json out;
  if (p.is_infinity()) {
    out["infinity"] = true;
    return out;
  }
  out["x"] = coordinate_to_json(p.x());
  out["y"] = coordinate_to_json(p.y());
  out["approx"] = {decimal(p.x().approx()), decimal(p.y().approx())};
  return out;
}

CurvePoint point_from_json(const Json& j) {
  if (j.contains("infinity")) return CurvePoint::infinity();
  return CurvePoint::affine(coordinate_from_json(field(j, "x")), coordinate_from_json(field(j, "y")));
}

Json torsion_to_json(const TorsionEvidence& t) {
  Json out;
  out["order"] = t.order ? Json(*t.order) : Json(nullptr);
  out["method"] = t.method;
  out["precision_bits"] = t.precision_bits;
  out["proven"] = t.proven;
  return out;
}

TorsionEvidence torsion_from_json(const Json& j) {
  TorsionEvidence t;
  const Json& o = field(j, "order");
  if (!o.is_null()) t.order = o.get<long>();
  t.method = get_as<std::string>(j, "method");
  t.precision_bits = get_as<long>(j, "precision_bits");
  t.proven = get_as<bool>(j, "proven");
  return t;
}

Json witness_to_json(const IndependenceWitness& w) {
  Json out;
  out["method"] = w.method;
  out["bound"] = w.bound;
  out["precision_bits"] = w.precision_bits;
  out["scale_bits"] = w.scale_bits;
  out["component_bits"] = w.component_bits;
  out["min_norm"] = to_string(w.min_norm);
  out["relation_norm"] = to_string(w.relation_norm);
  Json t = Json::array();
  for (const auto& e : w.torsion) t.push_back(torsion_to_json(e));
  out["torsion"] = t;
  return out;
}

IndependenceWitness witness_from_json(const Json& j, std::vector<CurvePoint> points) {
  IndependenceWitness w;
  w.points = std::move(points);
  w.method = get_as<std::string>(j, "method");
  w.bound = get_as<long>(j, "bound");
  w.precision_bits = get_as<long>(j, "precision_bits");
  w.scale_bits = get_as<long>(j, "scale_bits");
  w.component_bits = get_as<std::vector<int>>(j, "component_bits");
  w.min_norm = rational_field(j, "min_norm");
  w.relation_norm = rational_field(j, "relation_norm");
  for (const auto& t : field(j, "torsion")) w.torsion.push_back(torsion_from_json(t));
  return w;
}

Json matrix_to_json(const IntMatrix& M, int r) {
  Json out;
  out["r"] = r;
  out["dimension"] = M.rows();
  Json e = Json::array();
  for (const auto& v : M.data()) {
    if (v.fits_slong_p())
      e.push_back(v.get_si());
    else
      e.push_back(v.get_str());
  }
  out["entries"] = e;
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  auto n = get_as<size_t>(j, "dimension");
  const Json& e = field(j, "entries");
  if (!e.is_array() || e.size() != n * n) throw ParseError("matrix entries do not match the dimension");
  IntMatrix M(n, n);
  for (size_t k = 0; k < e.size(); ++k) {
    if (e[k].is_number_integer())
      M(k / n, k % n) = static_cast<long>(e[k].get<long long>());
    else
      M(k / n, k % n) = integer_from(e[k]);
  }
  return M;
}

Json linear_form_to_json(const LinearForm& f) {
  Json out;
  out["constant"] = f.constant().get_str();
  Json terms = Json::array();
  for (const auto& [u, c] : f.terms()) {
    Json t;
    t["unknown"] = u.name();
    t["kind"] = std::string(1, u.kind);
    t["indices"] = {u.k, u.l, u.a, u.b};
    t["coeff"] = c.get_str();
    terms.push_back(t);
  }
  out["terms"] = terms;
  return out;
}

LinearForm linear_form_from_json(const Json& j) {
  LinearForm f(integer_from(field(j, "constant")));
  for (const auto& t : field(j, "terms")) {
    auto kind = get_as<std::string>(t, "kind");
    auto idx = get_as<std::vector<int>>(t, "indices");
    if (kind.size() != 1 || idx.size() != 4) throw ParseError("malformed unknown");
    Unknown u{kind[0], idx[0], idx[1], idx[2], idx[3]};
    f += LinearForm::var(u, integer_from(field(t, "coeff")));
  }
  return f;
}

Json fragment_to_json(const InequivalenceFragment& f) {
  Json out;
  out["i"] = f.i;
  out["j"] = f.j;
  out["r"] = f.r;
  out["permutation"] = std::vector<int>(f.permutation.begin() + (f.permutation.empty() ? 0 : 1), f.permutation.end());
  Json steps = Json::array();
  for (const auto& s : f.steps) {
    Json js;
    js["step_kind"] = s.kind;
    js["inputs"] = fields_to_json(s.inputs);
    js["outputs"] = fields_to_json(s.outputs);
    js["citation_tag"] = s.tag;
    steps.push_back(js);
  }
  out["steps"] = steps;
  out["final_equation"] = linear_form_to_json(f.final_equation);
  out["verdict"] = f.verdict;
  return out;
}

InequivalenceFragment fragment_from_json(const Json& j) {
  InequivalenceFragment f;
  f.i = get_as<int>(j, "i");
  f.j = get_as<int>(j, "j");
  f.r = get_as<int>(j, "r");
  auto perm = get_as<std::vector<int>>(j, "permutation");
  f.permutation.push_back(0);
  f.permutation.insert(f.permutation.end(), perm.begin(), perm.end());
  for (const auto& s : field(j, "steps"))
    f.steps.push_back({get_as<std::string>(s, "step_kind"), fields_from_json(field(s, "inputs")),
                       fields_from_json(field(s, "outputs")), get_as<std::string>(s, "citation_tag")});
  f.final_equation = linear_form_from_json(field(j, "final_equation"));
  f.verdict = get_as<std::string>(j, "verdict");
  return f;
}

}  // namespace realforms
