#pragma once

#include <json.hpp>

#include "realforms/construct.hpp"
#include "realforms/lattice.hpp"
#include "realforms/verifier/inequivalence.hpp"

namespace realforms {

using Json = nlohmann::ordered_json;

/// Exact coordinate: {"rational": "n/d"} or {"polynomial": [...], "root": k}
/// with k the index among the real roots in ascending order.
Json coordinate_to_json(const Real& x);
Real coordinate_from_json(const Json& j);

Json point_to_json(const CurvePoint& p);
CurvePoint point_from_json(const Json& j);

Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json torsion_to_json(const TorsionEvidence& t);
TorsionEvidence torsion_from_json(const Json& j);

/// The witness without its points; those are stored with the configuration.
Json witness_to_json(const IndependenceWitness& w);
IndependenceWitness witness_from_json(const Json& j, std::vector<CurvePoint> points);

/// {"r", "dimension", "entries"} with entries row-major.
Json matrix_to_json(const IntMatrix& M, int r);
IntMatrix matrix_from_json(const Json& j);

Json linear_form_to_json(const LinearForm& f);
LinearForm linear_form_from_json(const Json& j);

Json fragment_to_json(const InequivalenceFragment& f);
InequivalenceFragment fragment_from_json(const Json& j);

/// Decimal rendering used in certificates and reports.
std::string decimal(double v);

/// Reads a required field, raising ParseError when it is missing.
const Json& field(const Json& j, const char* key);

}  // namespace realforms
