#pragma once

#include <string>

#include "realforms/cli/serialize.hpp"

namespace realforms {

/// Largest |eigenvalue| of sigma_i* sigma_j*. Informational only.
double spectral_radius(const IntMatrix& M);

/// Plain-text summary of a certificate. Throws ParseError on malformed input.
std::string render_report(const Json& cert);

}  // namespace realforms
