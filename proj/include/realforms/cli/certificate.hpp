#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "realforms/cli/serialize.hpp"

namespace realforms {

inline constexpr const char* kCertificateSchema = "realforms-certificate/1";

struct RunConfig {
  std::string subcommand;
  int r = 3;
  std::uint64_t seed = 0;
  long precision_bits = PrecisionPolicy::from_env().start;
  long precision_ceiling = 2048;
  long relation_bound = 50;
  long torsion_max_order = 200;
  int conjugacy_depth = 2;
  std::string out;   // empty: stdout
  std::string path;  // input certificate for verify/report
  bool quiet = false;

  PrecisionPolicy policy() const { return {precision_bits, precision_ceiling}; }
  SearchOptions search_options() const;
};

/// Runs every lattice and verifier step on the configuration and records it.
Json build_certificate(const SurfaceConfig& cfg, const RunConfig& run);

struct VerifyReport {
  bool pass = false;
  std::string failing_step;  // empty on PASS
  std::string detail;
  std::vector<std::string> checked;  // step names that passed, in order
};

/// Replays every step; stops at the first one that does not reproduce.
VerifyReport verify_certificate(const Json& cert);

/// The configuration stored in a certificate (points parsed, no checks run).
SurfaceConfig surface_from_certificate(const Json& cert);

std::string verdict_text(int r);

}  // namespace realforms
