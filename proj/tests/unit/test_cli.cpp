#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "realforms/cli/app.hpp"
#include "realforms/cli/certificate.hpp"
#include "realforms/cli/report.hpp"
#include "realforms/errors.hpp"

using namespace realforms;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream o, e;
  int code = run_cli(args, o, e);
  return {code, o.str(), e.str()};
}

const Json& certificate() {
  static const Json cert = [] {
    CliRun r = cli({"construct", "--r", "3", "--seed", "7", "--quiet"});
    EXPECT_EQ(r.code, 0) << r.err;
    return Json::parse(r.out);
  }();
  return cert;
}

std::string write_temp(const Json& j, const std::string& name) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << j.dump(2);
  return path;
}

}  // namespace

TEST(Cli, ConstructProducesVerdict) {
  EXPECT_EQ(certificate()["verdict"], "at least 3 real forms");
  EXPECT_EQ(certificate()["schema"], kCertificateSchema);
  EXPECT_EQ(certificate()["points"].size(), 15u);
}

TEST(Cli, RankTwoIsUsageError) {
  CliRun r = cli({"construct", "--r", "2"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("r >= 3"), std::string::npos);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"construct", "--relation-bound", "0"}).code, kExitUsage);
}

TEST(Cli, SearchExhaustedExitCode) {
  // No base point can be found in zero attempts.
  std::ostringstream o, e;
  RunConfig run;
  SearchOptions opt = run.search_options();
  opt.point_attempts = 0;
  EXPECT_THROW(construct_surface(3, 7, opt), SearchExhausted);
}

TEST(Cli, VerifyOwnOutput) {
  VerifyReport rep = verify_certificate(certificate());
  EXPECT_TRUE(rep.pass) << rep.failing_step << ": " << rep.detail;
  CliRun r = cli({"verify", write_temp(certificate(), "own.json"), "--quiet"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("PASS", 0), 0u);
}

TEST(Cli, FlippedMatrixEntryFailsAtIsometryChecks) {
  Json bad = certificate();
  auto& e = bad["sigma"][0]["matrix"]["entries"];
  e[5] = e[5].get<long>() + 1;
  VerifyReport rep = verify_certificate(bad);
  EXPECT_FALSE(rep.pass);
  EXPECT_EQ(rep.failing_step, "isometry_checks(sigma_1)");
  CliRun r = cli({"verify", write_temp(bad, "flipped.json")});
  EXPECT_EQ(r.code, kExitVerificationFailed);
  EXPECT_NE(r.out.find("FAIL at isometry_checks"), std::string::npos);
}

TEST(Cli, ForgedCongruenceFailsAtParity) {
  Json bad = certificate();
  for (auto& s : bad["inequivalence"][0]["steps"])
    if (s["step_kind"] == "parity") s["outputs"]["congruence"] = "0 ≡ 0 (mod 2)";
  VerifyReport rep = verify_certificate(bad);
  EXPECT_FALSE(rep.pass);
  EXPECT_EQ(rep.failing_step, "inequivalence(1,2)/parity");
}

TEST(Cli, OtherTampering) {
  Json bad = certificate();
  bad["curve"]["c0"] = "1/1";
  EXPECT_EQ(verify_certificate(bad).failing_step, "curve");

  bad = certificate();
  bad["verdict"] = "at least 4 real forms";
  EXPECT_EQ(verify_certificate(bad).failing_step, "verdict");

  bad = certificate();
  bad["independence"]["bound"] = 51;
  EXPECT_EQ(verify_certificate(bad).failing_step, "independence");

  bad = certificate();
  std::swap(bad["points"][1]["point"], bad["points"][2]["point"]);
  EXPECT_EQ(verify_certificate(bad).failing_step, "surface");

  bad = certificate();
  bad["lattice"]["K_squared"] = -5;
  EXPECT_EQ(verify_certificate(bad).failing_step, "lattice");

  bad = certificate();
  bad.erase("schema");
  EXPECT_FALSE(verify_certificate(bad).pass);
}

TEST(Cli, UnparsableFile) {
  std::string path = ::testing::TempDir() + "garbage.json";
  std::ofstream(path) << "{ not json";
  EXPECT_EQ(cli({"verify", path}).code, kExitVerificationFailed);
  EXPECT_EQ(cli({"report", path}).code, kExitVerificationFailed);
}

TEST(Cli, ReportContents) {
  std::string text = render_report(certificate());
  EXPECT_NE(text.find("K_X^2 = -6"), std::string::npos);
  EXPECT_NE(text.find("points     15 (3 base + 12 associated)"), std::string::npos);
  EXPECT_NE(text.find("relation bound N = 50"), std::string::npos);
  int lines = 0;
  for (size_t pos = text.find("\n  p("); pos != std::string::npos; pos = text.find("\n  p(", pos + 1)) ++lines;
  EXPECT_EQ(lines, 15);
}

TEST(Cli, ByteIdenticalReruns) {
  CliRun a = cli({"construct", "--r", "5", "--seed", "7", "--quiet"});
  CliRun b = cli({"construct", "--r", "5", "--seed", "7", "--quiet"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(verify_certificate(Json::parse(a.out)).pass);
}

TEST(Cli, SpectralRadius) {
  EXPECT_NEAR(spectral_radius(IntMatrix::identity(4)), 1.0, 1e-12);
  std::vector<Integer> d{3, 1, -2};
  EXPECT_NEAR(spectral_radius(IntMatrix::diagonal(d)), 3.0, 1e-12);
}
