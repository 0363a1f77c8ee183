#include "realforms/cli/app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "realforms/cli/certificate.hpp"
#include "realforms/cli/report.hpp"
#include "realforms/errors.hpp"

namespace realforms {

namespace {

Json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

int cmd_construct(const RunConfig& run, std::ostream& out, std::ostream& err) {
  SurfaceConfig cfg = construct_surface(run.r, run.seed, run.search_options());
  std::string text = build_certificate(cfg, run).dump(2) + "\n";
  if (run.out.empty()) {
    out << text;
  } else {
    std::ofstream f(run.out, std::ios::binary);
    if (!f) throw ParseError("cannot write " + run.out);
    f << text;
  }
  if (!run.quiet) err << "constructed r=" << run.r << " seed=" << run.seed << ": " << verdict_text(run.r) << "\n";
  return kExitOk;
}

int cmd_verify(const RunConfig& run, std::ostream& out) {
  VerifyReport rep = verify_certificate(load(run.path));
  if (rep.pass) {
    out << "PASS (" << rep.checked.size() << " steps)\n";
    if (!run.quiet)
      for (const auto& s : rep.checked) out << "  ok " << s << "\n";
    return kExitOk;
  }
  out << "FAIL at " << rep.failing_step << ": " << rep.detail << "\n";
  return kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constructs blow-ups of the plane at points of a real cubic and certifies their real forms"};
  app.require_subcommand(1);
  RunConfig run;

  auto add_run_flags = [&](CLI::App* sub) {
    sub->add_option("--r", run.r, "number of base points (r >= 3)");
    sub->add_option("--seed", run.seed, "search seed");
    sub->add_option("--precision-bits", run.precision_bits, "starting interval precision")
        ->check(CLI::PositiveNumber);
    sub->add_option("--precision-ceiling", run.precision_ceiling, "largest interval precision")
        ->check(CLI::PositiveNumber);
    sub->add_option("--relation-bound", run.relation_bound, "independence bound N")->check(CLI::PositiveNumber);
    sub->add_option("--torsion-max-order", run.torsion_max_order, "torsion search bound")
        ->check(CLI::PositiveNumber);
    sub->add_option("--conjugacy-depth", run.conjugacy_depth, "word length of the conjugacy search")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--out", run.out, "certificate path (stdout if omitted)");
  };

  CLI::App* construct = app.add_subcommand("construct", "search a configuration and write its certificate");
  add_run_flags(construct);
  CLI::App* verify = app.add_subcommand("verify", "replay every step of a certificate");
  verify->add_option("path", run.path, "certificate")->required();
  CLI::App* report = app.add_subcommand("report", "summarize a certificate");
  report->add_option("path", run.path, "certificate")->required();
  for (CLI::App* sub : {construct, verify, report}) sub->add_flag("--quiet", run.quiet, "less output");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, eo;
    int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (run.precision_ceiling < run.precision_bits) {
    err << "usage: --precision-ceiling must be at least --precision-bits\n";
    return kExitUsage;
  }

  try {
    if (construct->parsed()) {
      run.subcommand = "construct";
      if (run.r < 3) {
        err << "usage: r >= 3 required (got " << run.r << ")\n";
        return kExitUsage;
      }
      return cmd_construct(run, out, err);
    }
    if (verify->parsed()) {
      run.subcommand = "verify";
      return cmd_verify(run, out);
    }
    run.subcommand = "report";
    out << render_report(load(run.path));
    return kExitOk;
  } catch (const SearchExhausted& e) {
    err << "search exhausted: " << e.what() << "\n";
    return kExitSearchExhausted;
  } catch (const PrecisionExhausted& e) {
    err << "precision exhausted: " << e.what() << "\n";
    return kExitPrecisionExhausted;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace realforms
