// Command-line front end: single cycle runs, parameter sweeps and the full
// verification suite, with CSV/JSON artifacts for plotting and regression.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <string>

#include "blochtherm/cycles.hpp"
#include "blochtherm/io.hpp"
#include "blochtherm/verify.hpp"

namespace {

using namespace blochtherm;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;

double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

struct CommonOptions {
  int samples = 10001;
  std::string out;
  std::string format = "json";
};

struct OttoOptions {
  double epsilon = 1.0;
  double kb = 1.0;
  double theta1_deg = 60.0;
  double theta2_deg = 30.0;
  double b0 = 0.4;
  double b1 = 0.8;
  std::string realization = "purify";
};

struct CarnotOptions {
  double epsilon = 1.0;
  double kb = 1.0;
  double th = 0.6;
  double tl = 0.3;
  double b0 = 0.4;
  double b1 = 0.8;
};

struct SweepOptions {
  std::string cycle = "otto";
  std::string vary;
};

void usage_error(const std::string& message) {
  throw CLI::ValidationError("usage", message);
}

OttoSpec make_otto_spec(const OttoOptions& o) {
  if (!(o.epsilon > 0.0)) usage_error("--epsilon must be positive");
  if (!(o.kb > 0.0)) usage_error("--kb must be positive");
  if (!(o.theta2_deg >= 0.0 && o.theta2_deg < o.theta1_deg &&
        o.theta1_deg < 90.0)) {
    usage_error("--theta flags must satisfy 0 <= theta2 < theta1 < 90 degrees");
  }
  if (!(o.b0 > 0.0 && o.b0 < o.b1 && o.b1 < 1.0)) {
    usage_error("--b0/--b1 must satisfy 0 < b0 < b1 < 1");
  }
  return {o.epsilon, deg_to_rad(o.theta1_deg), deg_to_rad(o.theta2_deg), o.b0,
          o.b1, o.kb};
}

CarnotSpec make_carnot_spec(const CarnotOptions& o) {
  if (!(o.epsilon > 0.0)) usage_error("--epsilon must be positive");
  if (!(o.kb > 0.0)) usage_error("--kb must be positive");
  if (!(o.tl > 0.0 && o.th > o.tl)) {
    usage_error("--th/--tl must satisfy T_H > T_L > 0");
  }
  if (!(o.b0 > 0.0 && o.b0 < o.b1 && o.b1 < 1.0)) {
    usage_error("--b0/--b1 must satisfy 0 < b0 < b1 < 1");
  }
  return {o.epsilon, o.th, o.tl, o.b0, o.b1, o.kb};
}

IsochoricRealization parse_realization(const std::string& name) {
  if (name == "purify") return IsochoricRealization::Purify;
  if (name == "spectral") return IsochoricRealization::Spectral;
  usage_error("--realization must be purify or spectral");
  return IsochoricRealization::Purify;
}

void write_artifact(const std::string& out, const std::string& payload) {
  if (out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw IoError("cannot open output file: " + out);
  file << payload;
}

int run_single(const CycleReport& report, const CommonOptions& common) {
  const std::string payload = common.format == "csv"
                                  ? trajectory_csv(report)
                                  : summary_json(report).dump(2) + "\n";
  write_artifact(common.out, payload);
  if (!common.out.empty()) {
    std::cout << report.kind << ": eta_analytic=" << report.eta_analytic
              << " eta_simulated=" << report.eta_simulated
              << " s_gen=" << report.s_gen_simulated << "\n"
              << "wrote " << common.out << "\n";
  }
  return kExitOk;
}

struct SweepGrid {
  std::string name;
  double start = 0.0;
  double stop = 0.0;
  int count = 0;
};

SweepGrid parse_vary(const std::string& vary) {
  SweepGrid grid;
  const auto eq = vary.find('=');
  if (eq == std::string::npos) usage_error("--vary expects name=start:stop:count");
  grid.name = vary.substr(0, eq);
  const std::string range = vary.substr(eq + 1);
  const auto c1 = range.find(':');
  const auto c2 = range.find(':', c1 == std::string::npos ? 0 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    usage_error("--vary expects name=start:stop:count");
  }
  try {
    grid.start = std::stod(range.substr(0, c1));
    grid.stop = std::stod(range.substr(c1 + 1, c2 - c1 - 1));
    grid.count = std::stoi(range.substr(c2 + 1));
  } catch (const std::exception&) {
    usage_error("--vary range fields must be numeric");
  }
  if (grid.count < 2) usage_error("--vary count must be >= 2");
  return grid;
}

int run_sweep(const SweepOptions& sweep, OttoOptions otto, CarnotOptions carnot,
              const CommonOptions& common) {
  if (sweep.cycle != "otto" && sweep.cycle != "carnot") {
    usage_error("--cycle must be otto or carnot");
  }
  const SweepGrid grid = parse_vary(sweep.vary);

  std::map<std::string, double*> targets;
  if (sweep.cycle == "otto") {
    targets = {{"epsilon", &otto.epsilon},       {"kb", &otto.kb},
               {"theta1-deg", &otto.theta1_deg}, {"theta2-deg", &otto.theta2_deg},
               {"b0", &otto.b0},                 {"b1", &otto.b1}};
  } else {
    targets = {{"epsilon", &carnot.epsilon}, {"kb", &carnot.kb},
               {"th", &carnot.th},           {"tl", &carnot.tl},
               {"b0", &carnot.b0},           {"b1", &carnot.b1}};
  }
  const auto it = targets.find(grid.name);
  if (it == targets.end()) {
    usage_error("unknown sweep parameter: " + grid.name);
  }

  std::vector<SweepRow> rows;
  for (int k = 0; k < grid.count; ++k) {
    SweepRow row;
    row.value = grid.start + (grid.stop - grid.start) * k / (grid.count - 1);
    *it->second = row.value;
    try {
      if (sweep.cycle == "otto") {
        OttoSpec spec{otto.epsilon, deg_to_rad(otto.theta1_deg),
                      deg_to_rad(otto.theta2_deg), otto.b0, otto.b1, otto.kb};
        row.report =
            run_cycle(build_otto(spec, parse_realization(otto.realization)),
                      common.samples);
      } else {
        CarnotSpec spec{carnot.epsilon, carnot.th, carnot.tl,
                        carnot.b0, carnot.b1, carnot.kb};
        row.report = run_cycle(build_carnot(spec), common.samples);
      }
      row.feasible = true;
    } catch (const Error& e) {
      row.feasible = false;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }

  const std::string payload = common.format == "csv"
                                  ? sweep_csv(grid.name, rows)
                                  : sweep_json(grid.name, rows).dump(2) + "\n";
  write_artifact(common.out, payload);
  return kExitOk;
}

int run_verify(int samples) {
  const std::vector<CheckResult> results = run_verification(samples);
  int failures = 0;
  for (const CheckResult& r : results) {
    std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name;
    if (!r.pass && !r.detail.empty()) std::cout << "  [" << r.detail << "]";
    std::cout << "\n";
    if (!r.pass) ++failures;
  }
  std::cout << results.size() - failures << "/" << results.size()
            << " checks passed\n";
  return failures == 0 ? kExitOk : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-qubit Otto/Carnot cycle simulator with an entropy-based"
               " heat / work / coherence-work ledger"};
  app.require_subcommand(1);

  CommonOptions common;
  OttoOptions otto;
  CarnotOptions carnot;
  SweepOptions sweep;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--samples", common.samples, "Samples per stroke")
        ->check(CLI::Range(3, 10000001));
    cmd->add_option("--out", common.out, "Output file (stdout if omitted)");
    cmd->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* otto_cmd = app.add_subcommand("otto", "Run one Otto cycle");
  otto_cmd->add_option("--epsilon", otto.epsilon, "Field magnitude");
  otto_cmd->add_option("--kb", otto.kb, "Boltzmann constant");
  otto_cmd->add_option("--theta1-deg", otto.theta1_deg, "State-1 angle [deg]");
  otto_cmd->add_option("--theta2-deg", otto.theta2_deg, "State-2 angle [deg]");
  otto_cmd->add_option("--b0", otto.b0, "Inner modulus");
  otto_cmd->add_option("--b1", otto.b1, "Outer modulus");
  otto_cmd->add_option("--realization", otto.realization,
                       "Dissipator for stroke 4->1 (purify|spectral)");
  add_common(otto_cmd);

  CLI::App* carnot_cmd = app.add_subcommand("carnot", "Run one Carnot cycle");
  carnot_cmd->add_option("--epsilon", carnot.epsilon, "Field magnitude");
  carnot_cmd->add_option("--kb", carnot.kb, "Boltzmann constant");
  carnot_cmd->add_option("--th", carnot.th, "Hot reservoir temperature");
  carnot_cmd->add_option("--tl", carnot.tl, "Cold reservoir temperature");
  carnot_cmd->add_option("--b0", carnot.b0, "Inner modulus");
  carnot_cmd->add_option("--b1", carnot.b1, "Outer modulus");
  add_common(carnot_cmd);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Parameter sweep");
  sweep_cmd->add_option("--cycle", sweep.cycle, "Cycle kind (otto|carnot)");
  sweep_cmd->add_option("--vary", sweep.vary, "name=start:stop:count")
      ->required();
  sweep_cmd->add_option("--epsilon", otto.epsilon, "Field magnitude");
  sweep_cmd->add_option("--kb", otto.kb, "Boltzmann constant");
  sweep_cmd->add_option("--theta1-deg", otto.theta1_deg, "Otto angle 1 [deg]");
  sweep_cmd->add_option("--theta2-deg", otto.theta2_deg, "Otto angle 2 [deg]");
  sweep_cmd->add_option("--th", carnot.th, "Carnot hot temperature");
  sweep_cmd->add_option("--tl", carnot.tl, "Carnot cold temperature");
  sweep_cmd->add_option("--b0", otto.b0, "Inner modulus");
  sweep_cmd->add_option("--b1", otto.b1, "Outer modulus");
  sweep_cmd->add_option("--realization", otto.realization,
                        "Otto dissipator realization");
  add_common(sweep_cmd);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the full verification suite");
  verify_cmd->add_option("--samples", common.samples, "Samples per stroke");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (otto_cmd->parsed()) {
      const OttoSpec spec = make_otto_spec(otto);
      return run_single(
          run_cycle(build_otto(spec, parse_realization(otto.realization)),
                    common.samples),
          common);
    }
    if (carnot_cmd->parsed()) {
      const CarnotSpec spec = make_carnot_spec(carnot);
      return run_single(run_cycle(build_carnot(spec), common.samples), common);
    }
    if (sweep_cmd->parsed()) {
      carnot.epsilon = otto.epsilon;
      carnot.kb = otto.kb;
      carnot.b0 = otto.b0;
      carnot.b1 = otto.b1;
      return run_sweep(sweep, otto, carnot, common);
    }
    return run_verify(common.samples);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  }
}
