#include <doctest.h>

#include <numbers>
#include <sstream>

#include "blochtherm/io.hpp"

using namespace blochtherm;

namespace {

CycleReport benchmark_report(int samples = 2001) {
  const OttoSpec spec{1.0, std::numbers::pi / 3, std::numbers::pi / 6,
                      0.4, 0.8, 1.0};
  return run_cycle(build_otto(spec), samples);
}

}  // namespace

TEST_CASE("trajectory CSV header and determinism") {
  const CycleReport a = benchmark_report();
  const CycleReport b = benchmark_report();
  const std::string csv_a = trajectory_csv(a);
  const std::string csv_b = trajectory_csv(b);
  CHECK(csv_a == csv_b);

  std::istringstream lines(csv_a);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "t,bx,by,bz,B,theta_rad,E,S,T_eff,Q_cum,W_cum,C_cum");

  // junction samples are shared: 4 strokes x (N-1) rows plus the start
  std::size_t rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 4 * 2000 + 1);
}

TEST_CASE("summary JSON schema and bit-exact round trip") {
  const CycleReport rep = benchmark_report();
  const json j = summary_json(rep);

  CHECK(j["kind"] == "otto");
  CHECK(j["analytic"]["per_stroke"].size() == 4);
  CHECK(j["simulated"]["per_stroke"].size() == 4);
  for (const auto& stroke : j["simulated"]["per_stroke"]) {
    for (const char* key : {"Q", "W", "C", "dE", "dS", "residual_first_law",
                            "residual_clausius"}) {
      CHECK(stroke.contains(key));
    }
  }

  const json reparsed = json::parse(j.dump());
  CHECK(reparsed["analytic"]["eta"].get<double>() == rep.eta_analytic);
  CHECK(reparsed["analytic"]["s_gen"].get<double>() == rep.s_gen_analytic);
  CHECK(reparsed["simulated"]["eta"].get<double>() == rep.eta_simulated);
  CHECK(reparsed.dump() == j.dump());
}

TEST_CASE("sweep rendering keeps infeasible rows") {
  std::vector<SweepRow> rows(2);
  rows[0].value = 30.0;
  rows[0].feasible = true;
  rows[0].report = benchmark_report(501);
  rows[1].value = 75.0;
  rows[1].feasible = false;
  rows[1].error = "infeasible";

  const std::string csv = sweep_csv("theta2-deg", rows);
  CHECK(csv.find("theta2-deg,feasible,") == 0);
  CHECK(csv.find("75,0,,,,,,,infeasible") != std::string::npos);

  const json j = sweep_json("theta2-deg", rows);
  CHECK(j["rows"].size() == 2);
  CHECK(j["rows"][1]["feasible"] == false);
}

TEST_CASE("17-significant-digit formatting round-trips") {
  for (double x : {0.1, 1.0 / 3.0, 0.4226497308103742, -2.5e-17}) {
    CHECK(std::stod(format_double(x)) == x);
  }
}
