// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero on any failure. Also exercises the CLI end to end.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "blochtherm/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(BLOCHTHERM_CLI_PATH) + " " + args;
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&failures](const std::string& name, bool pass,
                            const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  " << name;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!pass) ++failures;
  };

  for (const blochtherm::CheckResult& r : blochtherm::acceptance_checks()) {
    report(r.name, r.pass, r.pass ? "" : r.detail);
  }

  // 10. CLI determinism and exit-code contract
  {
    const std::string tmp = "/tmp/blochtherm_acceptance";
    const std::string otto_args =
        "otto --epsilon 1 --theta1-deg 60 --theta2-deg 30 --b0 0.4 --b1 0.8";
    int rc = run_cli(otto_args + " --format json --out " + tmp + "_a.json");
    rc |= run_cli(otto_args + " --format json --out " + tmp + "_b.json");
    rc |= run_cli(otto_args + " --format csv --out " + tmp + "_a.csv");
    rc |= run_cli(otto_args + " --format csv --out " + tmp + "_b.csv");
    const bool bytes_equal =
        read_file(tmp + "_a.json") == read_file(tmp + "_b.json") &&
        read_file(tmp + "_a.csv") == read_file(tmp + "_b.csv") &&
        !read_file(tmp + "_a.json").empty();
    report("10. CLI determinism: byte-identical CSV/JSON artifacts",
           rc == 0 && bytes_equal);

    report("10. CLI exit codes: usage error is 2",
           run_cli("carnot --th 0.6 --tl 0.9 2>/dev/null") == 2);
    report("10. CLI exit codes: infeasible geometry is 1",
           run_cli("carnot --th 2.0 --tl 0.3 --b0 0.4 --b1 0.8 --out " + tmp +
                   "_x.json 2>/dev/null") == 1);

    const auto t0 = std::chrono::steady_clock::now();
    const int verify_rc = run_cli("verify > " + tmp + "_verify.log");
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::ostringstream os;
    os << "exit=" << verify_rc << " runtime=" << elapsed << "s";
    report("10. CLI verify: exits 0 and completes in < 60 s",
           verify_rc == 0 && elapsed < 60.0, os.str());
  }

  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                              : "ACCEPTANCE: criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
