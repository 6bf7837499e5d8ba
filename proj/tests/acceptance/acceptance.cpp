// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "monocst/verify.hpp"

using namespace monocst;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::size_t failed = 0;
  double worst_ratio = 0.0;  // error / tol over non-control checks
  std::string first_failure;
};

void absorb(Outcome& o, const VerificationReport& r) {
  for (const auto& c : r.checks) {
    ++o.checks;
    if (!c.expect_mismatch && c.tol > 0.0) o.worst_ratio = std::max(o.worst_ratio, c.error() / c.tol);
    if (!c.pass) {
      ++o.failed;
      o.pass = false;
      if (o.first_failure.empty()) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s err=%.3g tol=%.3g", c.id.c_str(), c.error(), c.tol);
        o.first_failure = buf;
      }
    }
  }
}

int failures = 0;

void line(int id, const char* name, const Outcome& o, double seconds, double limit, const char* limit_op) {
  const bool in_time = seconds <= limit;
  const bool ok = o.pass && in_time;
  if (!ok) ++failures;
  std::printf("[%s] %2d %-16s checks=%-4zu failed=%-3zu worst err/tol=%-9.3g time=%.2fs (%s %gs)%s%s\n",
              ok ? "PASS" : "FAIL", id, name, o.checks, o.failed, o.worst_ratio, seconds, limit_op, limit,
              o.first_failure.empty() ? "" : "  first failure: ", o.first_failure.c_str());
  std::fflush(stdout);
}

double run_suite_timed(const std::string& suite, std::vector<int> ms, Outcome& o) {
  VerifyConfig cfg;
  cfg.ms = std::move(ms);
  const auto t0 = Clock::now();
  absorb(o, run_suite(suite, cfg));
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void criterion(int id, const char* name, const std::string& suite, std::vector<int> ms, double limit,
               const char* op = "<") {
  Outcome o;
  double seconds = 0.0;
  try {
    seconds = run_suite_timed(suite, std::move(ms), o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.first_failure = e.what();
  }
  line(id, name, o, seconds, limit, op);
}

int shell(const std::string& cmd) {
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  {
    // unitarity, timed per generator count
    Outcome o;
    double worst_seconds = 0.0;
    try {
      for (int m : {2, 3, 5}) worst_seconds = std::max(worst_seconds, run_suite_timed("unitarity", {m}, o));
    } catch (const std::exception& e) {
      o.pass = false;
      o.first_failure = e.what();
    }
    line(1, "unitarity", o, worst_seconds, 60.0, "per m <=");
  }
  criterion(2, "cosh-gaussian", "cosh_gaussian", {}, 1.0);
  criterion(3, "commutativity", "commutativity", {2, 3, 4}, 120.0, "<=");
  criterion(4, "restriction", "restriction", {}, 10.0);
  criterion(5, "plane waves", "planewave", {2, 3, 4}, 30.0);
  criterion(6, "monogenicity", "monogenicity", {2, 3}, 60.0, "<=");
  criterion(7, "intertwining", "intertwining", {2, 3}, 60.0);
  criterion(8, "cross-ladder", "ladder", {2, 3, 4, 5, 6}, 30.0);
  criterion(9, "classical", "classical", {}, 10.0);

  {
    Outcome o;
    const std::string cli = MONOCST_CLI_PATH;
    const std::string args = " verify --suites all --m 2,3 --seed 20240607 --out ";
    const auto t0 = Clock::now();
    const int a = shell(cli + args + "acceptance_a.csv 2>/dev/null");
    const int b = shell(cli + args + "acceptance_b.csv 2>/dev/null");
    const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    const std::string ra = slurp("acceptance_a.csv"), rb = slurp("acceptance_b.csv");
    o.checks = 2;
    if (a != 0 || b != 0) {
      o.pass = false;
      ++o.failed;
      o.first_failure = "verify exit codes " + std::to_string(a) + ", " + std::to_string(b);
    } else if (ra.empty() || ra != rb) {
      o.pass = false;
      ++o.failed;
      o.first_failure = "reports differ";
    }
    // two full runs, each inside the five-minute budget
    line(10, "determinism", o, seconds, 600.0, "<=");
  }

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
