// Acceptance suite: one PASS/FAIL line per criterion, details for failures.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "rmtspacing/verify.hpp"

namespace {

using rmtspacing::verify::CheckResult;

struct Criterion {
  int id;
  const char* title;
  const char* suite;
  double budget_s;  // 0 means no runtime bound
};

constexpr Criterion kCriteria[] = {
    {1, "closed forms vs quadrature oracle (rel <= 1e-8)", "oracle", 60.0},
    {2, "mean identities (<= 1e-8) and endpoint constants (<= 1e-9)", "means", 10.0},
    {3, "endpoint/surmise equivalence and Ginibre vertex", "endpoints", 0.0},
    {4, "Chebyshev approximation of Z within 1%", "chebyshev", 30.0},
    {5, "Monte Carlo KS (D <= 0.005), sampler identity, degeneracy", "montecarlo", 360.0},
    {6, "Ginibre/GUE peak ratio 1.163 +/- 0.01", "peak", 0.0},
    {7, "small-s leading powers and linear GOE onset", "small-s", 0.0},
    {8, "special-function kernels (<= 1e-12) and Legendre relation", "specfun", 0.0},
};

}  // namespace

int main() {
  rmtspacing::verify::SuiteOptions opt;
  int failed = 0;
  for (const auto& c : kCriteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> checks;
    std::string error;
    try {
      checks = rmtspacing::verify::run_suite(c.suite, opt);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.budget_s <= 0.0 || elapsed <= c.budget_s;
    const bool pass = error.empty() && rmtspacing::verify::all_pass(checks) && in_time;
    if (!pass) ++failed;
    std::printf("[%s] criterion %d: %s (%zu checks, %.1f s)\n", pass ? "PASS" : "FAIL", c.id,
                c.title, checks.size(), elapsed);
    if (!error.empty()) std::printf("    error: %s\n", error.c_str());
    if (!in_time) std::printf("    runtime %.1f s exceeds %.0f s\n", elapsed, c.budget_s);
    for (const auto& r : checks) {
      if (r.pass) continue;
      std::printf("    %s: measured %.6g > bound %.3g; %s\n", r.name.c_str(), r.measured, r.bound,
                  r.detail.c_str());
    }
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(kCriteria)) - failed,
              std::size(kCriteria));
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
