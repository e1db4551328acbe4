// One line per reproduction criterion. Every comparison is exact (integer
// winners and round counts), so there are no numeric tolerances to tune.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "broadcast/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checklist"};
  std::string criterion;
  broadcast::VerifyOptions options;
  app.add_option("--criterion", criterion, "Run a single criterion id");
  app.add_option("--threads", options.threads);
  app.add_option("--seed", options.seed);
  CLI11_PARSE(app, argc, argv);

  std::vector<broadcast::CriterionResult> results;
  if (criterion.empty()) {
    results = broadcast::run_suite("all", options);
  } else {
    results.push_back(broadcast::run_criterion(criterion, options));
  }
  int failed = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    std::printf("[%s] criterion %s: %s (%.2fs) %s\n", r.passed ? "PASS" : "FAIL", r.id.c_str(), r.title.c_str(),
                r.seconds, r.detail.c_str());
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
