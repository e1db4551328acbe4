#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace broadcast {

struct VerifyOptions {
  unsigned threads = 1;
  std::uint64_t seed = 20240611;
};

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct Criterion {
  std::string id;
  std::string suite;
  std::string title;
  std::function<CriterionResult(const VerifyOptions&)> run;
};

/// The reproduction checklist, in order.
const std::vector<Criterion>& criteria();

/// Suites: trees, cycles, cliques, theta, grid, constructions, symmetry,
/// times, all. Throws std::invalid_argument for an unknown name.
std::vector<CriterionResult> run_suite(const std::string& suite, const VerifyOptions& options);
CriterionResult run_criterion(const std::string& id, const VerifyOptions& options);

std::vector<std::string> suite_names();

}  // namespace broadcast
