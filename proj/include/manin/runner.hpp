// Batch interface behind the CLI: validates a run configuration, executes
// the selected suites over all seeds (optionally on a small worker pool),
// and assembles one deterministic JSON document plus a human summary.
#pragma once

#include "manin/suites.hpp"

namespace manin {

struct RunConfig {
  std::vector<std::string> suites;  // catalogue ids, or the single id "all"
  int n = 2, m = 2, s = 2;
  int degree = 0;  // 0 = per-suite default
  Mode mode = Mode::generic;
  uint64_t prime = Field::kMersenne61;  // 0 selects exact rationals
  std::vector<uint64_t> seeds = {1, 2, 3, 4, 5};
  size_t guard_words = 1000000;
  int workers = 1;
  bool timing = false;  // include wall-clock millis in the JSON
  std::string out_path;
};

struct InvalidConfig : MathError {
  using MathError::MathError;
};

struct RunOutcome {
  int exit_code = 0;  // 0 ok, 1 identity failure, 3 guard exceeded
  Json report;
  std::string summary;
};

/// Validates and runs. Throws InvalidConfig for unknown suite ids or bad
/// dimensions (the CLI maps this to exit code 2). A guard trip yields exit
/// code 3 with the partial report assembled from completed suites.
RunOutcome run(const RunConfig& config);

constexpr int kSchemaVersion = 1;

}  // namespace manin
