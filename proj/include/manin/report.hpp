// Machine-readable verification reports. One SeedReport per (suite, seed);
// the JSON layout and key order are fixed so identical configurations give
// byte-identical documents.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "manin/params.hpp"

namespace manin {

using Json = nlohmann::ordered_json;

struct CaseResult {
  std::string indices;  // case label (quantified index data, sub-check name)
  int degree = 0;
  bool member = true;
  std::string witness;  // rendering of the failure witness, if any
  std::string note;     // e.g. "degenerate" when resampling gave up

  Json to_json() const;
};

struct SeedReport {
  std::string id;
  int n = 0, m = 0, s = 0;
  std::string mode;
  uint64_t prime = 0;  // 0 = rationals
  uint64_t seed = 0;
  std::vector<CaseResult> cases;     // expected member
  std::vector<CaseResult> controls;  // expected non-member
  int resampled = 0;
  std::string sz_bound;  // formatted false-pass probability estimate
  long long millis = 0;

  bool positives_ok() const;
  Json to_json(bool with_timing) const;
};

/// Suite passes when every positive case is member for every seed and every
/// control is non-member for at least ceil(4/5 * seeds) of the seeds.
struct SuiteOutcome {
  std::string id;
  std::vector<SeedReport> seeds;
  bool passed = false;
  std::vector<std::string> failures;

  void evaluate();
};

/// Schwartz-Zippel style false-pass estimate: a wrong identity of parameter
/// degree <= deg_bound passes a single F_p evaluation with probability at
/// most deg_bound / p. Formatted with fixed precision for byte-stable
/// reports; "0" in exact-rational mode.
std::string format_sz_bound(unsigned long long deg_bound, Field f);

}  // namespace manin
