// The identity catalogue: each theorem is compiled to "LHS - RHS lies in the
// ideal" checks (or exact operator equalities) with negative controls that
// mutate a sign, a diagonal shift, or a parameter constraint and must fail.
#pragma once

#include "manin/membership.hpp"
#include "manin/report.hpp"

namespace manin {

struct SuiteRequest {
  std::string id;
  int n = 2, m = 2, s = 2;
  int degree = 0;  // series cap; 0 selects the default (5 for n<=2, else 4)
  Mode mode = Mode::generic;
  Field field = Field::default_fp();
  uint64_t seed = 1;
  size_t guard_words = 1000000;
};

const std::vector<std::string>& catalogue_ids();
bool is_known_suite(const std::string& id);

/// Runs one catalogue suite for one seed. Throws GuardExceeded when a size
/// guard trips and MathError on invalid requests.
SeedReport run_suite_seed(const SuiteRequest& req);

/// Default series degree cap.
int default_degree_cap(int n);

}  // namespace manin
