// Shared machinery for the suite implementations: check blocks grouped by
// relation set, degenerate-assignment resampling, witness rendering and the
// false-pass bound estimate.
#pragma once

#include <functional>

#include "manin/suites.hpp"

namespace manin {
namespace suites_detail {

struct Check {
  std::string label;
  NCPoly target;
  int degree;
};

struct Block {
  RelationSet rels;
  std::vector<Check> positives;
  std::vector<Check> controls;
  bool vacuity_case = true;  // append a non-vacuity case for this block

  explicit Block(RelationSet r) : rels(std::move(r)) {}
};

std::string render_witness(const NCPoly& w, const Alphabet& a);

uint64_t derived_seed(uint64_t seed, uint64_t salt);

/// Runs the blocks produced by `builder`, resampling the assignment seed on
/// DegenerateAssignment raised from blocks that carry positive cases.
/// Control-only blocks (mutated parameter constraints) swallow degeneracy by
/// marking their cases. The builder receives the (possibly resampled)
/// assignment seed.
SeedReport run_blocked_suite(
    const SuiteRequest& req,
    const std::function<std::vector<Block>(uint64_t assign_seed)>& builder);

/// Header-only seed report (for suites that do not use ideal membership).
SeedReport make_header(const SuiteRequest& req);

// Implemented in suites_series.cpp, yangian.cpp and models.cpp.
SeedReport run_series_suite(const SuiteRequest& req);
SeedReport run_yangian_suite(const SuiteRequest& req);
SeedReport run_oracle_suite(const SuiteRequest& req);

}  // namespace suites_detail
}  // namespace manin
