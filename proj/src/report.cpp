#include "manin/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>

namespace manin {

Json CaseResult::to_json() const {
  Json j;
  j["indices"] = indices;
  j["degree"] = degree;
  j["verdict"] = member ? "member" : "non-member";
  if (!witness.empty()) j["witness"] = witness;
  if (!note.empty()) j["note"] = note;
  return j;
}

bool SeedReport::positives_ok() const {
  for (const CaseResult& c : cases)
    if (!c.member) return false;
  return true;
}

Json SeedReport::to_json(bool with_timing) const {
  Json j;
  j["id"] = id;
  Json dims;
  dims["n"] = n;
  dims["m"] = m;
  dims["s"] = s;
  j["dims"] = dims;
  j["mode"] = mode;
  j["prime"] = prime ? std::to_string(prime) : "0";
  j["seed"] = seed;
  Json cj = Json::array();
  for (const CaseResult& c : cases) cj.push_back(c.to_json());
  j["cases"] = cj;
  Json kj = Json::array();
  for (const CaseResult& c : controls) kj.push_back(c.to_json());
  j["controls"] = kj;
  j["resampled"] = resampled;
  j["sz_bound"] = sz_bound;
  j["millis"] = with_timing ? millis : 0;
  return j;
}

void SuiteOutcome::evaluate() {
  passed = true;
  failures.clear();
  for (const SeedReport& r : seeds) {
    for (const CaseResult& c : r.cases)
      if (!c.member) {
        passed = false;
        failures.push_back(id + " seed " + std::to_string(r.seed) + " case " +
                           c.indices + ": expected member, got non-member");
      }
  }
  // Controls are aggregated across seeds by label.
  std::map<std::string, std::pair<int, int>> tally;  // label -> (failed, total)
  for (const SeedReport& r : seeds)
    for (const CaseResult& c : r.controls) {
      auto& t = tally[c.indices];
      ++t.second;
      if (!c.member) ++t.first;
    }
  for (auto& [label, t] : tally) {
    // require >= ceil(4/5 * total) non-member verdicts
    int need = (4 * t.second + 4) / 5;
    if (t.first < need) {
      passed = false;
      failures.push_back(id + " control " + label + ": non-member in " +
                         std::to_string(t.first) + "/" +
                         std::to_string(t.second) +
                         " seeds (need >= " + std::to_string(need) + ")");
    }
  }
}

std::string format_sz_bound(unsigned long long deg_bound, Field f) {
  if (f.is_rational()) return "0";
  double b = (double)deg_bound / (double)f.prime;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", b);
  return buf;
}

}  // namespace manin
