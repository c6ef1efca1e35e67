#include "manin/runner.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace manin {

namespace {

struct Task {
  std::string suite;
  uint64_t seed;
};

}  // namespace

RunOutcome run(const RunConfig& config) {
  // --- validation -----------------------------------------------------------
  std::vector<std::string> suites = config.suites;
  if (suites.size() == 1 && suites[0] == "all") suites = catalogue_ids();
  if (suites.empty()) throw InvalidConfig("no suites selected");
  for (const std::string& id : suites)
    if (!is_known_suite(id)) {
      std::string msg = "unknown suite id '" + id + "'; known ids:";
      for (const std::string& k : catalogue_ids()) msg += "\n  " + k;
      throw InvalidConfig(msg);
    }
  if (config.n < 1 || config.m < 1 || config.s < 1)
    throw InvalidConfig("dimensions must be positive");
  if (config.seeds.empty()) throw InvalidConfig("at least one seed required");
  Field field =
      config.prime == 0 ? Field::rationals() : Field::fp(config.prime);

  // --- execution ------------------------------------------------------------
  std::vector<Task> tasks;
  for (const std::string& id : suites)
    for (uint64_t seed : config.seeds) tasks.push_back({id, seed});
  std::vector<SeedReport> results(tasks.size(), SeedReport{});
  std::vector<std::string> guard_errors(tasks.size());
  std::atomic<size_t> next{0};

  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      SuiteRequest req;
      req.id = tasks[i].suite;
      req.n = config.n;
      req.m = config.m;
      req.s = config.s;
      req.degree = config.degree;
      req.mode = config.mode;
      req.field = field;
      req.seed = tasks[i].seed;
      req.guard_words = config.guard_words;
      auto t0 = std::chrono::steady_clock::now();
      try {
        results[i] = run_suite_seed(req);
      } catch (const GuardExceeded& e) {
        guard_errors[i] = e.what();
        SeedReport rep;
        rep.id = req.id;
        rep.n = req.n;
        rep.m = req.m;
        rep.s = req.s;
        rep.mode = mode_name(req.mode);
        rep.prime = field.prime;
        rep.seed = req.seed;
        CaseResult r;
        r.indices = "guard";
        r.member = false;
        r.note = e.what();
        rep.cases.push_back(std::move(r));
        rep.sz_bound = format_sz_bound(0, field);
        results[i] = std::move(rep);
      }
      auto t1 = std::chrono::steady_clock::now();
      results[i].millis =
          std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
              .count();
    }
  };
  int workers = std::max(1, config.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // --- assembly (deterministic: ordered by suite id, then seed) -------------
  RunOutcome out;
  bool guard_exceeded = false;
  for (const std::string& g : guard_errors)
    if (!g.empty()) guard_exceeded = true;

  Json doc;
  doc["schema_version"] = kSchemaVersion;
  Json cfg;
  Json suite_list = Json::array();
  for (const std::string& id : suites) suite_list.push_back(id);
  cfg["suites"] = suite_list;
  cfg["n"] = config.n;
  cfg["m"] = config.m;
  cfg["s"] = config.s;
  cfg["degree"] = config.degree;
  cfg["mode"] = mode_name(config.mode);
  cfg["prime"] = config.prime ? std::to_string(config.prime) : "0";
  Json seed_list = Json::array();
  for (uint64_t s : config.seeds) seed_list.push_back(s);
  cfg["seeds"] = seed_list;
  cfg["guard_words"] = config.guard_words;
  doc["config"] = cfg;

  Json reports = Json::array();
  std::vector<SuiteOutcome> outcomes;
  for (const std::string& id : suites) {
    SuiteOutcome so;
    so.id = id;
    for (size_t i = 0; i < tasks.size(); ++i)
      if (tasks[i].suite == id) so.seeds.push_back(results[i]);
    so.evaluate();
    for (const SeedReport& rep : so.seeds)
      reports.push_back(rep.to_json(config.timing));
    outcomes.push_back(std::move(so));
  }
  doc["reports"] = reports;

  bool all_passed = true;
  Json failures = Json::array();
  for (const SuiteOutcome& so : outcomes) {
    if (!so.passed) all_passed = false;
    for (const std::string& fl : so.failures) failures.push_back(fl);
  }
  Json summary;
  summary["passed"] = all_passed && !guard_exceeded;
  summary["failures"] = failures;
  doc["summary"] = summary;
  out.report = doc;

  // --- human summary ---------------------------------------------------------
  std::ostringstream os;
  os << "suite                         seeds  cases  controls  result\n";
  for (const SuiteOutcome& so : outcomes) {
    size_t ncases = 0, nctl = 0;
    for (const SeedReport& r : so.seeds) {
      ncases += r.cases.size();
      nctl += r.controls.size();
    }
    os << so.id;
    for (size_t pad = so.id.size(); pad < 30; ++pad) os << ' ';
    os << so.seeds.size() << "      " << ncases << "     " << nctl
       << "       " << (so.passed ? "PASS" : "FAIL") << "\n";
  }
  for (const SuiteOutcome& so : outcomes)
    for (const std::string& fl : so.failures) os << "  ! " << fl << "\n";
  if (guard_exceeded) os << "  ! size guard exceeded (partial report)\n";
  out.summary = os.str();
  out.exit_code = guard_exceeded ? 3 : (all_passed ? 0 : 1);
  return out;
}

}  // namespace manin
