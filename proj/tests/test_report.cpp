#include "doctest.h"
#include "manin/runner.hpp"

using namespace manin;

TEST_CASE("suite outcome aggregation: 4/5 rule") {
  SuiteOutcome so;
  so.id = "x";
  for (int i = 0; i < 5; ++i) {
    SeedReport r;
    r.id = "x";
    r.seed = i + 1;
    CaseResult ctl;
    ctl.indices = "ctl";
    ctl.member = (i == 0);  // fails 4 of 5
    r.controls.push_back(ctl);
    so.seeds.push_back(r);
  }
  so.evaluate();
  CHECK(so.passed);
  // 3 of 5 is not enough
  so.seeds[1].controls[0].member = true;
  so.evaluate();
  CHECK_FALSE(so.passed);
}

TEST_CASE("failed positive fails the suite") {
  SuiteOutcome so;
  so.id = "x";
  SeedReport r;
  r.id = "x";
  r.seed = 1;
  CaseResult c;
  c.indices = "case";
  c.member = false;
  r.cases.push_back(c);
  so.seeds.push_back(r);
  so.evaluate();
  CHECK_FALSE(so.passed);
  CHECK(so.failures.size() == 1);
}

TEST_CASE("runner validates config") {
  RunConfig bad;
  bad.suites = {"nosuch"};
  CHECK_THROWS_AS(run(bad), InvalidConfig);
  RunConfig none;
  none.suites = {};
  CHECK_THROWS_AS(run(none), InvalidConfig);
}

TEST_CASE("runner produces byte-identical reports for identical config") {
  RunConfig cfg;
  cfg.suites = {"signs", "minors.plucker"};
  cfg.n = 2;
  cfg.seeds = {1, 2};
  RunOutcome a = run(cfg);
  RunOutcome b = run(cfg);
  CHECK(a.exit_code == 0);
  CHECK(a.report.dump(2) == b.report.dump(2));
  CHECK(a.report["schema_version"] == 1);
  // workers must not change the bytes
  RunConfig par = cfg;
  par.workers = 3;
  RunOutcome c = run(par);
  CHECK(a.report.dump(2) == c.report.dump(2));
}

TEST_CASE("guard exceeded maps to exit 3 with partial report") {
  RunConfig cfg;
  cfg.suites = {"series.macmahon"};
  cfg.n = 3;
  cfg.seeds = {1};
  cfg.guard_words = 10;
  RunOutcome out = run(cfg);
  CHECK(out.exit_code == 3);
  CHECK(out.report["summary"]["passed"] == false);
}
