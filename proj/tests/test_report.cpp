#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkp/suites.hpp"

using namespace gkp;

TEST_CASE("hashing is stable") {
  CHECK(hash_hex("") == hash_hex(""));
  CHECK(hash_hex("a") != hash_hex("b"));
  CHECK(hash_hex("holds").size() == 16);
}

TEST_CASE("empty report serializes with zero counts") {
  Report r;
  r.suite = "demo";
  r.version = "0.1.0";
  r.config = Json::object();
  std::string js = emit_report_json(r);
  Json parsed = Json::parse(js);
  CHECK(parsed["summary"]["pass"] == 0);
  CHECK(parsed["summary"]["fail"] == 0);
  CHECK(parsed["summary"]["skip"] == 0);
  CHECK(parsed["cases"].is_array());
}

TEST_CASE("failing cases carry both canonical forms") {
  Report r;
  r.suite = "demo";
  r.version = "0.1.0";
  r.config = Json::object();
  CaseResult bad;
  bad.params = Json{{"m", 1}};
  bad.status = "fail";
  bad.lhs_hash = hash_hex("x + 1");
  bad.rhs_hash = hash_hex("x");
  bad.diagnostic = Json{{"lhs", "x + 1"}, {"rhs", "x"}};
  r.cases.push_back(bad);
  Json parsed = Json::parse(emit_report_json(r));
  CHECK(parsed["summary"]["fail"] == 1);
  CHECK(parsed["cases"][0]["diagnostic"]["lhs"] == "x + 1");
  CHECK(parsed["cases"][0]["diagnostic"]["rhs"] == "x");
}

TEST_CASE("markdown and json carry identical counts") {
  SuiteConfig cfg;
  cfg.suite = "yang-baxter";
  cfg.trials = 2;
  Report r = run_suite(cfg);
  Json parsed = Json::parse(emit_report_json(r));
  std::string md = emit_report_markdown(r);
  std::string summary_line =
      "Summary: pass=" + std::to_string(int(parsed["summary"]["pass"])) +
      " fail=" + std::to_string(int(parsed["summary"]["fail"])) +
      " skip=" + std::to_string(int(parsed["summary"]["skip"]));
  CHECK(md.find(summary_line) != std::string::npos);
}

TEST_CASE("registry covers every registered suite name") {
  const char* expected[] = {
      "yang-baxter",  "commutation",  "prop31",        "lemma33",
      "lemma34",      "corr321",      "corr327",       "corr329",
      "corr335",      "thm41",        "thm42",         "guo-sun",
      "residues",     "special-cases", "evaluator-agreement", "appendix-a"};
  for (const char* name : expected) {
    CAPTURE(name);
    CHECK(find_suite(name) != nullptr);
  }
  CHECK(suite_registry().size() == 16);
  CHECK(find_suite("no-such-suite") == nullptr);
}

TEST_CASE("reruns with a fixed config are byte-identical") {
  SuiteConfig cfg;
  cfg.suite = "thm41";
  cfg.m_max = 2;
  cfg.n_max = 2;
  cfg.mode = Mode::Sample;
  cfg.trials = 3;
  cfg.seed = 42;
  std::string a = emit_report_json(run_suite(cfg));
  std::string b = emit_report_json(run_suite(cfg));
  CHECK(a == b);

  // Parallel dispatch does not change the bytes either.
  SuiteConfig serial = cfg;
  serial.jobs = 1;
  SuiteConfig wide = cfg;
  wide.jobs = 4;
  CHECK(emit_report_json(run_suite(serial)) ==
        emit_report_json(run_suite(wide)));
}

TEST_CASE("unknown suites and bad configs are usage errors") {
  SuiteConfig cfg;
  cfg.suite = "nonexistent";
  CHECK_THROWS_AS(run_suite(cfg), argument_error);
  SuiteConfig bad;
  bad.suite = "yang-baxter";
  bad.m_max = 0;
  CHECK_THROWS_AS(run_suite(bad), argument_error);
  SuiteConfig badfmt;
  badfmt.suite = "yang-baxter";
  badfmt.format = "xml";
  CHECK_THROWS_AS(run_suite(badfmt), argument_error);
}

TEST_CASE("lambda filters restrict sweeps") {
  SuiteConfig cfg;
  cfg.suite = "prop31";
  cfg.m_max = 4;
  cfg.n_max = 2;
  cfg.lambda_filter = Partition({1});
  Report r = run_suite(cfg);
  for (const auto& c : r.cases) CHECK(c.params["lambda"] == "1");
  CHECK(r.count("pass") == static_cast<int>(r.cases.size()));
  CHECK(!r.cases.empty());
}

TEST_CASE("negative controls pass and record their notes") {
  SuiteConfig cfg;
  cfg.suite = "guo-sun";
  cfg.m_max = 1;
  cfg.n_max = 2;
  Report r = run_suite(cfg);
  bool found = false;
  for (const auto& c : r.cases) {
    if (c.params.contains("check") &&
        c.params["check"] == "printed-rectangle-control") {
      found = true;
      CHECK(c.status == "pass");
      REQUIRE(c.diagnostic.has_value());
      CHECK((*c.diagnostic).contains("note"));
    }
  }
  CHECK(found);
}
