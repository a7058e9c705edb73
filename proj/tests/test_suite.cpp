#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

#include "racahlab/suite.hpp"

using namespace racahlab;

TEST(SuiteConfig, Ranges) {
  EXPECT_EQ(parse_range("2..8").lo, 2);
  EXPECT_EQ(parse_range("2..8").hi, 8);
  EXPECT_EQ(parse_range("5").hi, 5);
  EXPECT_THROW(parse_range("8..2"), ConfigError);
  EXPECT_THROW(parse_range("a..b"), ConfigError);
  EXPECT_THROW(parse_range("-1..2"), ConfigError);
  EXPECT_THROW(parse_range(""), ConfigError);
}

TEST(SuiteConfig, Validation) {
  SuiteConfig cfg;
  cfg.targets = {"thm9_9"};
  EXPECT_THROW(run_suite(cfg), ConfigError);
  cfg.targets = {};
  EXPECT_THROW(run_suite(cfg), ConfigError);
  cfg = SuiteConfig{};
  cfg.D = {1, 3};
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = SuiteConfig{};
  cfg.workers = 0;
  EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(SuiteConfig, WorkersFromEnvironment) {
  ::setenv("RACAHLAB_WORKERS", "3", 1);
  EXPECT_EQ(workers_from_env(), 3u);
  ::setenv("RACAHLAB_WORKERS", "x", 1);
  EXPECT_THROW(workers_from_env(), ConfigError);
  ::unsetenv("RACAHLAB_WORKERS");
  EXPECT_EQ(workers_from_env(), 1u);
}

TEST(Suite, SymbolicTargetsPass) {
  SuiteConfig cfg;
  cfg.targets = {"thm1_4", "thm1_5", "thm1_6_membership", "thm3_3", "sec3_identities"};
  SuiteResult r = run_suite(cfg);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.report["schema_version"], kSchemaVersion);
  ASSERT_EQ(r.report["targets"].size(), 5u);
  EXPECT_EQ(r.report["targets"][0]["target"], "thm1_4");
  EXPECT_EQ(r.report["targets"][0]["checks"].size(), 7u);
  EXPECT_EQ(r.report["summary"]["failed"], 0);
}

TEST(Suite, DeterministicAcrossWorkerCounts) {
  SuiteConfig cfg;
  cfg.targets = {"prop2_4", "lemma6_suite", "thm6_9", "thm7_5"};
  cfg.d = {0, 3};
  cfg.samples = 6;
  cfg.n_max = 8;
  cfg.seed = 7;
  SuiteResult a = run_suite(cfg);
  cfg.workers = 3;
  SuiteResult b = run_suite(cfg);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.report.dump(), b.report.dump());
  cfg.seed = 8;
  EXPECT_NE(run_suite(cfg).report.dump(), a.report.dump());
  EXPECT_EQ(a.report["config"]["seed"], "7");
}

TEST(Suite, SamplingKeepsReducibleDraws) {
  auto draws = sample_draws({0, 4}, 20, 7);
  EXPECT_EQ(draws.size(), 100u);
  int reducible = 0;
  for (const auto& p : draws) reducible += is_irreducible(p) ? 0 : 1;
  EXPECT_GT(reducible, 0);
  Report r = rd_structure_checks(draws.front());
  EXPECT_TRUE(all_pass(r));
}

TEST(Suite, HypercubeTargetsAndExport) {
  SuiteConfig cfg;
  cfg.targets = {"thm1_7", "thm1_8", "thm8_4", "thm8_7"};
  cfg.D = {2, 4};
  cfg.n_max = 4;
  cfg.samples = 1;
  cfg.d = {1, 1};
  auto dir = std::filesystem::temp_directory_path() / "racahlab_suite_export";
  std::filesystem::remove_all(dir);
  cfg.export_matrices = dir.string();
  SuiteResult r = run_suite(cfg);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(std::filesystem::exists(dir / "hypercube_D3_A2Jbar.txt"));
  std::ifstream f(dir / "rd_sample_0.txt");
  EXPECT_NO_THROW(read_rep(f));
  std::filesystem::remove_all(dir);
}

TEST(Suite, SummaryCarriesFailuresAndResiduals) {
  Report r = {flag("ok", true), {"bad", false, 3}, {"worse", false, 2}};
  CheckResult s = summarize("group", r);
  EXPECT_FALSE(s.pass);
  EXPECT_EQ(s.residual_term_count, 5u);
  EXPECT_TRUE(summarize("empty", {}).pass);
}

TEST(Json, Reports) {
  json j = to_json(decompose_Ln(4));
  EXPECT_EQ(j["ambient_dim"], 5);
  EXPECT_EQ(j["summands"].size(), 4u);
  EXPECT_EQ(j["summands"][0]["class"]["label"], "R_0(0,0,1/2)");
  EXPECT_TRUE(j["complete"]);
  RacahRep r = construct({GR::frac(-1, 4), GR::frac(-1, 4), GR::frac(-1, 4), 2});
  json l = to_json(check(r.A, r.B, r.C));
  EXPECT_TRUE(l["leonard"]);
  EXPECT_EQ(l["operators"].size(), 3u);
  EXPECT_EQ(to_json(hypercube_algebra_profile(4))["dim"], 11);
}
