#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "print.hpp"
#include "dckl/verify.hpp"

using namespace dckl;

TEST(Verify, RCellsMatchKLCellsSmallRanks) {
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= n; ++r) {
      const auto rep = verify_A(n, r);
      EXPECT_TRUE(rep.passed()) << rep.dump();
      EXPECT_EQ(rep.config.weights, (Weights{2, 2 * r + 1}));
    }
}

TEST(Verify, KLCellsConstantOnWeightInterval) {
  EXPECT_TRUE(verify_A_plus(2, 1, {{3, 4}, {3, 5}, {5, 7}}).passed());
  EXPECT_THROW(verify_A_plus(2, 1, {{1, 3}}), InvalidArgument);
  EXPECT_THROW(verify_A_plus(2, 1, {{2, 2}}), InvalidArgument);
}

TEST(Verify, DominanceRefinement) {
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= 2; ++r) EXPECT_TRUE(verify_cplus(n, r).passed()) << n << " " << r;
}

TEST(Verify, JoinAndOpenCycleClasses) {
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r) {
      EXPECT_TRUE(verify_B(n, r).passed()) << n << " " << r;
      EXPECT_TRUE(verify_D(n, r).passed()) << n << " " << r;
    }
  EXPECT_THROW(verify_B(2, 0), InvalidArgument);
}

TEST(Verify, SymmetricGroupEmbedding) {
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= 3; ++r) EXPECT_TRUE(verify_thm_sn(n, r).passed());
}

TEST(Verify, Cycles) {
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= 2; ++r) {
      const auto rep = verify_cycles(n, r);
      EXPECT_TRUE(rep.passed()) << rep.dump();
      EXPECT_GT(rep.elements, 0u);
    }
}

TEST(Verify, CellAndCoplacticInvariants) {
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= 2; ++r) {
      const auto rep = verify_props(n, r);
      EXPECT_TRUE(rep.passed()) << rep.dump();
    }
}

TEST(Verify, ArgumentChecks) {
  EXPECT_THROW(verify_A(0, 0), InvalidArgument);
  EXPECT_THROW(verify_A(2, -1), InvalidArgument);
  EXPECT_THROW(verify_A(5, 0), ResourceError);
}

TEST(Report, JsonSchema) {
  const auto rep = verify_A(2, 1);
  const auto j = rep.to_json();
  EXPECT_EQ(j["config"]["n"], 2);
  EXPECT_EQ(j["config"]["r"], 1);
  EXPECT_EQ(j["config"]["a"], 2);
  EXPECT_EQ(j["config"]["b"], 3);
  EXPECT_EQ(j["config"]["check"], "A");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_TRUE(j["counterexamples"].is_array());
  EXPECT_FALSE(j.contains("certified"));
  EXPECT_EQ(j["stats"]["elements"], 8);
  EXPECT_EQ(j["stats"]["cells"], 6);
  EXPECT_TRUE(j["stats"].contains("seconds"));
  EXPECT_FALSE(rep.to_json(false)["stats"].contains("seconds"));
  EXPECT_EQ(verify_A(2, 1).dump(false), rep.dump(false));
}

TEST(Report, FailureCapAndStatus) {
  VerificationReport rep;
  EXPECT_TRUE(rep.passed());
  for (std::size_t i = 0; i < VerificationReport::kMaxCounterexamples + 5; ++i) rep.fail({"[1]", "[-1]", "a", "b"});
  EXPECT_FALSE(rep.passed());
  EXPECT_EQ(rep.counterexamples.size(), VerificationReport::kMaxCounterexamples);
  EXPECT_EQ(rep.suppressed, 5u);
  const auto j = rep.to_json(false);
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["stats"]["suppressed"], 5);
  EXPECT_EQ(j["counterexamples"][0]["x"], "[1]");
}

TEST(Report, AtomicWrite) {
  const auto dir = std::filesystem::temp_directory_path() / "dckl_verify_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "report.json").string();
  const auto rep = verify_A(2, 0);
  rep.write(path);
  EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["config"]["check"], "A");
  std::filesystem::remove_all(dir);
}

TEST(Cache, VerificationUsesAndFillsCache) {
  const auto dir = std::filesystem::temp_directory_path() / "dckl_verify_cache";
  std::filesystem::remove_all(dir);
  RunOptions opt;
  opt.cache_dir = dir.string();
  const auto first = verify_A(2, 1, opt);
  EXPECT_TRUE(std::filesystem::exists(dir / detail::cache_file(2, {2, 3})));
  const auto second = verify_A(2, 1, opt);
  EXPECT_EQ(first.dump(false), second.dump(false));
  std::filesystem::remove_all(dir);
}
