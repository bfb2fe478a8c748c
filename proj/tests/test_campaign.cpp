#include <gtest/gtest.h>

#include "pfister/campaign.hpp"
#include "pfister/error.hpp"

using namespace pfister;
using namespace pfister::campaign;

namespace {
CampaignConfig small(std::uint64_t seed, int samples) {
  CampaignConfig c;
  c.seed = seed;
  c.samples = samples;
  return c;
}
}  // namespace

TEST(Campaign, SuitesAndChecks) {
  EXPECT_EQ(suite_names().size(), 7u);
  EXPECT_TRUE(is_suite("exact-seq"));
  EXPECT_FALSE(is_suite("nope"));
  EXPECT_EQ(check_names("exact-seq").size(), 4u);
  EXPECT_THROW(run("nope", small(1, 1)), DomainError);
  auto c = small(1, 1);
  c.checks = {"not-a-check"};
  EXPECT_THROW(run("milnor", c), DomainError);
}

TEST(Campaign, AllSuitesPassSmallRuns) {
  for (const auto& s : suite_names()) {
    const Report r = run(s, small(11, 20));
    EXPECT_TRUE(r.all_passed()) << r.render();
  }
}

TEST(Campaign, DeterministicForSeed) {
  for (const auto& s : suite_names()) {
    EXPECT_EQ(run(s, small(5, 15)).render(), run(s, small(5, 15)).render()) << s;
  }
  EXPECT_NE(run("milnor", small(5, 15)).render(), run("milnor", small(6, 15)).render());
}

TEST(Campaign, JobsDoNotChangeTheReport) {
  for (const char* s : {"exact-seq", "milnor", "krs"}) {
    auto one = small(9, 30);
    auto four = one;
    four.jobs = 4;
    const std::string a = run(s, one).render();
    const std::string b = run(s, four).render();
    EXPECT_EQ(a, b) << s;
  }
}

TEST(Campaign, ReportFormat) {
  const std::string text = run("reciprocity", small(1, 3)).render();
  EXPECT_EQ(text.rfind("pfister-report v1\n", 0), 0u);
  EXPECT_NE(text.find("check hilbert-reciprocity: pass=3 fail=0 skip=0"), std::string::npos);
  EXPECT_NE(text.find("status: PASS"), std::string::npos);
  EXPECT_EQ(text.find("wall_time"), std::string::npos);
  auto timed = small(1, 3);
  timed.record_time = true;
  EXPECT_NE(run("reciprocity", timed).render().find("wall_time_s: "), std::string::npos);
}

TEST(Campaign, UnsupportedDegreeIsSkippedWithReason) {
  auto c = small(1, 4);
  c.krs_degree = 2;
  const Report r = run("krs", c);
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks[0].skip, 4);
  EXPECT_EQ(r.checks[0].pass, 0);
  EXPECT_FALSE(r.checks[0].notes.empty());
  EXPECT_NE(r.checks[0].notes[0].second.detail.find("i = 2"), std::string::npos);
  // A skip is not a pass, but it is not a failure either.
  EXPECT_TRUE(r.all_passed());
}

TEST(Campaign, DegreeSetAndCheckFilter) {
  auto c = small(3, 10);
  c.degree_set = {2};
  c.checks = {"first-spot"};
  const Report r = run("exact-seq", c);
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks[0].name, "first-spot");
  EXPECT_EQ(r.checks[0].pass + r.checks[0].skip, 10);
  EXPECT_NE(r.render().find("degree_set: 2"), std::string::npos);
}

TEST(Campaign, SubSeedsSeparateChecksAndIndices) {
  EXPECT_NE(sub_seed(1, "a", 0), sub_seed(1, "b", 0));
  EXPECT_NE(sub_seed(1, "a", 0), sub_seed(1, "a", 1));
  EXPECT_NE(sub_seed(1, "a", 0), sub_seed(2, "a", 0));
  EXPECT_EQ(sub_seed(1, "a", 7), sub_seed(1, "a", 7));
}

TEST(Campaign, SamplerBounds) {
  Sampler s(42);
  for (int i = 0; i < 500; ++i) {
    const auto v = s.uniform(-3, 5);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 5);
    const SquareClass c = s.square_class(30);
    EXPECT_LE(abs(c.value()), 30);
    EXPECT_FALSE(s.nontrivial_class(30).is_one());
    EXPECT_EQ(s.symbol(3, 30).degree(), 3u);
    EXPECT_NE(s.nonzero_rational(10), 0);
  }
}
