#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "../support/golden61.hpp"
#include "../support/reference_relations.hpp"
#include "gsieve/pipeline/pipeline.hpp"

using namespace gsieve;

namespace {

std::string fixture_path() { return std::string(GSIEVE_DATA_DIR) + "/exp61.cfg"; }

PipelineConfig fixture() { return load_config(fixture_path()); }

const PipelineResult& full_run() {
  static const PipelineResult res = run_pipeline(fixture());
  return res;
}

std::string fixture_text() {
  std::ifstream in(fixture_path());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string drop_line(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.rfind(key + " ", 0) == 0 || line.rfind(key + "=", 0) == 0) continue;
    out += line + "\n";
  }
  return out;
}

PipelineConfig parse_text(const std::string& s) {
  std::istringstream in(s);
  return parse_config(in);
}

}  // namespace

TEST(Config, FixtureParses) {
  PipelineConfig c = fixture();
  EXPECT_EQ(c.p, 61u);
  EXPECT_EQ(c.classes.size(), 7u);
  EXPECT_EQ(c.classes.back(), (NSClass{2, 2, {1, 0}}));
  EXPECT_EQ(c.phi, (QuadEndo{-7, 2}));
  EXPECT_TRUE(c.translations);
  ASSERT_TRUE(c.expect_F1.has_value());
  EXPECT_EQ(*c.expect_F1, std::make_pair(std::int64_t{11}, std::int64_t{48}));
}

TEST(Config, Errors) {
  const std::string base = fixture_text();
  EXPECT_THROW(parse_text(base + "p = 61\n"), std::invalid_argument);
  EXPECT_THROW(parse_text(drop_line(base, "ell")), std::invalid_argument);
  EXPECT_THROW(parse_text(drop_line(base, "phi")), std::invalid_argument);
  EXPECT_THROW(parse_text(drop_line(base, "classes") + "classes = (1,0,0) junk\n"), std::invalid_argument);
  EXPECT_THROW(parse_text(drop_line(base, "translations") + "translations = maybe\n"), std::invalid_argument);
  EXPECT_THROW(parse_text(drop_line(base, "a") + "a = 52\n"), std::invalid_argument);
  EXPECT_THROW(parse_text(base + "no equals sign\n"), std::invalid_argument);
  EXPECT_THROW(load_config("/nonexistent/exp.cfg"), std::invalid_argument);
}

TEST(BuildSetup, GoldenIntersection) {
  gsieve::Setup st = build_setup(fixture());
  EXPECT_EQ(st.d, 19);
  EXPECT_EQ(st.P.h, golden61::hP());
  EXPECT_EQ(st.P.lambda, (-golden61::yP()) % golden61::hP());
  EXPECT_EQ(st.Q.h, golden61::hQ());
  EXPECT_EQ(st.Q.lambda, (-golden61::yQ()) % golden61::hQ());
  EXPECT_EQ(st.iso, golden61::iso());
  EXPECT_EQ(st.F1, make_point(st.E, 11, 48));
  EXPECT_EQ(st.F2, make_point(st.E, 45, 34));
  EXPECT_EQ(st.r, make_point(st.E, 57, 11));
  EXPECT_EQ(st.kerI.size(), 19u);
}

TEST(BuildSetup, WrongFrobeniusSignAborts) {
  PipelineConfig c = fixture();
  c.phi = QuadEndo{7, -2};
  try {
    build_setup(c);
    FAIL() << "expected a stage error";
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), "frobenius_certify");
  }
}

TEST(BuildSetup, DegreeOneRejected) {
  PipelineConfig c = fixture();
  c.alpha = QuadEndo{0, 0};
  c.iso_I = QuadEndo{1, 0};
  try {
    build_setup(c);
    FAIL() << "expected a stage error";
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), "validate");
  }
}

TEST(BuildSetup, InconsistentIRejected) {
  PipelineConfig c = fixture();
  c.iso_I = QuadEndo{4, 1};
  EXPECT_THROW(build_setup(c), StageError);
}

TEST(Pipeline, FullRunReachesTargetRank) {
  const PipelineResult& res = full_run();
  EXPECT_EQ(res.fbA.size(), 98u);
  EXPECT_EQ(res.fbB.size(), 98u);
  EXPECT_EQ(res.columns, 196u);
  EXPECT_EQ(res.target_rank, 195u);
  EXPECT_EQ(res.rank, 195u);
  EXPECT_TRUE(res.all_congruent);
  EXPECT_TRUE(res.solved);
  EXPECT_EQ(res.kernel_dim, 1u);
}

TEST(Pipeline, ComputedLogMatches) {
  const PipelineResult& res = full_run();
  ASSERT_TRUE(res.target_log.has_value());
  EXPECT_EQ(*res.target_log, mpz_class("471821537021905592692223848756"));
  for (auto& c : res.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  EXPECT_GE(res.checks.size(), 6u);
}

TEST(Pipeline, PublishedRelationsAreCollected) {
  const PipelineResult& res = full_run();
  auto rows = refrel::divisors(res.setup->R.f());
  auto found = table_membership(res, rows);
  ASSERT_EQ(found.size(), 8u);
  for (std::size_t i = 0; i < found.size(); ++i) EXPECT_TRUE(found[i]) << "row " << i << " class " << rows[i].first.to_string();
}

TEST(Pipeline, PublishedRelationsHaveClassDegrees) {
  const PipelineResult& res = full_run();
  const gsieve::Setup& st = *res.setup;
  for (auto& [cls, row] : refrel::divisors(st.R.f())) {
    EXPECT_EQ(row.first.degree(), 0) << cls.to_string();
    EXPECT_EQ(row.second.degree(), 0) << cls.to_string();
    EXPECT_LE(row.first.max_place_degree(), 2);
    EXPECT_LE(row.second.max_place_degree(), 2);
  }
}

TEST(Pipeline, DeterministicAcrossThreadCounts) {
  PipelineOptions opt;
  opt.jobs = 3;
  opt.verify = false;
  PipelineResult again = run_pipeline(fixture(), opt);
  const PipelineResult& res = full_run();
  EXPECT_EQ(again.rank, res.rank);
  EXPECT_EQ(again.relations.size(), res.relations.size());
  EXPECT_EQ(again.logs, res.logs);
  for (std::size_t i = 0; i < std::min(again.relations.size(), res.relations.size()); ++i) {
    EXPECT_EQ(again.relations[i].tag, res.relations[i].tag);
    EXPECT_EQ(again.relations[i].row, res.relations[i].row);
  }
}

TEST(Pipeline, ReportSections) {
  const std::string& r = full_run().report;
  for (const char* s : {"SETUP", "PLACES", "FACTOR-BASIS", "RELATIONS", "LINALG", "VERIFY", "SUMMARY"}) {
    EXPECT_NE(r.find(s), std::string::npos) << s;
  }
  EXPECT_NE(r.find("2^2*3*5*229"), std::string::npos);
}
