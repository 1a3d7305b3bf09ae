#include <gtest/gtest.h>

#include <set>

#include "qbern/registry.hpp"

using namespace qbern;

namespace {

std::set<std::string> ids_matching(const std::string& glob) {
  std::set<std::string> out;
  for (const auto& e : registry())
    if (matches_filter(e.id, glob)) out.insert(e.id);
  return out;
}

}  // namespace

TEST(Registry, ListsEveryIdentity) {
  const std::set<std::string> required{
      "thm1", "lemma2-sym", "lemma2-num", "eq10", "eq12", "eq13", "moment1", "eq14", "thm3", "lincomb",
      "stirling", "genfun", "eq16", "eq17", "eq18", "thm4", "thm5-literal", "thm5-corrected", "thm6-literal",
      "thm6-corrected", "thm7-literal", "thm7-corrected", "eq4-padic", "eq15-padic", "eq18-padic"};
  std::set<std::string> present;
  for (const auto& e : registry()) {
    EXPECT_TRUE(present.insert(e.id).second) << "duplicate " << e.id;
    EXPECT_FALSE(e.sweep().empty()) << e.id;
    for (const auto& p : e.sweep()) EXPECT_NO_THROW(validate_params(e, p)) << e.id << " " << render_params(p);
  }
  for (const auto& id : required) EXPECT_TRUE(present.count(id)) << id;
}

TEST(RunCheck, Examples) {
  EXPECT_EQ(run_check("thm1", {{"k", 1}, {"n", 2}}).status, Status::Verified);

  const Report lit = run_check("thm5-literal", {{"k", 1}, {"n", 3}});
  EXPECT_EQ(lit.status, Status::Failed);
  EXPECT_EQ(lit.lhs, "-3/(q+1)");
  EXPECT_EQ(lit.rhs, "-1/(q+1)");

  const Report cor = run_check("thm5-corrected", {{"k", 1}});
  EXPECT_EQ(cor.status, Status::Verified);
  EXPECT_EQ(cor.lhs, "-1/(q+1)");
  EXPECT_EQ(cor.rhs, "-1/(q+1)");

  const Report combined = run_check("thm5", {{"k", 1}, {"n", 3}});
  EXPECT_EQ(combined.status, Status::CorrectedFormVerified);

  const Report e12 = run_check("eq12", {{"n", 0}});
  EXPECT_EQ(e12.status, Status::Verified);
  EXPECT_EQ(e12.lhs, "1");
  EXPECT_EQ(e12.rhs, "1");
}

TEST(RunCheck, LiteralFormHoldsWhenPrefactorIsOne) {
  EXPECT_EQ(run_check("thm5-literal", {{"k", 4}, {"n", 4}}).status, Status::Verified);
  EXPECT_EQ(run_check("thm7-literal", {{"k", 2}, {"pattern", 0}, {"s", 1}}).status, Status::Verified);
}

TEST(RunCheck, RejectsBadInput) {
  EXPECT_THROW(run_check("nope", {}), std::invalid_argument);
  EXPECT_THROW(run_check("thm1", {{"k", 1}}), std::invalid_argument);
  EXPECT_THROW(run_check("thm1", {{"k", 5}, {"n", 2}}), std::invalid_argument);
  EXPECT_THROW(run_check("eq12", {{"n", 1000}}), std::invalid_argument);
  EXPECT_THROW(run_check("eq12", {{"n", 1}, {"m", 1}}), std::invalid_argument);
}

TEST(RunCheck, DomainErrorsBecomeErrorReports) {
  const Report r = run_check("eq4-padic", {{"digits", 8}, {"level", 2}, {"n", 1}, {"p", 5}, {"q0", 7}, {"x0", 0}});
  EXPECT_EQ(r.status, Status::Error);
  EXPECT_NE(r.notes.find("q0"), std::string::npos);
}

TEST(RunCheck, Thm4NotesRecordTheExponent) {
  const Report r = run_check("thm4", {{"k", 2}, {"n", 5}});
  EXPECT_EQ(r.status, Status::Verified);
  EXPECT_NE(r.notes.find("exponent k"), std::string::npos);
}

TEST(Filter, Globs) {
  const auto thm = ids_matching("thm*");
  EXPECT_TRUE(thm.count("thm1") && thm.count("thm4") && thm.count("thm7-corrected"));
  EXPECT_FALSE(thm.count("eq12"));
  const auto eq1 = ids_matching("eq1?");
  EXPECT_EQ(eq1, (std::set<std::string>{"eq10", "eq12", "eq13", "eq14", "eq16", "eq17", "eq18"}));
}

TEST(Suite, ParallelRunKeepsRegistryOrder) {
  const SuiteResult one = run_suite("eq1?", 1), many = run_suite("eq1?", 4);
  ASSERT_EQ(one.reports.size(), many.reports.size());
  for (std::size_t i = 0; i < one.reports.size(); ++i) {
    EXPECT_EQ(one.reports[i].id, many.reports[i].id);
    EXPECT_EQ(one.reports[i].params, many.reports[i].params);
    EXPECT_EQ(one.reports[i].lhs, many.reports[i].lhs);
  }
  EXPECT_EQ(one.exit_code, 0);
}

TEST(Suite, ExpectedFailuresDoNotFlipTheExitCode) {
  const SuiteResult lit = run_suite("thm5-literal", 2);
  EXPECT_GT(lit.failed, 0);
  EXPECT_EQ(lit.unexpected, 0);
  EXPECT_EQ(lit.exit_code, 0);
}

TEST(ReportJson, SchemaKeysInOrder) {
  const auto j = to_json(run_check("eq12", {{"n", 2}}));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"id", "params", "status", "lhs", "rhs", "notes", "elapsed_ms"}));
  EXPECT_EQ(j["params"]["n"], 2);
  EXPECT_EQ(j["status"], "verified");
}

TEST(Status, NamesRoundTrip) {
  for (Status s : {Status::Verified, Status::Failed, Status::CorrectedFormVerified, Status::Error})
    EXPECT_EQ(parse_status(status_name(s)), s);
  EXPECT_THROW(parse_status("ok"), std::invalid_argument);
}
