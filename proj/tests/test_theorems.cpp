#include <gtest/gtest.h>

#include <set>

#include "fgt/theorems.hpp"

using namespace fgt;

namespace {

struct Instance {
  GroupAnalysis analysis;
  SuiteConfig cfg;
  SuiteContext ctx;
  explicit Instance(const std::string& expr)
      : analysis(build_from_expr(expr)), ctx{analysis, expr, cfg, {}} {}
  InstanceRecord run(const std::string& id, const Json& params = Json::object()) {
    return evaluate_instance(theorem(id), ctx, params);
  }
};

std::vector<CorpusEntry> corpus_up_to(std::size_t n) {
  CorpusConfig cc;
  cc.max_order = n;
  return build_corpus(cc);
}

}  // namespace

TEST(Registry, EveryIdOnce) {
  const std::vector<std::string> expected = {"L2.1a", "L2.1b", "L2.2.1", "L2.2.2", "L2.2.3", "L2.2.4", "L2.2.5",
                                             "L2.2.6", "L2.2.7", "L2.3.1", "L2.3.2", "L2.3.3", "L2.4",   "L2.5.1",
                                             "L2.5.2", "L2.6",   "L2.7",   "L3.1",   "T3.2",   "L3.3",   "T3.4",
                                             "T3.5",   "L3.6",   "T3.7",   "T3.8",   "S4.IMPL"};
  EXPECT_EQ(resolve_theorem_ids("all"), expected);
  for (const auto& s : theorem_registry()) {
    EXPECT_FALSE(s.shape.empty());
    EXPECT_FALSE(s.statement.empty());
    EXPECT_FALSE(s.vacuity.empty());
  }
}

TEST(Registry, FamilyPrefixes) {
  EXPECT_EQ(resolve_theorem_ids("L2.2").size(), 7u);
  EXPECT_EQ(resolve_theorem_ids("L2.1"), (std::vector<std::string>{"L2.1a", "L2.1b"}));
  EXPECT_EQ(resolve_theorem_ids("L2.5"), (std::vector<std::string>{"L2.5.1", "L2.5.2"}));
  EXPECT_EQ(resolve_theorem_ids("T3.5"), std::vector<std::string>{"T3.5"});
  EXPECT_THROW(resolve_theorem_ids("T9.9"), Error);
  EXPECT_THROW(theorem("L2"), Error);
}

TEST(Theorems, PNilpotenceOnS3) {
  Instance s3("S(3)");
  auto r = s3.run("L3.1", {{"p", 2}});
  EXPECT_TRUE(r.hypothesis);
  EXPECT_TRUE(r.conclusion);
  EXPECT_FALSE(r.nontrivial);
  EXPECT_TRUE(check_hypothesis(theorem("L3.1"), s3.ctx, {{"p", 2}}));
  EXPECT_TRUE(check_conclusion(theorem("L3.1"), s3.ctx, {{"p", 2}}));
}

TEST(Theorems, PNilpotenceHypothesisFailsOnA4) {
  Instance a4("A(4)");
  auto r = a4.run("L3.1", {{"p", 2}});
  EXPECT_FALSE(r.hypothesis);
  EXPECT_FALSE(r.conclusion);
  ASSERT_TRUE(r.witnesses.contains("failing"));
  EXPECT_EQ(r.witnesses["failing"].size(), 3u);
  for (const auto& m : r.witnesses["failing"]) EXPECT_EQ(m["order"], 2);
}

TEST(Theorems, SupersolubilityHypothesisFailsOnSL23) {
  Instance sl("SL23");
  auto r = sl.run("T3.5");
  EXPECT_FALSE(r.hypothesis);
  EXPECT_FALSE(r.conclusion);
  ASSERT_TRUE(r.witnesses.contains("failing"));
  const auto& f = r.witnesses["failing"];
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0]["p"], 2);
  EXPECT_EQ(f[0]["sylow"]["order"], 8);
  EXPECT_GE(f[0]["failing"].size(), 1u);
  for (const auto& m : f[0]["failing"]) EXPECT_EQ(m["order"], 4);
}

TEST(Theorems, NontrivialInstances) {
  // D(12) = S3 x C2: the Sylow 2-subgroup is a non-normal Klein group and the
  // normal 2-complement is C3.
  Instance d12("D(12)");
  auto r = d12.run("L3.1", {{"p", 2}});
  EXPECT_TRUE(r.hypothesis);
  EXPECT_TRUE(r.conclusion);
  EXPECT_TRUE(r.nontrivial);
  // A4 has four Sylow 3-subgroups, hence nonnormal Hall {3}-subgroups.
  Instance a4("A(4)");
  auto h = a4.run("L2.6", {{"pi", {3}}});
  EXPECT_TRUE(h.hypothesis);
  EXPECT_TRUE(h.conclusion);
  EXPECT_TRUE(h.nontrivial);
  EXPECT_EQ(h.witnesses["hall_subgroups"], 4);
}

TEST(Theorems, HallInA5IsVacuous) {
  Instance a5("A(5)");
  auto r = a5.run("L2.6", {{"pi", {3, 5}}});
  EXPECT_FALSE(r.hypothesis);
  EXPECT_EQ(r.witnesses["hall_subgroups"], 0);
}

TEST(Theorems, CyclicSylowOnDihedral) {
  Instance d10("D(10)");
  auto r = d10.run("L2.5.1", {{"p", 2}});
  EXPECT_TRUE(r.hypothesis);
  EXPECT_TRUE(r.conclusion);
  EXPECT_TRUE(r.nontrivial);
  auto q = d10.run("L2.5.1", {{"p", 5}});
  EXPECT_FALSE(q.hypothesis);  // gcd(10, 4) = 2
}

TEST(Verify, EmptyCorpus) {
  auto reports = verify({"T3.5"}, {}, {});
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_TRUE(reports[0].instances.empty());
  EXPECT_EQ(reports[0].violations(), 0u);
  auto j = reports[0].to_json();
  EXPECT_EQ(j["theorem"], "T3.5");
  EXPECT_EQ(j["engine"], kEngineVersion);
  EXPECT_EQ(j["violations"], 0);
}

TEST(Verify, ZeroViolationsUpTo32) {
  auto corpus = corpus_up_to(32);
  auto reports = verify(resolve_theorem_ids("all"), corpus, {});
  for (const auto& r : reports) {
    EXPECT_EQ(r.violations(), 0u) << r.theorem;
    EXPECT_EQ(r.skipped(), 0u) << r.theorem;
    EXPECT_GT(r.hypothesis_true(), 0u) << r.theorem;
  }
}

TEST(Verify, DeterministicAcrossRunsAndJobs) {
  auto corpus = corpus_up_to(20);
  auto ids = resolve_theorem_ids("all");
  VerifyOptions one, three;
  three.jobs = 3;
  auto a = verify(ids, corpus, one), b = verify(ids, corpus, one), c = verify(ids, corpus, three);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].to_json().dump(), b[i].to_json().dump());
    EXPECT_EQ(a[i].to_json().dump(), c[i].to_json().dump());
  }
  // Sorted by group expression.
  for (const auto& r : a)
    for (std::size_t i = 1; i < r.instances.size(); ++i) EXPECT_LE(r.instances[i - 1].group, r.instances[i].group);
}

TEST(Verify, CapErrorsAreSkipsNotPasses) {
  CorpusConfig cc;
  cc.max_order = 8;
  cc.extra = {"S(4)"};
  auto corpus = build_corpus(cc);
  VerifyOptions opt;
  opt.suite.limits.lattice_cap = 12;
  auto r = verify({"L3.1"}, corpus, opt)[0];
  ASSERT_EQ(r.skipped(), 1u);
  for (const auto& rec : r.instances) {
    if (rec.group == "S(4)") {
      ASSERT_TRUE(rec.skipped);
      EXPECT_NE(rec.skipped->find("LatticeCapExceeded"), std::string::npos);
      EXPECT_FALSE(rec.hypothesis);
    }
  }
  EXPECT_GT(r.skip_rate(), 0.0);
  std::size_t flagged = 0;
  const Json report = r.to_json();
  for (const auto& j : report["instances"]) flagged += j.contains("skipped");
  EXPECT_EQ(flagged, 1u);
  EXPECT_EQ(r.to_json()["counts"]["skipped"], 1);
}

TEST(Verify, SamplingIsRecordedAndSeeded) {
  CorpusConfig cc;
  cc.max_order = 16;
  cc.families = {"elementary"};
  auto corpus = build_corpus(cc);
  VerifyOptions opt;
  opt.suite.sample_cap = 4;
  auto a = verify({"L2.2.2"}, corpus, opt)[0];
  bool any = false;
  for (const auto& r : a.instances)
    if (r.witnesses.contains("sampled")) {
      any = true;
      EXPECT_EQ(r.witnesses["sampled"]["N"]["used"], 4);
    }
  EXPECT_TRUE(any);
  EXPECT_EQ(a.to_json().dump(), verify({"L2.2.2"}, corpus, opt)[0].to_json().dump());
  opt.suite.seed = 7;
  EXPECT_EQ(verify({"L2.2.2"}, corpus, opt)[0].violations(), 0u);
}

TEST(Vacuity, PrimePowerCorpusIsLowSignal) {
  CorpusConfig cc;
  cc.max_order = 64;
  cc.families = {"elementary"};
  auto r = verify({"L3.1"}, build_corpus(cc), {})[0];
  auto audit = vacuity_audit(r, 10);
  EXPECT_EQ(audit.nontrivial, 0u);
  EXPECT_TRUE(audit.low_signal);
  EXPECT_EQ(audit.hypothesis_true, audit.instances);
}

TEST(Vacuity, SupersolubilityNeedsNonCyclicSylow) {
  Instance c15("C(15)");
  auto r = c15.run("T3.5");
  EXPECT_TRUE(r.hypothesis);
  EXPECT_FALSE(r.nontrivial);
  Instance d8("D(8)");
  EXPECT_TRUE(d8.run("T3.5").nontrivial);
}

TEST(Implication, ReplaysOnS4) {
  Instance s4("S(4)");
  for (const char* f : {"U", "U_p:2", "N_p:3"}) {
    auto r = s4.run("S4.IMPL", {{"formation", f}});
    EXPECT_TRUE(r.conclusion) << f;
    EXPECT_GT(r.witnesses["hypothesis_true"].get<std::size_t>(), 0u) << f;
  }
}
