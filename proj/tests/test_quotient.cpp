#include <gtest/gtest.h>

#include "fgt/expr.hpp"
#include "fgt/lattice.hpp"
#include "fgt/quotient.hpp"
#include "test_oracles.hpp"
#include "test_util.hpp"

using namespace fgt;
using testutil::gen;

TEST(Quotient, S3ModA3) {
  Group s3 = build_from_expr("S(3)");
  auto q = quotient(s3, gen(s3, {"(1 2 3)"}));
  EXPECT_EQ(q.target().order(), 2u);
  EXPECT_EQ(q.target().validate(), "");
  EXPECT_EQ(q.project(0), 0);
  EXPECT_EQ(q.push_forward(gen(s3, {"(1 2)"})).order(), 2u);
  EXPECT_EQ(q.pull_back(Subgroup::trivial(q.target())), q.kernel());
}

TEST(Quotient, S4ModV4LooksLikeS3) {
  Group s4 = build_from_expr("S(4)");
  auto q = quotient(s4, gen(s4, {"(1 2)(3 4)", "(1 3)(2 4)"}));
  EXPECT_EQ(fingerprint(q.target()), fingerprint(build_from_expr("S(3)")));
  Subgroup sylow3 = gen(s4, {"(1 2 3)"});
  EXPECT_EQ(q.push_forward(sylow3).order(), 3u);
  EXPECT_EQ(q.pull_back(q.push_forward(sylow3)).order(), 12u);
}

TEST(Quotient, RejectsBadKernels) {
  Group s3 = build_from_expr("S(3)");
  try {
    quotient(s3, gen(s3, {"(1 2)"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotNormal);
  }
  ElementSet junk(s3.order());
  junk.set(0);
  junk.set(1);
  junk.set(2);
  EXPECT_THROW(quotient(s3, Subgroup(junk)), Error);
}

TEST(Quotient, HomomorphismAndCorrespondence) {
  for (const char* expr : {"S(4)", "D(12)", "Q8", "SL23", "C(2)xC(6)", "M16", "A(4)xC(2)"}) {
    Group g = build_from_expr(expr);
    auto lattice = all_subgroups(g);
    for (const auto& n : normal_subgroups(g)) {
      auto q = quotient(g, n);
      const Group& t = q.target();
      EXPECT_EQ(t.order() * n.order(), g.order()) << expr;
      EXPECT_EQ(oracle::brute_force_group_check(t), "") << expr;
      for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = 0; b < g.order(); ++b) ASSERT_EQ(q.project(g.mul(a, b)), t.mul(q.project(a), q.project(b)));
      // Subgroups containing N correspond to subgroups of G/N.
      std::size_t above = 0;
      for (const auto& h : lattice) {
        if (!n.is_subgroup_of(h)) continue;
        ++above;
        EXPECT_EQ(q.pull_back(q.push_forward(h)), h);
        EXPECT_EQ(is_normal(g, h), is_normal(t, q.push_forward(h)));
      }
      EXPECT_EQ(above, all_subgroups(t).size()) << expr;
    }
  }
}

TEST(Restriction, ReindexesSubgroup) {
  Group s4 = build_from_expr("S(4)");
  Subgroup a4 = gen(s4, {"(1 2 3)", "(1 2)(3 4)"});
  auto r = restrict_to(s4, a4);
  EXPECT_EQ(r.group.order(), 12u);
  EXPECT_EQ(oracle::brute_force_group_check(r.group), "");
  EXPECT_EQ(fingerprint(r.group), fingerprint(build_from_expr("A(4)")));
  for (const auto& h : all_subgroups(r.group)) {
    Subgroup up = r.lift(h);
    EXPECT_TRUE(up.is_subgroup_of(a4));
    EXPECT_EQ(r.lower(up), h);
  }
  EXPECT_EQ(all_subgroups(r.group).size(), 10u);
}
