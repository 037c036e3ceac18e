#include <gtest/gtest.h>

#include <set>

#include "fgt/expr.hpp"
#include "fgt/formation.hpp"
#include "fgt/lattice.hpp"
#include "test_oracles.hpp"
#include "test_util.hpp"

using namespace fgt;
using testutil::gen;

namespace {

const char* kCorpus[] = {"C(1)", "C(2)", "C(6)", "S(3)", "D(8)", "Q8", "A(4)", "C(2)xC(4)", "D(10)", "D(12)",
                         "Dic(12)", "S(4)", "SL23", "M16", "C(3)xS(3)", "E(2,3)", "C(7)xC(3)", "D(18)",
                         "A(4)xC(2)", "S(3)xS(3)", "Dic(20)", "E(3,2)"};

std::vector<Formation> saturated_formations(const Group& g) {
  std::vector<Formation> out{formation("U"), formation("N")};
  for (unsigned p : {2u, 3u, 5u}) {
    if (g.order() % p && p != 2) continue;
    out.push_back(formation("U_p:" + std::to_string(p)));
    out.push_back(formation("N_p:" + std::to_string(p)));
  }
  return out;
}

}  // namespace

TEST(ChiefSeries, Examples) {
  Group s4 = build_from_expr("S(4)");
  EXPECT_EQ(chief_series(s4).factor_orders(), (std::vector<std::size_t>{4, 3, 2}));
  EXPECT_EQ(chief_series(build_from_expr("A(5)")).factor_orders(), (std::vector<std::size_t>{60}));
  auto c6 = chief_series(build_from_expr("C(6)")).factor_orders();
  EXPECT_EQ(std::multiset<std::size_t>(c6.begin(), c6.end()), (std::multiset<std::size_t>{2, 3}));
}

TEST(ChiefSeries, FactorsAreChiefFactors) {
  for (const char* expr : kCorpus) {
    Group g = build_from_expr(expr);
    auto normals = normal_subgroups(g);
    for (auto seed : {std::optional<std::uint64_t>{}, std::optional<std::uint64_t>{7}}) {
      auto s = chief_series(g, Subgroup::trivial(g), Subgroup::whole(g), seed);
      std::size_t product = 1;
      for (const auto& f : s.factors()) {
        product *= f.order();
        EXPECT_TRUE(is_normal(g, f.lower));
        EXPECT_TRUE(is_normal(g, f.upper));
        for (const auto& n : normals)
          EXPECT_FALSE(f.lower.is_subgroup_of(n) && n.is_subgroup_of(f.upper) && !(n == f.lower) && !(n == f.upper))
              << expr;
      }
      EXPECT_EQ(product, g.order()) << expr;
    }
  }
}

TEST(FactorSemidirect, Examples) {
  Group s3 = build_from_expr("S(3)");
  Subgroup a3 = gen(s3, {"(1 2 3)"});
  ChiefFactor f{Subgroup::trivial(s3), a3};
  EXPECT_EQ(factor_centralizer(s3, f), a3);
  Group sd = factor_semidirect(s3, f);
  EXPECT_EQ(sd.order(), 6u);
  EXPECT_FALSE(sd.is_abelian());
  EXPECT_EQ(oracle::brute_force_group_check(sd), "");

  Group c6 = build_from_expr("C(6)");
  Subgroup c2 = cyclic_subgroup(c6, 3);
  Group central = factor_semidirect(c6, {Subgroup::trivial(c6), c2});
  EXPECT_EQ(central.order(), 2u);

  Group a4 = build_from_expr("A(4)");
  Subgroup v4 = gen(a4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  Group v4c3 = factor_semidirect(a4, {Subgroup::trivial(a4), v4});
  EXPECT_EQ(v4c3.order(), 12u);
  EXPECT_EQ(oracle::brute_force_group_check(v4c3), "");
  for (const auto& n : normal_subgroups(v4c3)) EXPECT_NE(n.order(), 2u);

  Limits tiny;
  tiny.semidirect_cap = 6;
  EXPECT_THROW(factor_semidirect(a4, {Subgroup::trivial(a4), v4}, tiny), Error);
}

TEST(FCentral, Examples) {
  Formation u = formation("U");
  Group s3 = build_from_expr("S(3)");
  EXPECT_TRUE(is_f_central(s3, {Subgroup::trivial(s3), gen(s3, {"(1 2 3)"})}, u));
  Group a4 = build_from_expr("A(4)");
  Subgroup v4 = gen(a4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  EXPECT_FALSE(is_f_central(a4, {Subgroup::trivial(a4), v4}, u));
  EXPECT_TRUE(is_f_hypercentral(a4, Subgroup::trivial(a4), u));
  EXPECT_FALSE(is_f_hypercentral(a4, v4, u));
  EXPECT_TRUE(is_f_hypercentral(s3, Subgroup::whole(s3), u));
}

TEST(FCentral, SupersolubleCentralityMatchesPrimeOrder) {
  Formation u = formation("U");
  for (const char* expr : kCorpus) {
    Group g = build_from_expr(expr);
    for (auto seed : {std::optional<std::uint64_t>{}, std::optional<std::uint64_t>{3}})
      for (const auto& f : chief_series(g, Subgroup::trivial(g), Subgroup::whole(g), seed).factors())
        EXPECT_EQ(is_f_central(g, f, u), is_prime(f.order())) << expr;
  }
}

TEST(Hypercentre, Examples) {
  Formation u = formation("U"), u2 = formation("U_p:2");
  Group s3 = build_from_expr("S(3)");
  EXPECT_TRUE(f_hypercentre(s3, u).is_whole());
  Group a4 = build_from_expr("A(4)");
  EXPECT_TRUE(f_hypercentre(a4, u).is_trivial());
  EXPECT_TRUE(f_hypercentre(a4, u2).is_trivial());
  Group one = build_from_expr("C(1)");
  EXPECT_TRUE(f_hypercentre(one, u).is_trivial());
  EXPECT_TRUE(f_hypercentre_greedy(one, u).is_trivial());
  Group s4 = build_from_expr("S(4)");
  EXPECT_TRUE(f_hypercentre(s4, u).is_trivial());
  // Z_N is the ordinary hypercentre.
  EXPECT_EQ(f_hypercentre(build_from_expr("D(8)"), formation("N")).order(), 8u);
  EXPECT_EQ(f_hypercentre(build_from_expr("D(12)"), formation("N")).order(), 2u);
}

TEST(Hypercentre, JoinGreedyAndLiteralAgree) {
  for (const char* expr : kCorpus) {
    Group g = build_from_expr(expr);
    for (const auto& f : saturated_formations(g)) {
      Subgroup z = f_hypercentre(g, f);
      EXPECT_EQ(z, f_hypercentre_greedy(g, f)) << expr << " " << f.tag();
      Subgroup literal = Subgroup::trivial(g);
      for (const auto& n : normal_subgroups(g)) {
        bool h = is_f_hypercentral(g, n, f);
        EXPECT_EQ(h, is_f_hypercentral(g, n, f, {}, 11)) << expr << " " << f.tag();
        if (h) literal = join(g, literal, n);
      }
      EXPECT_EQ(z, literal) << expr << " " << f.tag();
      EXPECT_EQ(z.is_whole(), f.member(g)) << expr << " " << f.tag();
    }
  }
}

TEST(Hypercentre, QuotientAndSubgroupBehaviour) {
  for (const char* expr : {"S(3)", "D(8)", "A(4)", "D(12)", "S(4)", "SL23", "C(3)xS(3)", "A(4)xC(2)"}) {
    Group g = build_from_expr(expr);
    auto lattice = all_subgroups(g);
    for (const auto& f : saturated_formations(g)) {
      Subgroup z = f_hypercentre(g, f);
      for (const auto& n : normal_subgroups(g)) {
        auto q = quotient(g, n);
        EXPECT_TRUE(q.push_forward(z).is_subgroup_of(f_hypercentre(q.target(), f))) << expr << " " << f.tag();
      }
      for (const auto& h : lattice) {
        auto r = restrict_to(g, h);
        EXPECT_TRUE(r.lower(intersection(z, h)).is_subgroup_of(f_hypercentre(r.group, f))) << expr << " " << f.tag();
      }
    }
  }
}

TEST(Residual, Examples) {
  Group s4 = build_from_expr("S(4)");
  EXPECT_EQ(f_residual(s4, formation("U")), gen(s4, {"(1 2)(3 4)", "(1 3)(2 4)"}));
  EXPECT_TRUE(f_residual(build_from_expr("D(8)"), formation("U")).is_trivial());
  Group a4 = build_from_expr("A(4)");
  EXPECT_EQ(f_residual(a4, formation("N_p:2")), gen(a4, {"(1 2)(3 4)", "(1 3)(2 4)"}));
}

TEST(Residual, IsSmallestNormalWithQuotientInClass) {
  for (const char* expr : kCorpus) {
    Group g = build_from_expr(expr);
    for (const auto& f : saturated_formations(g)) {
      Subgroup r = f_residual(g, f);
      EXPECT_TRUE(f.member(quotient(g, r).target()));
      for (const auto& n : normal_subgroups(g))
        if (f.member(quotient(g, n).target())) {
          EXPECT_TRUE(r.is_subgroup_of(n)) << expr << " " << f.tag();
        }
    }
  }
}

TEST(Residual, RejectsNonFormationPredicate) {
  // "order at most 2" is not closed under subdirect products.
  Formation bogus{"small", 0, [](const Group& g) { return g.order() <= 2; }, false, false, false};
  EXPECT_THROW(f_residual(build_from_expr("C(2)xC(2)"), bogus), Error);
}

TEST(Registry, TagsAndFlags) {
  EXPECT_EQ(formation("U").tag(), "U");
  EXPECT_EQ(formation("U_p:3").tag(), "U_p:3");
  EXPECT_EQ(formation("N_p:2").tag(), "N_p:2");
  EXPECT_TRUE(formation("U_p:5").contains_U);
  EXPECT_FALSE(formation("N").contains_U);
  EXPECT_EQ(formation("U_2").tag(), "U_p:2");
  EXPECT_EQ(formation("U_2:2").tag(), "U_p:2");
  EXPECT_EQ(formation("N_3").tag(), "N_p:3");
  for (const char* bad : {"X", "U_p", "U_p:4", "U:2", "N_p:2,3", "U_2:3", "U_4"}) EXPECT_THROW(formation(bad), Error) << bad;
  EXPECT_THROW(FormationRegistry::instance().add("Z", false, nullptr), Error);
  FormationRegistry::instance().add("Empty", false, [](unsigned) { return Formation{}; });
  EXPECT_THROW(formation("Empty"), Error);
}

TEST(Classes, Examples) {
  Group s3 = build_from_expr("S(3)");
  EXPECT_TRUE(is_in_class(s3, parse_class_spec("p_nilpotent:2")));
  EXPECT_FALSE(is_in_class(s3, parse_class_spec("p_nilpotent:3")));
  EXPECT_TRUE(is_in_class(s3, parse_class_spec("supersoluble")));
  EXPECT_FALSE(is_in_class(build_from_expr("A(4)"), parse_class_spec("supersoluble")));
  EXPECT_FALSE(is_in_class(build_from_expr("A(5)"), parse_class_spec("soluble")));
  EXPECT_FALSE(is_in_class(build_from_expr("A(5)"), parse_class_spec("C_pi:2,5")));
  EXPECT_FALSE(is_in_class(build_from_expr("A(5)"), parse_class_spec("C_pi:3,5")));
  EXPECT_TRUE(is_in_class(build_from_expr("S(4)"), parse_class_spec("C_pi:2,3")));
  EXPECT_FALSE(is_in_class(build_from_expr("S(4)"), parse_class_spec("sylow_tower_supersoluble")));
  EXPECT_TRUE(is_in_class(build_from_expr("D(10)"), parse_class_spec("sylow_tower_supersoluble")));
  EXPECT_TRUE(is_in_class(build_from_expr("A(4)"), parse_class_spec("pi_closed:2")));
  EXPECT_FALSE(is_in_class(build_from_expr("A(4)"), parse_class_spec("pi_closed:3")));
  EXPECT_TRUE(is_in_class(build_from_expr("S(4)"), parse_class_spec("p_supersoluble:3")));
  EXPECT_FALSE(is_in_class(build_from_expr("S(4)"), parse_class_spec("p_supersoluble:2")));
  EXPECT_TRUE(is_in_class(build_from_expr("A(5)"), parse_class_spec("p_soluble:7")));
  EXPECT_FALSE(is_in_class(build_from_expr("A(5)"), parse_class_spec("p_soluble:5")));
  for (const char* bad : {"nilpotent:2", "p_nilpotent", "p_nilpotent:6", "pi_closed:", "what"})
    EXPECT_THROW(parse_class_spec(bad), Error) << bad;
  EXPECT_EQ(parse_class_spec("pi_closed:3,2").to_string(), "pi_closed:2,3");
}

TEST(Classes, CyclicGroupsBelongToEveryClass) {
  for (std::size_t n : {1, 2, 6, 12, 30}) {
    Group g = build_from_expr("C(" + std::to_string(n) + ")");
    for (const char* c : {"nilpotent", "soluble", "p_soluble:2", "p_nilpotent:3", "supersoluble", "p_supersoluble:5",
                          "pi_closed:2,3", "C_pi:2,5", "sylow_tower_supersoluble"})
      EXPECT_TRUE(is_in_class(g, parse_class_spec(c))) << n << " " << c;
  }
}

TEST(Classes, AgreeWithNaiveOracles) {
  for (const char* expr : kCorpus) {
    Group g = build_from_expr(expr);
    EXPECT_EQ(is_supersoluble(g), oracle::naive_supersoluble(g)) << expr;
    EXPECT_EQ(is_nilpotent(g), oracle::naive_nilpotent(g)) << expr;
    EXPECT_EQ(is_soluble(g), oracle::naive_soluble(g)) << expr;
    for (unsigned p : {2u, 3u, 5u}) EXPECT_EQ(is_p_nilpotent(g, p), oracle::naive_p_nilpotent(g, p)) << expr << p;
  }
  EXPECT_FALSE(is_soluble(build_from_expr("A(5)")));
}

TEST(Classes, RelabelingAndQuotientClosure) {
  for (const char* expr : {"S(3)", "A(4)", "D(12)", "S(4)", "SL23", "Dic(12)", "C(3)xS(3)"}) {
    Group g = build_from_expr(expr);
    Group h = oracle::relabel(g, 5);
    for (const auto& f : saturated_formations(g)) {
      EXPECT_EQ(f.member(g), f.member(h)) << expr << " " << f.tag();
      if (!f.member(g)) continue;
      for (const auto& n : normal_subgroups(g)) EXPECT_TRUE(f.member(quotient(g, n).target())) << expr << " " << f.tag();
    }
  }
}
