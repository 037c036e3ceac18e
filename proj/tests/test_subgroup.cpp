#include <gtest/gtest.h>

#include <set>

#include "fgt/expr.hpp"
#include "fgt/lattice.hpp"
#include "fgt/named.hpp"
#include "fgt/subgroup.hpp"
#include "test_oracles.hpp"
#include "test_util.hpp"

using namespace fgt;
using testutil::elem;
using testutil::gen;

namespace {

std::set<oracle::ElemSet> as_sets(const std::vector<Subgroup>& subs) {
  std::set<oracle::ElemSet> out;
  for (const auto& s : subs) {
    auto e = s.elements();
    out.insert(oracle::ElemSet(e.begin(), e.end()));
  }
  return out;
}

const char* kSmallCorpus[] = {"C(1)", "C(6)", "S(3)", "D(8)", "Q8", "A(4)", "C(2)xC(4)", "D(12)",
                              "Dic(12)", "S(4)", "SL23", "M16", "C(3)xS(3)", "E(2,3)"};

}  // namespace

TEST(GeneratedSubgroup, Examples) {
  Group s3 = build_from_expr("S(3)");
  EXPECT_EQ(gen(s3, {"(1 2 3)"}).order(), 3u);
  EXPECT_TRUE(generated_subgroup(s3, std::vector<Elem>{}).is_trivial());
  Group q8 = build_from_expr("Q8");
  // a (order 4) and x generate Q8.
  EXPECT_TRUE(generated_subgroup(q8, std::vector<Elem>{elem(q8, "a"), elem(q8, "x")}).is_whole());
}

TEST(AllSubgroups, KnownCountsAgreeWithNaiveOracles) {
  struct Case {
    const char* expr;
    std::size_t count;
  };
  for (auto [expr, count] : {Case{"A(4)", 10}, Case{"Q8", 6}, Case{"D(8)", 10}}) {
    Group g = build_from_expr(expr);
    auto lattice = all_subgroups(g);
    EXPECT_EQ(lattice.size(), count) << expr;
    EXPECT_EQ(as_sets(lattice.members()), oracle::subgroups_by_subsets(g)) << expr;
  }
  Group s4 = build_from_expr("S(4)");
  auto lattice = all_subgroups(s4);
  EXPECT_EQ(lattice.size(), 30u);
  EXPECT_EQ(as_sets(lattice.members()), oracle::subgroups_by_generators(s4, 2));
}

TEST(AllSubgroups, CapsAreEnforced) {
  Limits lim;
  lim.lattice_cap = 10;
  try {
    all_subgroups(build_from_expr("A(4)"), lim);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LatticeCapExceeded);
  }
  lim = {};
  lim.subgroup_count_cap = 5;
  try {
    all_subgroups(build_from_expr("S(4)"), lim);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SubgroupCountCapExceeded);
  }
}

TEST(AllSubgroups, LatticeInvariants) {
  for (const char* expr : kSmallCorpus) {
    Group g = build_from_expr(expr);
    auto lattice = all_subgroups(g);
    ASSERT_TRUE(lattice.index_of(Subgroup::trivial(g)));
    ASSERT_TRUE(lattice.index_of(Subgroup::whole(g)));
    for (std::size_t i = 1; i < lattice.size(); ++i) EXPECT_TRUE(lattice[i - 1] < lattice[i]) << expr;
    for (const auto& h : lattice) {
      EXPECT_TRUE(h.contains(0));
      EXPECT_TRUE(is_subgroup(g, h.members()));
      EXPECT_EQ(g.order() % h.order(), 0u);
      for (Elem x : g.generators()) EXPECT_TRUE(lattice.index_of(conjugate(g, h, x))) << expr;
      for (const auto& k : lattice) EXPECT_TRUE(lattice.index_of(intersection(h, k))) << expr;
    }
  }
}

TEST(NormalSubgroups, Examples) {
  Group s3 = build_from_expr("S(3)");
  auto ns = normal_subgroups(s3);
  ASSERT_EQ(ns.size(), 3u);
  EXPECT_EQ(ns[0].order(), 1u);
  EXPECT_EQ(ns[1].order(), 3u);
  EXPECT_EQ(ns[2].order(), 6u);
  EXPECT_EQ(normal_subgroups(build_from_expr("A(5)")).size(), 2u);
  Group ab = build_from_expr("C(2)xC(4)");
  EXPECT_EQ(normal_subgroups(ab).size(), all_subgroups(ab).size());
}

TEST(NormalSubgroups, AgreeWithFilteredLattice) {
  for (const char* expr : kSmallCorpus) {
    Group g = build_from_expr(expr);
    std::set<oracle::ElemSet> filtered;
    for (const auto& h : all_subgroups(g)) {
      auto e = h.elements();
      oracle::ElemSet s(e.begin(), e.end());
      if (oracle::naive_is_normal(g, s)) filtered.insert(s);
    }
    EXPECT_EQ(as_sets(normal_subgroups(g)), filtered) << expr;
  }
}

TEST(HallSubgroups, Examples) {
  Group s3 = build_from_expr("S(3)");
  auto l3 = all_subgroups(s3);
  EXPECT_EQ(hall_subgroups(s3, l3, {2}).size(), 3u);
  EXPECT_EQ(hall_subgroups(s3, l3, {2, 3}).size(), 1u);
  EXPECT_TRUE(hall_subgroups(s3, l3, {2, 3})[0].is_whole());
  Group a5 = build_from_expr("A(5)");
  auto l5 = all_subgroups(a5);
  auto h = hall_subgroups(a5, l5, {2, 3});
  EXPECT_EQ(h.size(), 5u);
  for (const auto& x : h) EXPECT_EQ(x.order(), 12u);
  EXPECT_TRUE(hall_subgroups(a5, l5, {3, 5}).empty());
}

TEST(SylowSubgroups, CountAndConjugacy) {
  for (const char* expr : kSmallCorpus) {
    Group g = build_from_expr(expr);
    auto lattice = all_subgroups(g);
    for (unsigned p : g.primes()) {
      auto sylows = sylow_subgroups(g, lattice, p);
      ASSERT_FALSE(sylows.empty());
      EXPECT_EQ(sylows.size() % p, 1u) << expr << " p=" << p;
      for (const auto& s : sylows) {
        bool conj = false;
        for (Elem x = 0; x < g.order() && !conj; ++x) conj = conjugate(g, sylows[0], x) == s;
        EXPECT_TRUE(conj) << expr;
      }
    }
  }
}

TEST(CoreAndClosure, Examples) {
  Group s3 = build_from_expr("S(3)");
  Subgroup t = gen(s3, {"(1 2)"});
  EXPECT_TRUE(core_of(s3, t).is_trivial());
  Subgroup a3 = gen(s3, {"(1 2 3)"});
  EXPECT_EQ(core_of(s3, a3), a3);
  EXPECT_TRUE(normal_closure(s3, t).is_whole());
  EXPECT_EQ(normal_closure(s3, a3), a3);

  Group s4 = build_from_expr("S(4)");
  Subgroup d4 = gen(s4, {"(1 2 3 4)", "(1 3)"});
  ASSERT_EQ(d4.order(), 8u);
  Subgroup v4 = gen(s4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  EXPECT_EQ(core_of(s4, d4), v4);
  EXPECT_EQ(normal_closure(s4, gen(s4, {"(1 2)(3 4)"})), v4);
}

TEST(CoreAndClosure, AgreeWithNormalSubgroupJoinsAndMeets) {
  for (const char* expr : kSmallCorpus) {
    Group g = build_from_expr(expr);
    auto normals = normal_subgroups(g);
    for (const auto& h : all_subgroups(g)) {
      Subgroup join_inside = Subgroup::trivial(g);
      ElementSet meet_above = ElementSet::full(g.order());
      for (const auto& n : normals) {
        if (n.is_subgroup_of(h)) join_inside = join(g, join_inside, n);
        if (h.is_subgroup_of(n)) meet_above &= n.members();
      }
      Subgroup core = core_of(g, h);
      EXPECT_EQ(core, join_inside) << expr;
      auto e = h.elements();
      auto naive = oracle::naive_intersection_of_conjugates(g, oracle::ElemSet(e.begin(), e.end()));
      EXPECT_EQ(core.order(), naive.size());
      EXPECT_EQ(normal_closure(g, h).members(), meet_above) << expr;
    }
  }
}

TEST(NormalizerCentralizer, Examples) {
  Group s3 = build_from_expr("S(3)");
  EXPECT_TRUE(normalizer(s3, gen(s3, {"(1 2 3)"})).is_whole());
  Subgroup t = gen(s3, {"(1 2)"});
  EXPECT_EQ(normalizer(s3, t), t);
  ElementSet id(s3.order());
  id.set(0);
  EXPECT_TRUE(centralizer_of_set(s3, id).is_whole());
  EXPECT_TRUE(center(s3).is_trivial());
}

TEST(NamedSubgroups, Examples) {
  Group q8 = build_from_expr("Q8");
  Subgroup phi = named_subgroup(q8, NamedTag::Frattini);
  EXPECT_EQ(phi.order(), 2u);
  EXPECT_EQ(phi, center(q8));
  Group s4 = build_from_expr("S(4)");
  EXPECT_EQ(named_subgroup(s4, NamedTag::Fitting), gen(s4, {"(1 2)(3 4)", "(1 3)(2 4)"}));
  Group s3 = build_from_expr("S(3)");
  EXPECT_TRUE(named_subgroup(s3, NamedTag::UpperP, 3).is_whole());
  EXPECT_EQ(named_subgroup(s3, NamedTag::UpperP, 2).order(), 3u);
  EXPECT_EQ(named_subgroup(s3, NamedTag::Op, 3).order(), 3u);
  EXPECT_TRUE(named_subgroup(s3, NamedTag::Op, 2).is_trivial());
  EXPECT_EQ(named_subgroup(s3, NamedTag::OpPrime, 2).order(), 3u);
  EXPECT_TRUE(named_subgroup(s3, NamedTag::OpPrimeP, 2).is_whole());
  EXPECT_EQ(named_subgroup(s4, NamedTag::OpPrimeP, 2).order(), 4u);
  EXPECT_EQ(named_subgroup(s4, NamedTag::OpPrimeP, 3).order(), 12u);
  EXPECT_THROW(named_subgroup(build_from_expr("C(300)"), NamedTag::Frattini), Error);
}

TEST(NamedSubgroups, FittingIsJoinOfNilpotentNormalSubgroups) {
  // Nilpotent iff every Sylow subgroup is normal, checked on the restriction.
  for (const char* expr : kSmallCorpus) {
    Group g = build_from_expr(expr);
    Subgroup acc = Subgroup::trivial(g);
    auto lattice = all_subgroups(g);
    for (const auto& n : normal_subgroups(g)) {
      bool nilpotent = true;
      for (unsigned p : factorize(n.order()).empty() ? std::vector<unsigned>{} : prime_divisors(n.order())) {
        std::size_t target = p_part(n.order(), p);
        std::size_t count = 0;
        for (const auto& s : lattice)
          if (s.order() == target && s.is_subgroup_of(n)) ++count;
        nilpotent &= count == 1;
      }
      if (nilpotent) acc = join(g, acc, n);
    }
    EXPECT_EQ(named_subgroup(g, NamedTag::Fitting), acc) << expr;
  }
}

TEST(ProductSet, Examples) {
  Group s3 = build_from_expr("S(3)");
  Subgroup h = gen(s3, {"(1 2)"}), k = gen(s3, {"(1 3)"}), a3 = gen(s3, {"(1 2 3)"});
  EXPECT_EQ(product_set(s3, h, k).count(), 4u);
  EXPECT_FALSE(permutes(s3, h, k));
  EXPECT_TRUE(permutes(s3, h, h));
  EXPECT_TRUE(product_set(s3, h, a3).count() == 6u);
  EXPECT_TRUE(permutes(s3, h, a3));
}

TEST(ProductSet, Properties) {
  for (const char* expr : kSmallCorpus) {
    Group g = build_from_expr(expr);
    auto lattice = all_subgroups(g);
    for (const auto& h : lattice)
      for (const auto& k : lattice) {
        ElementSet hk = product_set(g, h, k);
        EXPECT_EQ(hk.count() * intersection(h, k).order(), h.order() * k.order());
        auto he = h.elements(), ke = k.elements();
        auto naive = oracle::naive_product(g, {he.begin(), he.end()}, {ke.begin(), ke.end()});
        EXPECT_EQ(hk.count(), naive.size());
        bool p = permutes(g, h, k);
        EXPECT_EQ(p, permutes(g, k, h));
        EXPECT_EQ(p, is_subgroup(g, hk));
        EXPECT_EQ(p, hk == product_set(g, k, h));
      }
  }
}

TEST(MaximalSubgroups, Examples) {
  Group v4 = build_from_expr("C(2)xC(2)");
  auto lv = all_subgroups(v4);
  auto mv = maximal_subgroups(lv, Subgroup::whole(v4));
  ASSERT_EQ(mv.size(), 3u);
  for (const auto& m : mv) EXPECT_EQ(m.order(), 2u);
  Group c5 = build_from_expr("C(5)");
  auto mc = maximal_subgroups(all_subgroups(c5), Subgroup::whole(c5));
  ASSERT_EQ(mc.size(), 1u);
  EXPECT_TRUE(mc[0].is_trivial());
  Group q8 = build_from_expr("Q8");
  auto mq = maximal_subgroups(all_subgroups(q8), Subgroup::whole(q8));
  ASSERT_EQ(mq.size(), 3u);
  for (const auto& m : mq) EXPECT_EQ(m.order(), 4u);
  // Maximal subgroups of a proper subgroup, filtered from the parent lattice.
  Group s4 = build_from_expr("S(4)");
  auto ms = maximal_subgroups(all_subgroups(s4), gen(s4, {"(1 2)(3 4)", "(1 3)(2 4)"}));
  EXPECT_EQ(ms.size(), 3u);
}

TEST(Subnormal, ExamplesAndProperties) {
  Group s3 = build_from_expr("S(3)");
  EXPECT_TRUE(is_subnormal(s3, gen(s3, {"(1 2 3)"})));
  EXPECT_FALSE(is_subnormal(s3, gen(s3, {"(1 2)"})));
  Group d8 = build_from_expr("D(8)");
  for (const auto& h : all_subgroups(d8)) EXPECT_TRUE(is_subnormal(d8, h));
  for (const char* expr : kSmallCorpus) {
    Group g = build_from_expr(expr);
    auto lattice = all_subgroups(g);
    for (const auto& h : lattice)
      if (is_normal(g, h)) {
        EXPECT_TRUE(is_subnormal(g, h));
      }
    for (unsigned p : g.primes())
      for (const auto& s : sylow_subgroups(g, lattice, p))
        if (is_subnormal(g, s)) {
          EXPECT_TRUE(is_normal(g, s)) << expr;
        }
  }
}
