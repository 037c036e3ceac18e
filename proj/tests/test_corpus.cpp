#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fgt/corpus.hpp"

using namespace fgt;

namespace {

std::vector<std::string> exprs(const std::vector<CorpusEntry>& c) {
  std::vector<std::string> out;
  for (const auto& e : c) out.push_back(e.expr);
  return out;
}

bool has(const std::vector<CorpusEntry>& c, const std::string& e) {
  auto v = exprs(c);
  return std::find(v.begin(), v.end(), e) != v.end();
}

/// Number of partitions of k, by the naive recursion.
std::size_t partitions(std::size_t k, std::size_t max_part) {
  if (k == 0) return 1;
  std::size_t n = 0;
  for (std::size_t part = 1; part <= std::min(k, max_part); ++part) n += partitions(k - part, part);
  return n;
}

}  // namespace

TEST(Corpus, TrivialOnly) {
  CorpusConfig cfg;
  cfg.max_order = 1;
  EXPECT_EQ(exprs(build_corpus(cfg)), std::vector<std::string>{"C(1)"});
}

TEST(Corpus, SmallCatalogMembers) {
  CorpusConfig cfg;
  cfg.max_order = 24;
  auto c = build_corpus(cfg);
  for (const char* e : {"S(4)", "SL23", "A(4)", "D(24)", "Q8", "M16", "Dic(12)", "E(2,3)"}) EXPECT_TRUE(has(c, e)) << e;
  for (const auto& e : c) EXPECT_LE(e.group.order(), 24u);
  cfg.max_order = 60;
  EXPECT_TRUE(has(build_corpus(cfg), "A(5)"));
}

TEST(Corpus, SortedDeduplicatedAndDeterministic) {
  CorpusConfig cfg;
  cfg.max_order = 48;
  auto a = build_corpus(cfg), b = build_corpus(cfg);
  EXPECT_EQ(exprs(a), exprs(b));
  std::set<Fingerprint> seen;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_TRUE(seen.insert(fingerprint(a[i].group)).second) << a[i].expr;
    if (i) {
      EXPECT_TRUE(a[i - 1].group.order() < a[i].group.order() ||
                  (a[i - 1].group.order() == a[i].group.order() && a[i - 1].expr < a[i].expr));
    }
    EXPECT_EQ(a[i].group.validate(), "") << a[i].expr;
  }
}

TEST(Corpus, FamiliesFilterAndExtras) {
  CorpusConfig cfg;
  cfg.max_order = 20;
  cfg.families = {"dihedral"};
  for (const auto& e : build_corpus(cfg)) EXPECT_EQ(e.expr.rfind("D(", 0), 0u) << e.expr;
  cfg.families = {"cyclic"};
  cfg.extra = {"S(4)"};
  EXPECT_TRUE(has(build_corpus(cfg), "S(4)"));
}

TEST(Corpus, Errors) {
  CorpusConfig cfg;
  cfg.families = {"sporadic"};
  EXPECT_THROW(build_corpus(cfg), Error);
  cfg.families = {};
  cfg.max_order = 0;
  EXPECT_THROW(build_corpus(cfg), Error);
}

TEST(Corpus, AbelianCountsMatchPartitions) {
  EXPECT_EQ(abelian_exprs(8), (std::vector<std::string>{"C(2)xC(2)xC(2)", "C(2)xC(4)", "C(8)"}));
  for (std::size_t n = 1; n <= 100; ++n) {
    std::size_t expected = 1;
    for (auto [p, k] : factorize(n)) expected *= partitions(k, k);
    EXPECT_EQ(abelian_exprs(n).size(), expected) << n;
    for (const auto& e : abelian_exprs(n)) EXPECT_EQ(build_from_expr(e).order(), n) << e;
  }
}
