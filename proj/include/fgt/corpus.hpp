#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "fgt/error.hpp"
#include "fgt/expr.hpp"
#include "fgt/group.hpp"
#include "fgt/numtheory.hpp"

namespace fgt {

struct CorpusConfig {
  /// Any of: cyclic, elementary, abelian, dihedral, dicyclic, symmetric,
  /// alternating, special (Q8, SL23, M16), products. Empty means all.
  std::set<std::string> families;
  std::size_t max_order = 100;
  std::vector<std::string> extra;
  Limits limits;
};

struct CorpusEntry {
  std::string expr;
  Group group;
};

inline const std::set<std::string>& corpus_families() {
  static const std::set<std::string> all = {"cyclic",      "elementary", "abelian", "dihedral", "dicyclic",
                                            "symmetric",   "alternating", "special", "products"};
  return all;
}

namespace detail {

/// Invariant-factor lists n1 | n2 | ... | nk with product n, each ni > 1.
inline void invariant_factors(std::size_t n, std::size_t divisor_of, std::vector<std::size_t>& cur,
                              std::vector<std::vector<std::size_t>>& out) {
  if (n == 1) {
    out.emplace_back(cur.rbegin(), cur.rend());
    return;
  }
  for (std::size_t d = 2; d <= n; ++d) {
    if (n % d || (divisor_of && divisor_of % d)) continue;
    // remaining factors must each divide d, so n/d must be a product of divisors of d
    cur.push_back(d);
    invariant_factors(n / d, d, cur, out);
    cur.pop_back();
  }
}

inline std::string abelian_expr(const std::vector<std::size_t>& factors) {
  std::string out;
  for (std::size_t f : factors) out += (out.empty() ? "" : "x") + ("C(" + std::to_string(f) + ")");
  return out;
}

}  // namespace detail

/// Abelian groups of order n, as C(n1)x...xC(nk) with n1 | n2 | ... | nk.
inline std::vector<std::string> abelian_exprs(std::size_t n) {
  if (n == 1) return {"C(1)"};
  std::vector<std::vector<std::size_t>> lists;
  std::vector<std::size_t> cur;
  detail::invariant_factors(n, 0, cur, lists);
  std::vector<std::string> out;
  for (const auto& l : lists) {
    bool ok = true;
    for (std::size_t i = 1; i < l.size(); ++i) ok &= l[i] % l[i - 1] == 0;
    if (ok) out.push_back(detail::abelian_expr(l));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Deterministic catalog of groups up to max_order, deduplicated by
/// fingerprint (the first expression seen for a fingerprint is kept; equal
/// fingerprints are treated as the same group). Sorted by (order, expr).
inline std::vector<CorpusEntry> build_corpus(const CorpusConfig& cfg) {
  for (const auto& f : cfg.families)
    if (!corpus_families().count(f)) throw Error(ErrorKind::ConfigError, "unknown corpus family '" + f + "'");
  if (cfg.max_order == 0) throw Error(ErrorKind::ConfigError, "max order must be positive");
  auto want = [&](const char* fam) { return cfg.families.empty() || cfg.families.count(fam); };
  const std::size_t max = cfg.max_order;

  std::vector<std::string> exprs;
  auto add = [&](std::string e) { exprs.push_back(std::move(e)); };
  // Named groups first, so deduplication keeps S(3) over D(6) and Q8 over Dic(8).
  if (want("symmetric"))
    for (std::size_t n : {3, 4, 5})
      if (n == 3 ? 6 <= max : n == 4 ? 24 <= max : 120 <= max) add("S(" + std::to_string(n) + ")");
  if (want("alternating")) {
    if (12 <= max) add("A(4)");
    if (60 <= max) add("A(5)");
  }
  if (want("special")) {
    if (8 <= max) add("Q8");
    if (16 <= max) add("M16");
    if (24 <= max) add("SL23");
  }
  if (want("cyclic"))
    for (std::size_t n = 1; n <= max; ++n) add("C(" + std::to_string(n) + ")");
  if (want("elementary"))
    for (std::size_t p = 2; p * p <= max; ++p)
      if (is_prime(p))
        for (std::size_t k = 2, q = p * p; q <= max; ++k, q *= p) add("E(" + std::to_string(p) + "," + std::to_string(k) + ")");
  if (want("abelian"))
    for (std::size_t n = 1; n <= max; ++n)
      for (auto& e : abelian_exprs(n)) add(e);
  if (want("dihedral"))
    for (std::size_t n = 6; n <= max; n += 2) add("D(" + std::to_string(n) + ")");
  if (want("dicyclic"))
    for (std::size_t n = 8; n <= max; n += 4) add("Dic(" + std::to_string(n) + ")");
  if (want("products")) {
    // Non-abelian atoms times abelian groups, and pairs of non-abelian atoms.
    std::vector<std::pair<std::string, std::size_t>> atoms;
    for (std::size_t n = 6; n <= max / 2; n += 2) atoms.push_back({"D(" + std::to_string(n) + ")", n});
    for (std::size_t n = 12; n <= max / 2; n += 4) atoms.push_back({"Dic(" + std::to_string(n) + ")", n});
    for (auto [e, n] : std::vector<std::pair<std::string, std::size_t>>{
             {"Q8", 8}, {"A(4)", 12}, {"M16", 16}, {"S(4)", 24}, {"SL23", 24}, {"A(5)", 60}})
      if (2 * n <= max) atoms.push_back({e, n});
    for (const auto& [a, n] : atoms)
      for (std::size_t m = 2; n * m <= max; ++m)
        for (auto& e : abelian_exprs(m)) add(a + "x" + e);
    for (std::size_t i = 0; i < atoms.size(); ++i)
      for (std::size_t j = i; j < atoms.size(); ++j)
        if (atoms[i].second * atoms[j].second <= max) add(atoms[i].first + "x" + atoms[j].first);
  }
  for (const auto& e : cfg.extra) add(e);

  std::vector<CorpusEntry> out;
  std::set<Fingerprint> seen;
  for (const auto& e : exprs) {
    Group g = build_from_expr(e, cfg.limits);
    if (g.order() > max && std::find(cfg.extra.begin(), cfg.extra.end(), e) == cfg.extra.end()) continue;
    if (!seen.insert(fingerprint(g)).second) continue;
    out.push_back({e, std::move(g)});
  }
  std::stable_sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
    if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
    return a.expr < b.expr;
  });
  return out;
}

}  // namespace fgt
