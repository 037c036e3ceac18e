#pragma once

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "fgt/analysis.hpp"
#include "fgt/corpus.hpp"
#include "fgt/embedding.hpp"
#include "fgt/formation.hpp"
#include "fgt/named.hpp"

namespace fgt {

using Json = nlohmann::json;

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

struct SuiteConfig {
  /// Inner quantifier lists longer than this are replaced by a seeded sample
  /// of this size. 0 means exhaustive.
  std::size_t sample_cap = 0;
  std::uint64_t seed = 0x5eed;
  /// S4.IMPL only visits groups up to this order.
  std::size_t implication_max_order = 60;
  Limits limits;

  Json to_json() const {
    return {{"sample_cap", sample_cap},
            {"seed", seed},
            {"implication_max_order", implication_max_order},
            {"table_cap", limits.table_cap},
            {"lattice_cap", limits.lattice_cap},
            {"subgroup_count_cap", limits.subgroup_count_cap},
            {"semidirect_cap", limits.semidirect_cap}};
  }
};

struct InstanceRecord {
  std::string group;
  Json params = Json::object();
  bool hypothesis = false;
  bool conclusion = false;
  bool nontrivial = false;
  std::optional<std::string> skipped;
  Json witnesses = Json::object();

  bool violation() const { return !skipped && hypothesis && !conclusion; }

  Json to_json() const {
    Json j{{"group", group}, {"params", params}, {"hypothesis", hypothesis}, {"conclusion", conclusion},
           {"nontrivial", nontrivial}, {"witnesses", witnesses}};
    if (skipped) j["skipped"] = *skipped;
    return j;
  }
};

// ---------------------------------------------------------------------------
// Helpers shared by the suites

namespace detail {

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct Selection {
  std::vector<std::size_t> items;
  std::size_t total = 0;
  bool sampled = false;
};

inline Selection select(std::vector<std::size_t> items, std::size_t cap, std::uint64_t seed) {
  Selection s;
  s.total = items.size();
  if (cap && items.size() > cap) {
    std::mt19937_64 rng(seed);
    std::shuffle(items.begin(), items.end(), rng);
    items.resize(cap);
    std::sort(items.begin(), items.end());
    s.sampled = true;
  }
  s.items = std::move(items);
  return s;
}

inline Json describe(const Group& g, const Subgroup& h) {
  Json gens = Json::array();
  for (Elem e : subgroup_generators(g, h)) gens.push_back(g.label(e));
  return {{"order", h.order()}, {"gens", gens}};
}

inline std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

inline bool is_cyclic_subgroup(const Group& g, const Subgroup& h) {
  bool found = false;
  h.members().for_each([&](std::size_t a) { found |= g.elem_order(static_cast<Elem>(a)) == h.order(); });
  return found;
}

inline bool is_abelian_subgroup(const Group& g, const Subgroup& h) {
  auto gens = subgroup_generators(g, h);
  for (Elem x : gens)
    for (Elem y : gens)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

/// Lattice indices of members contained in s.
inline std::vector<std::size_t> members_inside(const SubgroupLattice& lattice, const Subgroup& s, std::size_t order) {
  std::vector<std::size_t> out;
  for (std::size_t i : lattice.with_order(order))
    if (lattice[i].is_subgroup_of(s)) out.push_back(i);
  return out;
}

/// First Sylow p-subgroup of the normal subgroup E in lattice order.
inline std::size_t sylow_of(const SubgroupLattice& lattice, const Subgroup& e, unsigned p) {
  auto in = members_inside(lattice, e, p_part(e.order(), p));
  return in.front();
}

/// Cyclic subgroups of P of order p, plus those of order 4 when P is a
/// non-abelian 2-group.
inline std::vector<std::size_t> small_cyclic_subgroups(const Group& g, const SubgroupLattice& lattice,
                                                       const Subgroup& pp, unsigned p) {
  auto out = members_inside(lattice, pp, p);
  if (p == 2 && !is_abelian_subgroup(g, pp))
    for (std::size_t i : members_inside(lattice, pp, 4))
      if (is_cyclic_subgroup(g, lattice[i])) out.push_back(i);
  return out;
}

inline std::vector<Formation> lemma_formations(const Group& g) {
  std::vector<Formation> out{formation("U")};
  for (unsigned p : g.primes()) {
    out.push_back(formation("U_p:" + std::to_string(p)));
    out.push_back(formation("N_p:" + std::to_string(p)));
  }
  return out;
}

inline bool coprime_to_p_minus_1(std::size_t n, unsigned p) { return std::gcd(n, static_cast<std::size_t>(p - 1)) == 1; }

/// Number of failing sub-cases listed per instance.
inline constexpr std::size_t kMaxListed = 5;

/// Accumulates the sub-cases of one instance of a property suite.
struct Tally {
  std::size_t cases = 0;
  std::size_t hypothesis_true = 0;
  std::size_t failures = 0;
  bool nontrivial = false;
  Json failing = Json::array();
  Json sampling = Json::object();

  void note(const std::string& what, const Selection& s) {
    if (s.sampled) sampling[what] = {{"total", s.total}, {"used", s.items.size()}};
  }
  void add(bool hyp, bool concl, const std::function<Json()>& detail = {}) {
    ++cases;
    if (!hyp) return;
    ++hypothesis_true;
    if (concl) return;
    ++failures;
    if (failing.size() < kMaxListed) failing.push_back(detail ? detail() : Json::object());
  }
  InstanceRecord finish() const {
    InstanceRecord r;
    r.hypothesis = hypothesis_true > 0;
    r.conclusion = failures == 0;
    r.nontrivial = r.hypothesis && nontrivial;
    r.witnesses = {{"cases", cases}, {"hypothesis_true", hypothesis_true}};
    if (!failing.empty()) r.witnesses["failing"] = failing;
    if (!sampling.empty()) r.witnesses["sampled"] = sampling;
    return r;
  }
};

}  // namespace detail

/// Everything a suite needs for one group.
struct SuiteContext {
  GroupAnalysis& analysis;
  std::string expr;
  const SuiteConfig& cfg;
  ReplayCache replay;

  const Group& group() const { return analysis.group(); }

  detail::Selection sample(const std::string& tag, std::vector<std::size_t> items) const {
    return detail::select(std::move(items), cfg.sample_cap, cfg.seed ^ detail::fnv1a(expr + "|" + tag));
  }

  bool wfsqn(std::size_t i, const Formation& f) { return wfsqn_in(analysis, i, f); }
  static bool wfsqn_in(GroupAnalysis& a, std::size_t i, const Formation& f) {
    return a.memo("wfsqn|" + f.tag(), i, [&] {
      return embedding_predicate(a, a.lattice()[i], EmbeddingKind::WeaklyFsQuasinormal, &f).holds;
    });
  }
  bool supplemented(std::size_t i, const ClassSpec& c) {
    return analysis.memo("supp|" + c.to_string(), i, [&] { return has_supplement(analysis, analysis.lattice()[i], c).holds; });
  }
  bool member(const std::string& formation_tag) { return analysis.member(formation(formation_tag)); }
};

/// Per-subgroup condition of the third-section statements: weakly
/// (U_p)_s-quasinormal in G, or a supplement in the given class.
struct ConditionCheck {
  bool ok = true;
  std::size_t checked = 0;
  Json failing = Json::array();
};

inline ConditionCheck check_condition(SuiteContext& ctx, const std::vector<std::size_t>& subs, unsigned p,
                                      const ClassSpec& supplement_class) {
  ConditionCheck c;
  const Formation up = formation("U_p:" + std::to_string(p));
  for (std::size_t i : subs) {
    ++c.checked;
    if (ctx.wfsqn(i, up) || ctx.supplemented(i, supplement_class)) continue;
    c.ok = false;
    c.failing.push_back(detail::describe(ctx.group(), ctx.analysis.lattice()[i]));
  }
  return c;
}

// ---------------------------------------------------------------------------
// Theorem registry

struct TheoremSpec {
  std::string id;
  std::string shape;
  std::string statement;
  std::string vacuity;
  std::function<std::vector<Json>(SuiteContext&)> instances;
  std::function<InstanceRecord(SuiteContext&, const Json&)> evaluate;
};

namespace suites {

using detail::Selection;
using detail::Tally;

inline std::vector<Json> per_prime(SuiteContext& ctx) {
  std::vector<Json> out;
  for (unsigned p : ctx.group().primes()) out.push_back({{"p", p}});
  return out;
}

inline std::vector<Json> per_formation(SuiteContext& ctx) {
  std::vector<Json> out;
  for (const auto& f : detail::lemma_formations(ctx.group())) out.push_back({{"formation", f.tag()}});
  return out;
}

inline std::vector<Json> single(SuiteContext&) { return {Json::object()}; }

inline std::vector<std::vector<unsigned>> nonempty_subsets(const std::vector<unsigned>& primes) {
  std::vector<std::vector<unsigned>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << primes.size()); ++mask) {
    std::vector<unsigned> s;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask >> i & 1) s.push_back(primes[i]);
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<std::size_t> normal_list(SuiteContext& ctx) { return ctx.analysis.normal_indices(); }

// L2.1(1): Z_F(G)N/N <= Z_F(G/N).
inline InstanceRecord hypercentre_quotient(SuiteContext& ctx, const Json& params) {
  auto& a = ctx.analysis;
  const Formation f = formation(params.at("formation"));
  const Subgroup& z = a.hypercentre(f);
  Tally t;
  auto sel = ctx.sample("N", normal_list(ctx));
  t.note("N", sel);
  for (std::size_t ni : sel.items) {
    const Subgroup& n = a.lattice()[ni];
    const Subgroup& pre = a.hypercentre_preimage(n, f);
    t.add(f.saturated, z.is_subgroup_of(pre), [&] { return Json{{"N", detail::describe(a.group(), n)}}; });
    if (!n.is_trivial() && !n.is_whole() && !z.is_subgroup_of(n)) t.nontrivial = true;
  }
  return t.finish();
}

// L2.1(2): Z_F(G) ∩ H <= Z_F(H).
inline InstanceRecord hypercentre_subgroup(SuiteContext& ctx, const Json& params) {
  auto& a = ctx.analysis;
  const Formation f = formation(params.at("formation"));
  const Subgroup& z = a.hypercentre(f);
  Tally t;
  auto sel = ctx.sample("H", detail::iota(a.lattice().size()));
  t.note("H", sel);
  for (std::size_t hi : sel.items) {
    const Subgroup& h = a.lattice()[hi];
    Subgroup meet = intersection(z, h);
    bool ok = true;
    if (!meet.is_trivial()) {
      auto sc = a.subgroup_context(h);
      ok = sc.restriction.lower(meet).is_subgroup_of(sc.analysis->hypercentre(f));
      if (!h.is_whole()) t.nontrivial = true;
    }
    t.add(f.saturated && f.s_closed, ok, [&] { return Json{{"H", detail::describe(a.group(), h)}}; });
  }
  return t.finish();
}

// L2.2(1): S-quasinormal implies subnormal.
inline InstanceRecord sqn_subnormal(SuiteContext& ctx, const Json&) {
  auto& a = ctx.analysis;
  Tally t;
  for (std::size_t hi : a.sqn_indices()) {
    const Subgroup& h = a.lattice()[hi];
    t.add(true, is_subnormal(a.group(), h), [&] { return Json{{"H", detail::describe(a.group(), h)}}; });
    if (!a.is_normal_at(hi)) t.nontrivial = true;
  }
  return t.finish();
}

// L2.2(2): H S-quasinormal implies HN/N S-quasinormal in G/N.
inline InstanceRecord sqn_quotient(SuiteContext& ctx, const Json&) {
  auto& a = ctx.analysis;
  Tally t;
  auto sel = ctx.sample("N", normal_list(ctx));
  t.note("N", sel);
  for (std::size_t ni : sel.items) {
    const Subgroup& n = a.lattice()[ni];
    auto qc = a.quotient_context(n);
    for (std::size_t hi : a.sqn_indices()) {
      const Subgroup& h = a.lattice()[hi];
      std::size_t qi = qc.analysis->index_of(qc.map.push_forward(h));
      t.add(true, qc.analysis->is_sqn_at(qi), [&] {
        return Json{{"H", detail::describe(a.group(), h)}, {"N", detail::describe(a.group(), n)}};
      });
      if (!n.is_trivial() && !qc.analysis->is_normal_at(qi)) t.nontrivial = true;
    }
  }
  return t.finish();
}

// L2.2(3): for N <= H, H/N S-quasinormal in G/N iff H S-quasinormal in G.
inline InstanceRecord sqn_correspondence(SuiteContext& ctx, const Json&) {
  auto& a = ctx.analysis;
  Tally t;
  auto sel = ctx.sample("N", normal_list(ctx));
  t.note("N", sel);
  for (std::size_t ni : sel.items) {
    const Subgroup& n = a.lattice()[ni];
    auto qc = a.quotient_context(n);
    for (std::size_t hi = 0; hi < a.lattice().size(); ++hi) {
      const Subgroup& h = a.lattice()[hi];
      if (!n.is_subgroup_of(h)) continue;
      std::size_t qi = qc.analysis->index_of(qc.map.push_forward(h));
      bool above = qc.analysis->is_sqn_at(qi), below = a.is_sqn_at(hi);
      t.add(true, above == below, [&] {
        return Json{{"H", detail::describe(a.group(), h)}, {"N", detail::describe(a.group(), n)}};
      });
      if (!n.is_trivial() && below && !a.is_normal_at(hi)) t.nontrivial = true;
    }
  }
  return t.finish();
}

// L2.2(4): H S-quasinormal in G implies H∩K S-quasinormal in K.
inline InstanceRecord sqn_intersection_subgroup(SuiteContext& ctx, const Json&) {
  auto& a = ctx.analysis;
  Tally t;
  auto sel = ctx.sample("K", detail::iota(a.lattice().size()));
  t.note("K", sel);
  for (std::size_t ki : sel.items) {
    const Subgroup& k = a.lattice()[ki];
    auto sc = a.subgroup_context(k);
    for (std::size_t hi : a.sqn_indices()) {
      const Subgroup& h = a.lattice()[hi];
      std::size_t li = sc.analysis->index_of(sc.restriction.lower(intersection(h, k)));
      t.add(true, sc.analysis->is_sqn_at(li), [&] {
        return Json{{"H", detail::describe(a.group(), h)}, {"K", detail::describe(a.group(), k)}};
      });
      if (!k.is_whole() && !sc.analysis->is_normal_at(li)) t.nontrivial = true;
    }
  }
  return t.finish();
}

// L2.2(5): H S-quasinormal implies H/H_G nilpotent.
inline InstanceRecord sqn_core_quotient(SuiteContext& ctx, const Json&) {
  auto& a = ctx.analysis;
  Tally t;
  for (std::size_t hi : a.sqn_indices()) {
    const Subgroup& h = a.lattice()[hi];
    const Subgroup& core = a.core(h);
    auto r = restrict_to(a.group(), h);
    bool nil = is_nilpotent(quotient(r.group, r.lower(core)).target());
    t.add(true, nil, [&] { return Json{{"H", detail::describe(a.group(), h)}}; });
    if (!(core == h)) t.nontrivial = true;
  }
  return t.finish();
}

// L2.2(6): for a p-subgroup H, S-quasinormal iff O^p(G) <= N_G(H).
inline InstanceRecord sqn_prime_power_criterion(SuiteContext& ctx, const Json&) {
  auto& a = ctx.analysis;
  const Group& g = a.group();
  Tally t;
  std::map<unsigned, Subgroup> upper;
  for (unsigned p : g.primes()) upper.emplace(p, o_upper_p(g, a.normals(), p));
  for (std::size_t hi = 1; hi < a.lattice().size(); ++hi) {
    const Subgroup& h = a.lattice()[hi];
    auto primes = prime_divisors(h.order());
    if (primes.size() != 1) continue;
    bool lhs = a.is_sqn_at(hi);
    bool rhs = s_quasinormal_oracle_p(g, h, upper.at(primes[0]));
    t.add(true, lhs == rhs, [&] { return Json{{"H", detail::describe(g, h)}, {"sqn", lhs}, {"criterion", rhs}}; });
    if (lhs && !a.is_normal_at(hi)) t.nontrivial = true;
  }
  return t.finish();
}

// L2.2(7): intersections of S-quasinormal subgroups are S-quasinormal.
inline InstanceRecord sqn_meet(SuiteContext& ctx, const Json&) {
  auto& a = ctx.analysis;
  Tally t;
  const auto& sqn = a.sqn_indices();
  auto sel = ctx.sample("K", sqn);
  t.note("K", sel);
  for (std::size_t ki : sel.items)
    for (std::size_t hi : sqn) {
      if (hi > ki && !sel.sampled) break;  // symmetric; each unordered pair once
      const Subgroup &h = a.lattice()[hi], &k = a.lattice()[ki];
      std::size_t mi = a.index_of(intersection(h, k));
      t.add(true, a.is_sqn_at(mi), [&] {
        return Json{{"H", detail::describe(a.group(), h)}, {"K", detail::describe(a.group(), k)}};
      });
      if (!a.is_normal_at(mi)) t.nontrivial = true;
    }
  return t.finish();
}

// L2.3(1): H weakly F_s-quasinormal and (|H|,|N|)=1 imply HN/N weakly
// F_s-quasinormal in G/N.
inline InstanceRecord wfsqn_quotient(SuiteContext& ctx, const Json& params) {
  auto& a = ctx.analysis;
  const Formation f = formation(params.at("formation"));
  Tally t;
  auto sel = ctx.sample("N", normal_list(ctx));
  t.note("N", sel);
  for (std::size_t ni : sel.items) {
    const Subgroup& n = a.lattice()[ni];
    if (n.is_trivial()) continue;
    std::unique_ptr<GroupAnalysis::QuotientContext> qc;
    for (std::size_t hi = 0; hi < a.lattice().size(); ++hi) {
      const Subgroup& h = a.lattice()[hi];
      if (std::gcd(h.order(), n.order()) != 1) continue;
      if (!ctx.wfsqn(hi, f)) {
        t.add(false, true);
        continue;
      }
      if (!qc) qc = std::make_unique<GroupAnalysis::QuotientContext>(a.quotient_context(n));
      std::size_t qi = qc->analysis->index_of(qc->map.push_forward(h));
      t.add(true, SuiteContext::wfsqn_in(*qc->analysis, qi, f), [&] {
        return Json{{"H", detail::describe(a.group(), h)}, {"N", detail::describe(a.group(), n)}};
      });
      if (!h.is_trivial() && !a.is_sqn_at(hi)) t.nontrivial = true;
    }
  }
  return t.finish();
}

// L2.3(2): for N <= H, H/N weakly F_s-quasinormal in G/N iff H weakly
// F_s-quasinormal in G.
inline InstanceRecord wfsqn_correspondence(SuiteContext& ctx, const Json& params) {
  auto& a = ctx.analysis;
  const Formation f = formation(params.at("formation"));
  Tally t;
  auto sel = ctx.sample("N", normal_list(ctx));
  t.note("N", sel);
  for (std::size_t ni : sel.items) {
    const Subgroup& n = a.lattice()[ni];
    auto qc = a.quotient_context(n);
    for (std::size_t hi = 0; hi < a.lattice().size(); ++hi) {
      const Subgroup& h = a.lattice()[hi];
      if (!n.is_subgroup_of(h)) continue;
      std::size_t qi = qc.analysis->index_of(qc.map.push_forward(h));
      bool above = SuiteContext::wfsqn_in(*qc.analysis, qi, f), below = ctx.wfsqn(hi, f);
      t.add(true, above == below, [&] {
        return Json{{"H", detail::describe(a.group(), h)}, {"N", detail::describe(a.group(), n)},
                    {"in_quotient", above}, {"in_group", below}};
      });
      if (!n.is_trivial() && below && !a.is_sqn_at(hi)) t.nontrivial = true;
    }
  }
  return t.finish();
}

// L2.3(3): F S-closed, H weakly F_s-quasinormal in G, H <= K imply H weakly
// F_s-quasinormal in K.
inline InstanceRecord wfsqn_subgroup(SuiteContext& ctx, const Json& params) {
  auto& a = ctx.analysis;
  const Formation f = formation(params.at("formation"));
  Tally t;
  auto sel = ctx.sample("K", detail::iota(a.lattice().size()));
  t.note("K", sel);
  for (std::size_t ki : sel.items) {
    const Subgroup& k = a.lattice()[ki];
    std::unique_ptr<GroupAnalysis::SubContext> sc;
    for (std::size_t hi = 0; hi < a.lattice().size(); ++hi) {
      const Subgroup& h = a.lattice()[hi];
      if (h.order() > k.order()) break;
      if (!h.is_subgroup_of(k)) continue;
      if (!ctx.wfsqn(hi, f)) {
        t.add(false, true);
        continue;
      }
      if (!sc) sc = std::make_unique<GroupAnalysis::SubContext>(a.subgroup_context(k));
      std::size_t li = sc->analysis->index_of(sc->restriction.lower(h));
      t.add(f.s_closed, SuiteContext::wfsqn_in(*sc->analysis, li, f), [&] {
        return Json{{"H", detail::describe(a.group(), h)}, {"K", detail::describe(a.group(), k)}};
      });
      if (!k.is_whole() && !a.is_sqn_at(hi)) t.nontrivial = true;
    }
  }
  return t.finish();
}

inline std::vector<Json> pi_and_prime(SuiteContext& ctx) {
  std::vector<Json> out;
  auto primes = ctx.group().primes();
  for (unsigned p : primes) {
    std::vector<unsigned> rest;
    for (unsigned q : primes)
      if (q != p) rest.push_back(q);
    for (auto& pi : nonempty_subsets(rest)) out.push_back({{"pi", pi}, {"p", p}});
  }
  return out;
}

/// Hall π-subgroups exist and form one conjugacy class, read off the lattice.
inline bool c_pi_from_lattice(GroupAnalysis& a, const std::vector<unsigned>& pi, std::size_t* count = nullptr) {
  auto halls = hall_subgroups(a.group(), a.lattice(), pi);
  if (count) *count = halls.size();
  if (halls.empty()) return false;
  return a.group().order() / normalizer(a.group(), halls[0]).order() == halls.size();
}

// L2.4: G in C_π, p not in π, P a nontrivial p-subgroup whose maximal
// subgroups all have π-closed supplements imply G π-closed.
inline InstanceRecord pi_closed_supplements(SuiteContext& ctx, const Json& params) {
  auto& a = ctx.analysis;
  const Group& g = a.group();
  const auto pi = params.at("pi").get<std::vector<unsigned>>();
  const unsigned p = params.at("p");
  ClassSpec closed;
  closed.tag = ClassTag::PiClosed;
  closed.pi = pi;
  const bool cpi = c_pi_from_lattice(a, pi);
  const bool concl = is_pi_closed(g, pi);
  Tally t;
  for (std::size_t pi_idx = 1; pi_idx < a.lattice().size(); ++pi_idx) {
    const Subgroup& pp = a.lattice()[pi_idx];
    if (!is_power_of(pp.order(), p)) continue;
    bool all = cpi;
    for (std::size_t mi : maximal_subgroup_indices(a.lattice(), pp)) {
      if (!all) break;
      all = ctx.supplemented(mi, closed);
    }
    t.add(all, concl, [&] { return Json{{"P", detail::describe(g, pp)}}; });
    if (all && pp.order() > p) t.nontrivial = true;
  }
  auto r = t.finish();
  r.witnesses["C_pi"] = cpi;
  return r;
}

// L2.5(1): (|G|,p-1)=1 and a cyclic Sylow p-subgroup imply p-nilpotence.
inline InstanceRecord cyclic_sylow(SuiteContext& ctx, const Json& params) {
  auto& a = ctx.analysis;
  const unsigned p = params.at("p");
  const Subgroup& pp = a.sylows(p).front();
  InstanceRecord r;
  bool gcd_ok = detail::coprime_to_p_minus_1(a.group().order(), p);
  bool cyclic = detail::is_cyclic_subgroup(a.group(), pp);
  r.hypothesis = gcd_ok && cyclic;
  r.conclusion = ctx.member("N_p:" + std::to_string(p));
  r.nontrivial = r.hypothesis && !is_normal(a.group(), pp);
  r.witnesses = {{"gcd", gcd_ok}, {"sylow", detail::describe(a.group(), pp)}, {"cyclic", cyclic}};
  return r;
}

// L2.5(2): N normal with |N|_p <= p, G/N p-nilpotent and (|G|,p-1)=1 imply
// p-nilpotence.
inline InstanceRecord small_normal_p_part(SuiteContext& ctx, const Json& params) {
  auto& a = ctx.analysis;
  const Group& g = a.group();
  const unsigned p = params.at("p");
  const bool gcd_ok = detail::coprime_to_p_minus_1(g.order(), p);
  const bool concl = ctx.member("N_p:" + std::to_string(p));
  Tally t;
  for (std::size_t ni : a.normal_indices()) {
    const Subgroup& n = a.lattice()[ni];
    if (p_part(n.order(), p) > p) {
      t.add(false, true);
      continue;
    }
    bool hyp = gcd_ok && is_p_nilpotent(quotient(g, n).target(), p);
    t.add(hyp, concl, [&] { return Json{{"N", detail::describe(g, n)}}; });
    if (hyp && p_part(n.order(), p) == p && !n.is_whole()) t.nontrivial = true;
  }
  auto r = t.finish();
  r.witnesses["gcd"] = gcd_ok;
  return r;
}

inline std::vector<Json> odd_pi(SuiteContext& ctx) {
  std::vector<unsigned> odd;
  for (unsigned p : ctx.group().primes())
    if (p != 2) odd.push_back(p);
  std::vector<Json> out;
  for (auto& pi : nonempty_subsets(odd)) out.push_back({{"pi", pi}});
  return out;
}

// L2.6: if a Hall π-subgroup exists and 2 is not in π, all Hall π-subgroups
// are conjugate.
inline InstanceRecord odd_hall_conjugacy(SuiteContext& ctx, const Json& params) {
  auto& a = ctx.analysis;
  const auto pi = params.at("pi").get<std::vector<unsigned>>();
  std::size_t count = 0;
  bool conj = c_pi_from_lattice(a, pi, &count);
  InstanceRecord r;
  r.hypothesis = count > 0 && std::find(pi.begin(), pi.end(), 2u) == pi.end();
  r.conclusion = conj;
  r.nontrivial = r.hypothesis && count > 1;
  r.witnesses = {{"hall_subgroups", count}};
  return r;
}

inline std::vector<Json> lifting_formations(SuiteContext& ctx) {
  std::vector<Json> out{{{"formation", "U"}}};
  for (unsigned p : ctx.group().primes()) out.push_back({{"formation", "U_p:" + std::to_string(p)}});
  return out;
}

// L2.7: F saturated containing U, N normal cyclic with G/N in F imply G in F.
inline InstanceRecord cyclic_normal_lifting(SuiteContext& ctx, const Json& params) {
  auto& a = ctx.analysis;
  const Group& g = a.group();
  const Formation f = formation(params.at("formation"));
  const bool concl = a.member(f);
  Tally t;
  for (std::size_t ni : a.normal_indices()) {
    const Subgroup& n = a.lattice()[ni];
    if (!detail::is_cyclic_subgroup(g, n)) {
      t.add(false, true);
      continue;
    }
    bool hyp = f.saturated && f.contains_U && f.member(quotient(g, n).target());
    t.add(hyp, concl, [&] { return Json{{"N", detail::describe(g, n)}}; });
    if (hyp && !n.is_trivial() && !n.is_whole()) t.nontrivial = true;
  }
  return t.finish();
}

// The p-nilpotence criteria of the third section.
enum class SylowCondition { Maximal, SmallCyclic };

inline std::vector<std::size_t> condition_subgroups(SuiteContext& ctx, const Subgroup& pp, unsigned p,
                                                    SylowCondition kind) {
  const auto& lattice = ctx.analysis.lattice();
  return kind == SylowCondition::Maximal ? maximal_subgroup_indices(lattice, pp)
                                         : detail::small_cyclic_subgroups(ctx.group(), lattice, pp, p);
}

/// L3.1, L3.3 and L3.6, on a Sylow p-subgroup of G.
inline InstanceRecord p_nilpotence_criterion(SuiteContext& ctx, const Json& params, SylowCondition kind,
                                             bool normalizer_form) {
  auto& a = ctx.analysis;
  const Group& g = a.group();
  const unsigned p = params.at("p");
  const Subgroup& pp = a.sylows(p).front();
  ClassSpec pnil;
  pnil.tag = ClassTag::PNilpotent;
  pnil.p = p;
  InstanceRecord r;
  auto cond = check_condition(ctx, condition_subgroups(ctx, pp, p, kind), p, pnil);
  bool side;
  if (normalizer_form) {
    side = is_p_nilpotent(restrict_to(g, normalizer(g, pp)).group, p);
    r.witnesses["normalizer_p_nilpotent"] = side;
  } else {
    side = detail::coprime_to_p_minus_1(g.order(), p);
    r.witnesses["gcd"] = side;
  }
  r.hypothesis = side && cond.ok;
  r.conclusion = ctx.member("N_p:" + std::to_string(p));
  r.nontrivial = r.hypothesis && pp.order() > p && !is_normal(g, pp);
  r.witnesses["sylow"] = detail::describe(g, pp);
  r.witnesses["checked"] = cond.checked;
  if (!cond.ok) r.witnesses["failing"] = cond.failing;
  return r;
}

/// T3.2, T3.4 and T3.7: the same criteria for a Sylow p-subgroup of a normal
/// E with G/E p-nilpotent, embeddings still evaluated in G.
inline InstanceRecord relative_p_nilpotence(SuiteContext& ctx, const Json& params, SylowCondition kind,
                                            bool normalizer_form) {
  auto& a = ctx.analysis;
  const Group& g = a.group();
  const unsigned p = params.at("p");
  ClassSpec pnil;
  pnil.tag = ClassTag::PNilpotent;
  pnil.p = p;
  const bool gcd_ok = detail::coprime_to_p_minus_1(g.order(), p);
  const bool concl = ctx.member("N_p:" + std::to_string(p));
  Tally t;
  auto sel = ctx.sample("E", normal_list(ctx));
  t.note("E", sel);
  for (std::size_t ei : sel.items) {
    const Subgroup& e = a.lattice()[ei];
    if (!is_p_nilpotent(quotient(g, e).target(), p)) {
      t.add(false, true);
      continue;
    }
    const Subgroup& pp = a.lattice()[detail::sylow_of(a.lattice(), e, p)];
    bool side = normalizer_form ? is_p_nilpotent(restrict_to(g, normalizer(g, pp)).group, p) : gcd_ok;
    bool hyp = side && check_condition(ctx, condition_subgroups(ctx, pp, p, kind), p, pnil).ok;
    t.add(hyp, concl, [&] { return Json{{"E", detail::describe(g, e)}}; });
    if (hyp && pp.order() > p && !is_normal(g, pp)) t.nontrivial = true;
  }
  auto r = t.finish();
  if (!normalizer_form) r.witnesses["gcd"] = gcd_ok;
  return r;
}

/// T3.5 (E = G, maximal subgroups) and T3.8 (E ranges over normal subgroups
/// with supersoluble quotient, small cyclic subgroups).
inline InstanceRecord supersolubility(SuiteContext& ctx, const Subgroup& e, SylowCondition kind, Json* failing,
                                      bool* has_noncyclic) {
  auto& a = ctx.analysis;
  const Group& g = a.group();
  InstanceRecord r;
  r.hypothesis = true;
  for (unsigned p : prime_divisors(e.order())) {
    const Subgroup& pp = a.lattice()[detail::sylow_of(a.lattice(), e, p)];
    if (detail::is_cyclic_subgroup(g, pp)) continue;
    *has_noncyclic = true;
    ClassSpec pss;
    pss.tag = ClassTag::PSupersoluble;
    pss.p = p;
    auto cond = check_condition(ctx, condition_subgroups(ctx, pp, p, kind), p, pss);
    if (!cond.ok) {
      r.hypothesis = false;
      if (failing) failing->push_back({{"p", p}, {"sylow", detail::describe(g, pp)}, {"failing", cond.failing}});
    }
  }
  return r;
}

inline InstanceRecord supersoluble_maximal(SuiteContext& ctx, const Json&) {
  auto& a = ctx.analysis;
  Json failing = Json::array();
  bool noncyclic = false;
  auto r = supersolubility(ctx, Subgroup::whole(a.group()), SylowCondition::Maximal, &failing, &noncyclic);
  r.conclusion = ctx.member("U");
  r.nontrivial = r.hypothesis && noncyclic;
  r.witnesses = {{"noncyclic_sylow", noncyclic}};
  if (!failing.empty()) r.witnesses["failing"] = failing;
  return r;
}

inline InstanceRecord supersoluble_relative(SuiteContext& ctx, const Json&) {
  auto& a = ctx.analysis;
  const Group& g = a.group();
  const bool concl = ctx.member("U");
  Tally t;
  auto sel = ctx.sample("E", normal_list(ctx));
  t.note("E", sel);
  for (std::size_t ei : sel.items) {
    const Subgroup& e = a.lattice()[ei];
    if (!is_supersoluble(quotient(g, e).target())) {
      t.add(false, true);
      continue;
    }
    bool noncyclic = false;
    bool hyp = supersolubility(ctx, e, SylowCondition::SmallCyclic, nullptr, &noncyclic).hypothesis;
    t.add(hyp, concl, [&] { return Json{{"E", detail::describe(g, e)}}; });
    if (hyp && noncyclic && !e.is_trivial()) t.nontrivial = true;
  }
  return t.finish();
}

// Section 4: each listed embedding implies weakly F_s-quasinormal, with
// every positive verdict replayed.
inline std::vector<Json> implication_params(SuiteContext& ctx) {
  if (ctx.group().order() > ctx.cfg.implication_max_order) return {};
  return per_formation(ctx);
}

inline InstanceRecord implication(SuiteContext& ctx, const Json& params) {
  static const EmbeddingKind kinds[] = {EmbeddingKind::FsQuasinormal, EmbeddingKind::FQuasinormal,
                                        EmbeddingKind::CNormal,       EmbeddingKind::FnSupplemented,
                                        EmbeddingKind::FhNormal,      EmbeddingKind::FnNormal};
  auto& a = ctx.analysis;
  const Group& g = a.group();
  const Formation f = formation(params.at("formation"));
  Tally t;
  Json positives = Json::object();
  for (std::size_t hi = 0; hi < a.lattice().size(); ++hi) {
    const Subgroup& h = a.lattice()[hi];
    std::optional<EmbeddingVerdict> weak;
    std::string weak_replay;
    for (auto kind : kinds) {
      auto v = embedding_predicate(a, h, kind, &f);
      if (!v.holds) {
        t.add(false, true);
        continue;
      }
      positives[to_tag(kind)] = positives.value(to_tag(kind), 0) + 1;
      if (!weak) {
        weak = embedding_predicate(a, h, EmbeddingKind::WeaklyFsQuasinormal, &f);
        if (weak->holds) weak_replay = replay_witness(g, a.lattice(), h, *weak, &f, &ctx.replay);
      }
      std::string own = replay_witness(g, a.lattice(), h, v, &f, &ctx.replay);
      bool ok = weak->holds && weak_replay.empty() && own.empty();
      t.add(true, ok, [&] {
        return Json{{"H", detail::describe(g, h)},   {"kind", to_tag(kind)},  {"wfsqn", weak->holds},
                    {"wfsqn_replay", weak_replay}, {"replay", own}};
      });
      if (!a.is_sqn_at(hi)) t.nontrivial = true;
    }
  }
  auto r = t.finish();
  r.witnesses["positive"] = positives;
  return r;
}

}  // namespace suites

inline const std::vector<TheoremSpec>& theorem_registry() {
  using namespace suites;
  auto p_nil = [](SylowCondition kind, bool normalizer_form) {
    return [=](SuiteContext& c, const Json& p) { return p_nilpotence_criterion(c, p, kind, normalizer_form); };
  };
  auto rel = [](SylowCondition kind, bool normalizer_form) {
    return [=](SuiteContext& c, const Json& p) { return relative_p_nilpotence(c, p, kind, normalizer_form); };
  };
  static const std::vector<TheoremSpec> specs = {
      {"L2.1a", "(G, F); all normal N", "Z_F(G)N/N <= Z_F(G/N) for saturated F",
       "some proper nontrivial N does not contain Z_F(G)", per_formation, hypercentre_quotient},
      {"L2.1b", "(G, F); all subgroups H", "Z_F(G) ∩ H <= Z_F(H) for S-closed saturated F",
       "Z_F(G) ∩ H nontrivial for some proper H", per_formation, hypercentre_subgroup},
      {"L2.2.1", "G; all S-quasinormal H", "S-quasinormal subgroups are subnormal",
       "some S-quasinormal H is not normal", single, sqn_subnormal},
      {"L2.2.2", "G; normal N and S-quasinormal H", "HN/N is S-quasinormal in G/N",
       "HN/N not normal in G/N for some nontrivial N", single, sqn_quotient},
      {"L2.2.3", "G; normal N <= H", "H/N S-quasinormal in G/N iff H S-quasinormal in G",
       "N nontrivial and H S-quasinormal but not normal", single, sqn_correspondence},
      {"L2.2.4", "G; S-quasinormal H and any K", "H ∩ K is S-quasinormal in K",
       "H ∩ K not normal in a proper K", single, sqn_intersection_subgroup},
      {"L2.2.5", "G; S-quasinormal H", "H/H_G is nilpotent", "H differs from its core", single, sqn_core_quotient},
      {"L2.2.6", "G; p-subgroups H", "H S-quasinormal iff O^p(G) <= N_G(H)",
       "some p-subgroup is S-quasinormal but not normal", single, sqn_prime_power_criterion},
      {"L2.2.7", "G; S-quasinormal H, K", "H ∩ K is S-quasinormal", "H ∩ K not normal", single, sqn_meet},
      {"L2.3.1", "(G, F); normal N, subgroup H with (|H|,|N|)=1",
       "H weakly F_s-quasinormal implies HN/N weakly F_s-quasinormal in G/N",
       "H nontrivial and not S-quasinormal", per_formation, wfsqn_quotient},
      {"L2.3.2", "(G, F); normal N <= H", "H/N weakly F_s-quasinormal in G/N iff H weakly F_s-quasinormal in G",
       "N nontrivial and H weakly F_s-quasinormal but not S-quasinormal", per_formation, wfsqn_correspondence},
      {"L2.3.3", "(G, F); H <= K", "H weakly F_s-quasinormal in G implies the same in K",
       "K proper and H not S-quasinormal", per_formation, wfsqn_subgroup},
      {"L2.4", "(G, π, p); nontrivial p-subgroups P",
       "G in C_π, p not in π, every maximal subgroup of P has a π-closed supplement implies G π-closed",
       "|P| > p", pi_and_prime, pi_closed_supplements},
      {"L2.5.1", "(G, p)", "(|G|,p-1)=1 and cyclic Sylow p-subgroups imply G p-nilpotent",
       "the Sylow p-subgroup is not normal", per_prime, cyclic_sylow},
      {"L2.5.2", "(G, p); normal N", "|N|_p <= p, G/N p-nilpotent, (|G|,p-1)=1 imply G p-nilpotent",
       "|N|_p = p with N proper", per_prime, small_normal_p_part},
      {"L2.6", "(G, π), 2 not in π", "if Hall π-subgroups exist they are conjugate", "more than one Hall π-subgroup",
       odd_pi, odd_hall_conjugacy},
      {"L2.7", "(G, F), F in {U, U_p}; normal cyclic N", "G/N in F implies G in F", "N proper and nontrivial",
       lifting_formations, cyclic_normal_lifting},
      {"L3.1", "(G, p)",
       "(|G|,p-1)=1 and every maximal subgroup of P weakly (U_p)_s-quasinormal or p-nilpotently supplemented "
       "imply G p-nilpotent",
       "P not normal and |P| > p", per_prime, p_nil(SylowCondition::Maximal, false)},
      {"T3.2", "(G, p); normal E with G/E p-nilpotent", "the criterion of L3.1 for a Sylow p-subgroup of E",
       "that Sylow subgroup is not normal in G and has order above p", per_prime,
       rel(SylowCondition::Maximal, false)},
      {"L3.3", "(G, p)", "N_G(P) p-nilpotent and the maximal-subgroup condition imply G p-nilpotent",
       "P not normal and |P| > p", per_prime, p_nil(SylowCondition::Maximal, true)},
      {"T3.4", "(G, p); normal E with G/E p-nilpotent", "the criterion of L3.3 for a Sylow p-subgroup of E",
       "that Sylow subgroup is not normal in G and has order above p", per_prime,
       rel(SylowCondition::Maximal, true)},
      {"T3.5", "G; every non-cyclic Sylow P",
       "maximal subgroups of P weakly (U_p)_s-quasinormal or p-supersolubly supplemented imply G supersoluble",
       "some Sylow subgroup is non-cyclic", single, supersoluble_maximal},
      {"L3.6", "(G, p)",
       "(|G|,p-1)=1 and cyclic subgroups of P of order p (or 4) weakly (U_p)_s-quasinormal or p-nilpotently "
       "supplemented imply G p-nilpotent",
       "P not normal and |P| > p", per_prime, p_nil(SylowCondition::SmallCyclic, false)},
      {"T3.7", "(G, p); normal E with G/E p-nilpotent", "the criterion of L3.6 for a Sylow p-subgroup of E",
       "that Sylow subgroup is not normal in G and has order above p", per_prime,
       rel(SylowCondition::SmallCyclic, false)},
      {"T3.8", "G; normal E with G/E supersoluble",
       "small cyclic subgroups of non-cyclic Sylow subgroups of E weakly (U_p)_s-quasinormal or p-supersolubly "
       "supplemented imply G supersoluble",
       "E nontrivial with a non-cyclic Sylow subgroup", single, supersoluble_relative},
      {"S4.IMPL", "(G, F, H), |G| <= implication bound",
       "fsqn, fqn, cn, fns, fhn and fnn each imply wfsqn; witnesses replay",
       "a positive verdict on a subgroup that is not S-quasinormal", implication_params, implication},
  };
  return specs;
}

inline const TheoremSpec& theorem(const std::string& id) {
  for (const auto& s : theorem_registry())
    if (s.id == id) return s;
  throw Error(ErrorKind::UnknownTag, "unknown theorem id '" + id + "'");
}

/// "all", an exact id, or a family prefix such as "L2.2" or "L2.1".
inline std::vector<std::string> resolve_theorem_ids(const std::string& query) {
  std::vector<std::string> out;
  for (const auto& s : theorem_registry()) {
    const auto& id = s.id;
    bool family = id.size() > query.size() && id.compare(0, query.size(), query) == 0 &&
                  (id[query.size()] == '.' || std::isalpha(static_cast<unsigned char>(id[query.size()])));
    if (query == "all" || id == query || family) out.push_back(id);
  }
  if (out.empty()) throw Error(ErrorKind::UnknownTag, "unknown theorem id '" + query + "'");
  return out;
}

/// Evaluates one instance; cap errors mark it skipped.
inline InstanceRecord evaluate_instance(const TheoremSpec& spec, SuiteContext& ctx, const Json& params) {
  InstanceRecord r;
  try {
    r = spec.evaluate(ctx, params);
  } catch (const Error& e) {
    if (!e.is_cap_error()) throw;
    r = InstanceRecord{};
    r.skipped = e.what();
  }
  r.group = ctx.expr;
  r.params = params;
  return r;
}

inline bool check_hypothesis(const TheoremSpec& spec, SuiteContext& ctx, const Json& params) {
  return evaluate_instance(spec, ctx, params).hypothesis;
}
inline bool check_conclusion(const TheoremSpec& spec, SuiteContext& ctx, const Json& params) {
  return evaluate_instance(spec, ctx, params).conclusion;
}

// ---------------------------------------------------------------------------
// Reports

struct VerificationReport {
  std::string theorem;
  Json config = Json::object();
  std::vector<InstanceRecord> instances;

  std::size_t count_if(bool (*pred)(const InstanceRecord&)) const {
    return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(), pred));
  }
  std::size_t violations() const { return count_if([](const InstanceRecord& r) { return r.violation(); }); }
  std::size_t nontrivial() const {
    return count_if([](const InstanceRecord& r) { return !r.skipped && r.nontrivial; });
  }
  std::size_t hypothesis_true() const {
    return count_if([](const InstanceRecord& r) { return !r.skipped && r.hypothesis; });
  }
  std::size_t skipped() const { return count_if([](const InstanceRecord& r) { return r.skipped.has_value(); }); }
  double skip_rate() const { return instances.empty() ? 0.0 : double(skipped()) / double(instances.size()); }

  void sort() {
    std::stable_sort(instances.begin(), instances.end(), [](const InstanceRecord& a, const InstanceRecord& b) {
      if (a.group != b.group) return a.group < b.group;
      return a.params.dump() < b.params.dump();
    });
  }

  Json to_json() const {
    Json inst = Json::array();
    for (const auto& r : instances) inst.push_back(r.to_json());
    return {{"schema", kReportSchemaVersion},
            {"theorem", theorem},
            {"engine", kEngineVersion},
            {"config", config},
            {"instances", std::move(inst)},
            {"counts",
             {{"instances", instances.size()},
              {"hypothesis_true", hypothesis_true()},
              {"nontrivial", nontrivial()},
              {"skipped", skipped()},
              {"violations", violations()}}},
            {"violations", violations()},
            {"nontrivial", nontrivial()}};
  }
};

struct VacuitySummary {
  std::string theorem;
  std::size_t instances = 0, hypothesis_true = 0, nontrivial = 0;
  bool low_signal = false;
};

inline VacuitySummary vacuity_audit(const VerificationReport& r, std::size_t floor) {
  return {r.theorem, r.instances.size(), r.hypothesis_true(), r.nontrivial(), r.nontrivial() < floor};
}

/// Supplies lattices, e.g. from the on-disk cache. Called from worker threads.
using LatticeProvider = std::function<std::optional<SubgroupLattice>(const Group&)>;

struct VerifyOptions {
  SuiteConfig suite;
  unsigned jobs = 1;
  LatticeProvider lattices;
  Json corpus_description = Json::object();
};

/// Runs the given suites over the corpus. Groups are processed in parallel,
/// each with its own analysis shared by all suites; reports are sorted, so
/// the result does not depend on scheduling.
inline std::vector<VerificationReport> verify(const std::vector<std::string>& ids, const std::vector<CorpusEntry>& corpus,
                                              const VerifyOptions& opt) {
  std::vector<const TheoremSpec*> specs;
  for (const auto& id : ids) specs.push_back(&theorem(id));
  std::vector<std::vector<std::vector<InstanceRecord>>> per_group(corpus.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (std::size_t gi = next++; gi < corpus.size(); gi = next++) {
      try {
        const auto& entry = corpus[gi];
        auto& out = per_group[gi];
        out.resize(specs.size());
        std::unique_ptr<GroupAnalysis> analysis;
        std::optional<std::string> skip;
        try {
          std::optional<SubgroupLattice> lattice;
          if (opt.lattices) lattice = opt.lattices(entry.group);
          if (!lattice) lattice = all_subgroups(entry.group, opt.suite.limits);
          analysis = std::make_unique<GroupAnalysis>(entry.group, std::move(*lattice), opt.suite.limits);
        } catch (const Error& e) {
          if (!e.is_cap_error()) throw;
          skip = e.what();
        }
        for (std::size_t si = 0; si < specs.size(); ++si) {
          if (skip) {
            InstanceRecord r;
            r.group = entry.expr;
            r.skipped = skip;
            out[si].push_back(std::move(r));
            continue;
          }
          SuiteContext ctx{*analysis, entry.expr, opt.suite, {}};
          for (const auto& params : specs[si]->instances(ctx)) out[si].push_back(evaluate_instance(*specs[si], ctx, params));
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, opt.jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  Json config = opt.suite.to_json();
  config["corpus"] = opt.corpus_description;
  config["corpus"]["groups"] = corpus.size();
  std::vector<VerificationReport> reports;
  for (std::size_t si = 0; si < specs.size(); ++si) {
    VerificationReport r;
    r.theorem = specs[si]->id;
    r.config = config;
    r.config["shape"] = specs[si]->shape;
    r.config["vacuity"] = specs[si]->vacuity;
    for (auto& g : per_group)
      for (auto& rec : g[si]) r.instances.push_back(std::move(rec));
    r.sort();
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace fgt
