#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "fgt/error.hpp"
#include "fgt/group.hpp"
#include "fgt/lattice.hpp"
#include "fgt/numtheory.hpp"
#include "fgt/quotient.hpp"
#include "fgt/subgroup.hpp"

namespace fgt {

// ---------------------------------------------------------------------------
// Chief series

struct ChiefFactor {
  Subgroup lower;  // K
  Subgroup upper;  // L
  std::size_t order() const noexcept { return upper.order() / lower.order(); }
};

struct ChiefSeries {
  std::vector<Subgroup> terms;  // ascending, floor first

  std::vector<ChiefFactor> factors() const {
    std::vector<ChiefFactor> out;
    for (std::size_t i = 1; i < terms.size(); ++i) out.push_back({terms[i - 1], terms[i]});
    return out;
  }
  std::vector<std::size_t> factor_orders() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < terms.size(); ++i) out.push_back(terms[i].order() / terms[i - 1].order());
    return out;
  }
};

/// Minimal normal subgroups of G strictly above `current` and inside `ceiling`,
/// in lexicographic member order. `current` must be normal.
inline std::vector<Subgroup> minimal_normal_above(const Group& g, const Subgroup& current, const Subgroup& ceiling,
                                                  const std::vector<std::vector<Elem>>& classes) {
  std::vector<Subgroup> cands;
  for (const auto& cls : classes) {
    Elem x = cls.front();
    if (!ceiling.contains(x) || current.contains(x)) continue;
    ElementSet seed = current.members();
    for (Elem y : cls) seed.set(y);
    Subgroup m = generated_subgroup(g, seed);
    if (std::find(cands.begin(), cands.end(), m) == cands.end()) cands.push_back(std::move(m));
  }
  std::vector<Subgroup> out;
  for (const auto& m : cands) {
    bool minimal = true;
    for (const auto& o : cands)
      if (o.order() < m.order() && o.is_subgroup_of(m)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) { return lex_less(a.members(), b.members()); });
  return out;
}

/// A chief series of G from floor to ceiling (both normal). At each step the
/// lexicographically smallest minimal candidate is taken, or a seeded random one.
inline ChiefSeries chief_series(const Group& g, const Subgroup& floor, const Subgroup& ceiling,
                                std::optional<std::uint64_t> random_seed = std::nullopt) {
  const auto classes = conjugacy_classes(g);
  std::mt19937_64 rng(random_seed.value_or(0));
  ChiefSeries s;
  s.terms.push_back(floor);
  while (!(s.terms.back() == ceiling)) {
    auto cands = minimal_normal_above(g, s.terms.back(), ceiling, classes);
    std::size_t pick = 0;
    if (random_seed && cands.size() > 1) pick = std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng);
    s.terms.push_back(std::move(cands[pick]));
  }
  return s;
}

inline ChiefSeries chief_series(const Group& g) { return chief_series(g, Subgroup::trivial(g), Subgroup::whole(g)); }

// ---------------------------------------------------------------------------
// Group classes

enum class ClassTag { Nilpotent, Soluble, PSoluble, PNilpotent, Supersoluble, PSupersoluble, PiClosed, CPi, SylowTowerSupersoluble };

struct ClassSpec {
  ClassTag tag = ClassTag::Soluble;
  unsigned p = 0;
  std::vector<unsigned> pi;

  std::string to_string() const {
    static const std::map<ClassTag, std::string> names = {
        {ClassTag::Nilpotent, "nilpotent"},         {ClassTag::Soluble, "soluble"},
        {ClassTag::PSoluble, "p_soluble"},          {ClassTag::PNilpotent, "p_nilpotent"},
        {ClassTag::Supersoluble, "supersoluble"},   {ClassTag::PSupersoluble, "p_supersoluble"},
        {ClassTag::PiClosed, "pi_closed"},          {ClassTag::CPi, "C_pi"},
        {ClassTag::SylowTowerSupersoluble, "sylow_tower_supersoluble"}};
    std::string out = names.at(tag);
    if (p) out += ":" + std::to_string(p);
    if (!pi.empty()) {
      out += ":";
      for (std::size_t i = 0; i < pi.size(); ++i) out += (i ? "," : "") + std::to_string(pi[i]);
    }
    return out;
  }
};

namespace detail {

inline std::vector<unsigned> parse_prime_list(const std::string& text) {
  std::vector<unsigned> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty() || !is_prime(v)) throw Error(ErrorKind::UnknownTag, "not a prime: '" + item + "'");
    out.push_back(static_cast<unsigned>(v));
    pos = end + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw Error(ErrorKind::UnknownTag, "empty prime list");
  return out;
}

}  // namespace detail

/// Parses "nilpotent", "p_nilpotent:2", "pi_closed:2,3" and so on.
inline ClassSpec parse_class_spec(const std::string& text) {
  static const std::map<std::string, std::pair<ClassTag, int>> tags = {
      {"nilpotent", {ClassTag::Nilpotent, 0}},      {"soluble", {ClassTag::Soluble, 0}},
      {"p_soluble", {ClassTag::PSoluble, 1}},        {"p_nilpotent", {ClassTag::PNilpotent, 1}},
      {"supersoluble", {ClassTag::Supersoluble, 0}}, {"p_supersoluble", {ClassTag::PSupersoluble, 1}},
      {"pi_closed", {ClassTag::PiClosed, 2}},        {"C_pi", {ClassTag::CPi, 2}},
      {"sylow_tower_supersoluble", {ClassTag::SylowTowerSupersoluble, 0}}};
  std::size_t colon = text.find(':');
  std::string name = text.substr(0, colon);
  auto it = tags.find(name);
  if (it == tags.end()) throw Error(ErrorKind::UnknownTag, "unknown class '" + text + "'");
  ClassSpec spec;
  spec.tag = it->second.first;
  int arity = it->second.second;
  if ((arity == 0) != (colon == std::string::npos))
    throw Error(ErrorKind::UnknownTag, "bad parameters for class '" + text + "'");
  if (arity == 0) return spec;
  auto primes = detail::parse_prime_list(text.substr(colon + 1));
  if (arity == 1) {
    if (primes.size() != 1) throw Error(ErrorKind::UnknownTag, "class '" + name + "' takes one prime");
    spec.p = primes[0];
  } else {
    spec.pi = primes;
  }
  return spec;
}

namespace detail {

/// Elements whose order is a π-number.
inline ElementSet pi_elements(const Group& g, const std::vector<unsigned>& pi) {
  ElementSet s(g.order());
  for (std::size_t a = 0; a < g.order(); ++a)
    if (is_pi_number(g.elem_order(static_cast<Elem>(a)), pi)) s.set(a);
  return s;
}

/// The normal Hall π-subgroup, if any. It exists iff the π-elements form a
/// subgroup of order |G|_π, and is then exactly that set.
inline std::optional<Subgroup> normal_hall(const Group& g, const std::vector<unsigned>& pi) {
  ElementSet s = pi_elements(g, pi);
  if (s.count() != pi_part(g.order(), pi) || !is_subgroup(g, s)) return std::nullopt;
  return Subgroup(std::move(s));
}

inline std::vector<unsigned> complement_primes(const Group& g, unsigned p) {
  std::vector<unsigned> out;
  for (unsigned q : g.primes())
    if (q != p) out.push_back(q);
  return out;
}

}  // namespace detail

inline bool is_soluble(const Group& g) {
  Subgroup h = Subgroup::whole(g);
  while (!h.is_trivial()) {
    Subgroup d = derived_subgroup(g, h);
    if (d == h) return false;
    h = std::move(d);
  }
  return true;
}

inline bool is_nilpotent(const Group& g) {
  for (unsigned p : g.primes())
    if (!detail::normal_hall(g, {p})) return false;
  return true;
}

inline bool is_p_nilpotent(const Group& g, unsigned p) {
  if (g.order() % p) return true;
  auto others = detail::complement_primes(g, p);
  if (others.empty()) return true;
  return detail::normal_hall(g, others).has_value();
}

inline bool is_pi_closed(const Group& g, const std::vector<unsigned>& pi) {
  if (pi_part(g.order(), pi) == 1) return true;
  return detail::normal_hall(g, pi).has_value();
}

inline bool is_supersoluble(const Group& g) {
  for (std::size_t k : chief_series(g).factor_orders())
    if (!is_prime(k)) return false;
  return true;
}

inline bool is_p_supersoluble(const Group& g, unsigned p) {
  if (g.order() % p) return true;
  for (std::size_t k : chief_series(g).factor_orders())
    if (k % p == 0 && k != p) return false;
  return true;
}

inline bool is_p_soluble(const Group& g, unsigned p) {
  if (g.order() % p) return true;
  for (std::size_t k : chief_series(g).factor_orders())
    if (!is_power_of(k, p) && k % p == 0) return false;
  return true;
}

/// Hall π-subgroups exist and are all conjugate.
inline bool is_c_pi(const Group& g, const std::vector<unsigned>& pi, const Limits& limits = {}) {
  if (pi_part(g.order(), pi) == 1) return true;
  if (detail::normal_hall(g, pi)) return true;
  auto lattice = all_subgroups(g, limits);
  auto halls = hall_subgroups(g, lattice, pi);
  if (halls.empty()) return false;
  std::size_t conjugates = g.order() / normalizer(g, halls[0]).order();
  return conjugates == halls.size();
}

inline bool is_sylow_tower_supersoluble(const Group& g) {
  auto primes = g.primes();
  if (primes.empty()) return true;
  auto sylow = detail::normal_hall(g, {primes.back()});
  if (!sylow) return false;
  return is_sylow_tower_supersoluble(quotient(g, *sylow).target());
}

inline bool is_in_class(const Group& g, const ClassSpec& c, const Limits& limits = {}) {
  switch (c.tag) {
    case ClassTag::Nilpotent: return is_nilpotent(g);
    case ClassTag::Soluble: return is_soluble(g);
    case ClassTag::PSoluble: return is_p_soluble(g, c.p);
    case ClassTag::PNilpotent: return is_p_nilpotent(g, c.p);
    case ClassTag::Supersoluble: return is_supersoluble(g);
    case ClassTag::PSupersoluble: return is_p_supersoluble(g, c.p);
    case ClassTag::PiClosed: return is_pi_closed(g, c.pi);
    case ClassTag::CPi: return is_c_pi(g, c.pi, limits);
    case ClassTag::SylowTowerSupersoluble: return is_sylow_tower_supersoluble(g);
  }
  return false;
}

/// Class membership of a subgroup, viewed as a group.
inline bool subgroup_in_class(const Group& g, const Subgroup& h, const ClassSpec& c, const Limits& limits = {}) {
  if (h.is_whole()) return is_in_class(g, c, limits);
  return is_in_class(restrict_to(g, h).group, c, limits);
}

// ---------------------------------------------------------------------------
// Formations

struct Formation {
  std::string name;  // "U", "U_p", "N_p", "N" or a registered extension
  unsigned p = 0;
  std::function<bool(const Group&)> member;
  bool saturated = false;
  bool s_closed = false;
  bool contains_U = false;

  std::string tag() const { return p ? name + ":" + std::to_string(p) : name; }
};

/// Named formation families. A family maps an optional prime to a Formation.
class FormationRegistry {
 public:
  using Factory = std::function<Formation(unsigned p)>;

  static FormationRegistry& instance() {
    static FormationRegistry reg;
    return reg;
  }

  void add(const std::string& name, bool takes_prime, Factory make) {
    if (!make) throw Error(ErrorKind::ConfigError, "formation '" + name + "' has no factory");
    families_[name] = {takes_prime, std::move(make)};
  }

  /// "U", "U_p:3", "N_p:2", "N". "U_3" and "U_3:3" are accepted for "U_p:3",
  /// likewise for N.
  Formation get(const std::string& raw) const {
    const std::string tag = normalize_alias(raw);
    std::size_t colon = tag.find(':');
    std::string name = tag.substr(0, colon);
    auto it = families_.find(name);
    if (it == families_.end()) throw Error(ErrorKind::UnknownTag, "unknown formation '" + tag + "'");
    unsigned p = 0;
    if (it->second.first) {
      if (colon == std::string::npos) throw Error(ErrorKind::UnknownTag, "formation '" + name + "' needs a prime");
      auto primes = detail::parse_prime_list(tag.substr(colon + 1));
      if (primes.size() != 1) throw Error(ErrorKind::UnknownTag, "formation '" + name + "' takes one prime");
      p = primes[0];
    } else if (colon != std::string::npos) {
      throw Error(ErrorKind::UnknownTag, "formation '" + name + "' takes no parameter");
    }
    Formation f = it->second.second(p);
    if (!f.member) throw Error(ErrorKind::ConfigError, "formation '" + tag + "' has no membership predicate");
    f.name = name;
    f.p = p;
    return f;
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : families_) out.push_back(k);
    return out;
  }

 private:
  static std::string normalize_alias(const std::string& tag) {
    if (tag.size() < 3 || (tag[0] != 'U' && tag[0] != 'N') || tag[1] != '_' || !std::isdigit(static_cast<unsigned char>(tag[2])))
      return tag;
    std::size_t colon = tag.find(':');
    std::string prime = tag.substr(2, colon == std::string::npos ? std::string::npos : colon - 2);
    if (colon != std::string::npos && tag.substr(colon + 1) != prime)
      throw Error(ErrorKind::UnknownTag, "formation '" + tag + "' names two different primes");
    return std::string(1, tag[0]) + "_p:" + prime;
  }

  FormationRegistry() {
    add("U", false, [](unsigned) { return Formation{"U", 0, [](const Group& g) { return is_supersoluble(g); }, true, true, true}; });
    add("U_p", true, [](unsigned p) {
      return Formation{"U_p", p, [p](const Group& g) { return is_p_supersoluble(g, p); }, true, true, true};
    });
    add("N_p", true, [](unsigned p) {
      return Formation{"N_p", p, [p](const Group& g) { return is_p_nilpotent(g, p); }, true, true, false};
    });
    add("N", false, [](unsigned) { return Formation{"N", 0, [](const Group& g) { return is_nilpotent(g); }, true, true, false}; });
  }

  std::map<std::string, std::pair<bool, Factory>> families_;
};

inline Formation formation(const std::string& tag) { return FormationRegistry::instance().get(tag); }

// ---------------------------------------------------------------------------
// F-centrality and the F-hypercentre

/// C_G(L/K) = {g : [g, l] in K for all l in L}; generators of L suffice.
inline Subgroup factor_centralizer(const Group& g, const ChiefFactor& f) {
  const auto gens = subgroup_generators(g, f.upper);
  ElementSet c(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem l : gens) {
      Elem comm = g.mul(g.conj(l, static_cast<Elem>(x)), g.inv(l));
      if (!f.lower.contains(comm)) {
        ok = false;
        break;
      }
    }
    if (ok) c.set(x);
  }
  return Subgroup(std::move(c));
}

/// (L/K) x| (G/C_G(L/K)) with (a1,b1)(a2,b2) = (a1 * b1(a2), b1 b2), where
/// b acts by conjugation l -> r l r^-1. Element (a, b) has index a + |A| b.
inline Group factor_semidirect(const Group& g, const ChiefFactor& f, const Limits& limits = {}) {
  Restriction r = restrict_to(g, f.upper);
  QuotientMap qa = quotient(r.group, r.lower(f.lower));
  QuotientMap qb = quotient(g, factor_centralizer(g, f));
  const Group& a = qa.target();
  const Group& b = qb.target();
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > limits.semidirect_cap)
    throw Error(ErrorKind::OrderCapExceeded,
                "semidirect product of order " + std::to_string(n) + " exceeds cap " + std::to_string(limits.semidirect_cap));
  std::vector<Elem> act(nb * na);
  for (std::size_t j = 0; j < nb; ++j) {
    Elem rep = qb.coset_reps()[j];
    for (std::size_t i = 0; i < na; ++i) {
      Elem l = r.to_parent[qa.coset_reps()[i]];
      Elem image = g.mul(g.mul(rep, l), g.inv(rep));
      act[j * na + i] = qa.project(r.to_local[image]);
    }
  }
  std::vector<Elem> flat(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t a1 = x % na, b1 = x / na;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a2 = y % na, b2 = y / na;
      const std::size_t aa = a.mul(static_cast<Elem>(a1), act[b1 * na + a2]);
      const std::size_t bb = b.mul(static_cast<Elem>(b1), static_cast<Elem>(b2));
      flat[x * n + y] = static_cast<Elem>(aa + na * bb);
    }
  }
  return Group::trusted(std::move(flat), n, {});
}

inline bool is_f_central(const Group& g, const ChiefFactor& f, const Formation& form, const Limits& limits = {}) {
  return form.member(factor_semidirect(g, f, limits));
}

/// Every chief factor of G below N is F-central (true for N = 1).
inline bool is_f_hypercentral(const Group& g, const Subgroup& n, const Formation& form, const Limits& limits = {},
                              std::optional<std::uint64_t> random_seed = std::nullopt) {
  if (n.is_trivial()) return true;
  for (const auto& f : chief_series(g, Subgroup::trivial(g), n, random_seed).factors())
    if (!is_f_central(g, f, form, limits)) return false;
  return true;
}

/// Z_F(G) as the join of all F-hypercentral normal subgroups. Normal
/// subgroups are visited in ascending order; N is hypercentral exactly when
/// some maximal normal M < N is hypercentral and N/M is F-central, and by
/// Jordan-Holder any single such M decides it.
/// `known_normals`, when given, must list every normal subgroup in ascending order.
inline Subgroup f_hypercentre(const Group& g, const Formation& form, const Limits& limits = {},
                              const std::vector<Subgroup>* known_normals = nullptr) {
  const auto normals = known_normals ? *known_normals : normal_subgroups(g);
  std::vector<char> hyper(normals.size(), 0);
  Subgroup acc = Subgroup::trivial(g);
  hyper[0] = 1;
  for (std::size_t i = 1; i < normals.size(); ++i) {
    std::size_t below = 0;
    for (std::size_t j = i; j-- > 0;)
      if (normals[j].order() < normals[i].order() && normals[j].is_subgroup_of(normals[i])) {
        below = j;
        break;
      }
    if (!hyper[below]) continue;
    if (is_f_central(g, {normals[below], normals[i]}, form, limits)) {
      hyper[i] = 1;
      acc = join(g, acc, normals[i]);
    }
  }
  return acc;
}

/// Z_F(G) by greedy ascent: absorb F-central minimal normal subgroups of
/// G/Z until none is left. Restricted to saturated formations.
inline Subgroup f_hypercentre_greedy(const Group& g, const Formation& form, const Limits& limits = {}) {
  if (!form.saturated)
    throw Error(ErrorKind::ConfigError, "greedy hypercentre requires a saturated formation (" + form.tag() + ")");
  const auto classes = conjugacy_classes(g);
  const Subgroup whole = Subgroup::whole(g);
  Subgroup z = Subgroup::trivial(g);
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto& m : minimal_normal_above(g, z, whole, classes)) {
      if (is_f_central(g, {z, m}, form, limits)) {
        z = std::move(m);
        grew = true;
        break;
      }
    }
  }
  return z;
}

/// G^F: the intersection of all normal N with G/N in F, checked to lie in F.
inline Subgroup f_residual(const Group& g, const Formation& form) {
  ElementSet acc = ElementSet::full(g.order());
  for (const auto& n : normal_subgroups(g))
    if (form.member(quotient(g, n).target())) acc &= n.members();
  Subgroup res(std::move(acc));
  if (!form.member(quotient(g, res).target()))
    throw Error(ErrorKind::ResidualNotWitnessed, "G/G^F is not in " + form.tag());
  return res;
}

}  // namespace fgt
