#pragma once

#include <cstddef>
#include <map>
#include <unordered_map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fgt/analysis.hpp"
#include "fgt/error.hpp"
#include "fgt/formation.hpp"
#include "fgt/lattice.hpp"
#include "fgt/named.hpp"
#include "fgt/quotient.hpp"
#include "fgt/subgroup.hpp"

namespace fgt {

// ---------------------------------------------------------------------------
// Quasinormality, computed directly from the lattice

inline bool is_quasinormal(const Group& g, const SubgroupLattice& lattice, const Subgroup& h) {
  for (const auto& k : lattice)
    if (!permutes(g, h, k)) return false;
  return true;
}

inline bool is_s_quasinormal(const Group& g, const SubgroupLattice& lattice, const Subgroup& h) {
  for (unsigned p : g.primes())
    for (const auto& s : sylow_subgroups(g, lattice, p))
      if (!permutes(g, h, s)) return false;
  return true;
}

/// For a p-subgroup H: O^p(G) <= N_G(H).
inline bool s_quasinormal_oracle_p(const Group& g, const Subgroup& h) {
  auto primes = prime_divisors(h.order());
  if (primes.size() > 1) throw Error(ErrorKind::ConfigError, "subgroup is not a p-group");
  if (primes.empty()) return true;
  return named_subgroup(g, NamedTag::UpperP, primes[0]).is_subgroup_of(normalizer(g, h));
}

/// Same test with O^p(G) supplied by the caller.
inline bool s_quasinormal_oracle_p(const Group& g, const Subgroup& h, const Subgroup& o_upper_p) {
  return o_upper_p.is_subgroup_of(normalizer(g, h));
}

// ---------------------------------------------------------------------------
// Embedding predicates

enum class EmbeddingKind {
  Quasinormal,
  SQuasinormal,
  WeaklyFsQuasinormal,
  FsQuasinormal,
  FQuasinormal,
  CNormal,
  FnSupplemented,
  FhNormal,
  FnNormal
};

inline const char* to_tag(EmbeddingKind k) {
  switch (k) {
    case EmbeddingKind::Quasinormal: return "qn";
    case EmbeddingKind::SQuasinormal: return "sqn";
    case EmbeddingKind::WeaklyFsQuasinormal: return "wfsqn";
    case EmbeddingKind::FsQuasinormal: return "fsqn";
    case EmbeddingKind::FQuasinormal: return "fqn";
    case EmbeddingKind::CNormal: return "cn";
    case EmbeddingKind::FnSupplemented: return "fns";
    case EmbeddingKind::FhNormal: return "fhn";
    case EmbeddingKind::FnNormal: return "fnn";
  }
  return "?";
}

inline EmbeddingKind parse_embedding_kind(const std::string& tag) {
  for (auto k : {EmbeddingKind::Quasinormal, EmbeddingKind::SQuasinormal, EmbeddingKind::WeaklyFsQuasinormal,
                 EmbeddingKind::FsQuasinormal, EmbeddingKind::FQuasinormal, EmbeddingKind::CNormal,
                 EmbeddingKind::FnSupplemented, EmbeddingKind::FhNormal, EmbeddingKind::FnNormal})
    if (tag == to_tag(k)) return k;
  throw Error(ErrorKind::UnknownTag, "unknown predicate '" + tag + "'");
}

/// Kinds built from a subgroup T and the hypercentre containment.
inline bool uses_formation(EmbeddingKind k) {
  return k != EmbeddingKind::Quasinormal && k != EmbeddingKind::SQuasinormal && k != EmbeddingKind::CNormal;
}

/// The subgroup T and the certificate (H∩T)H_G/H_G <= Z_F(G/H_G), both sides
/// as bit vectors over the elements of G/H_G.
struct EmbeddingWitness {
  Subgroup t;
  Subgroup core;
  ElementSet lhs;
  ElementSet zf;
};

struct EmbeddingVerdict {
  bool holds = false;
  std::string kind;
  std::string formation;
  std::optional<EmbeddingWitness> witness;
  std::size_t candidates = 0;
};

namespace detail {

inline bool is_normal_hall(const Group& g, std::size_t order_ht) {
  return std::gcd(order_ht, g.order() / order_ht) == 1;
}

inline EmbeddingWitness make_certificate(const Group& g, const Subgroup& h, const Subgroup& t, const Subgroup& core,
                                         const Subgroup* zf_pre) {
  auto q = quotient(g, core);
  EmbeddingWitness w;
  w.t = t;
  w.core = core;
  w.lhs = q.push_forward(join(g, intersection(h, t), core)).members();
  if (zf_pre) w.zf = q.push_forward(*zf_pre).members();
  return w;
}

}  // namespace detail

/// Evaluates one embedding predicate. T candidates are searched in lattice
/// order and the first witness is returned.
inline EmbeddingVerdict embedding_predicate(GroupAnalysis& a, const Subgroup& h, EmbeddingKind kind,
                                            const Formation* form = nullptr) {
  const Group& g = a.group();
  EmbeddingVerdict v;
  v.kind = to_tag(kind);
  if (uses_formation(kind)) {
    if (!form) throw Error(ErrorKind::ConfigError, std::string("predicate '") + v.kind + "' needs a formation");
    v.formation = form->tag();
  }
  const SubgroupLattice& lattice = a.lattice();
  const std::size_t hi = a.index_of(h);
  if (kind == EmbeddingKind::Quasinormal) {
    v.holds = a.is_qn_at(hi);
    v.candidates = 1;
    return v;
  }
  if (kind == EmbeddingKind::SQuasinormal) {
    v.holds = a.is_sqn_at(hi);
    v.candidates = 1;
    return v;
  }

  const Subgroup& core = a.core(h);
  const Subgroup* zf_pre = form ? &a.hypercentre_preimage(core, *form) : nullptr;
  const std::vector<std::size_t>* cands = nullptr;
  if (kind == EmbeddingKind::WeaklyFsQuasinormal)
    cands = &a.sqn_indices();
  else if (kind == EmbeddingKind::FQuasinormal)
    cands = &a.qn_indices();
  else
    cands = &a.normal_indices();

  for (std::size_t ti : *cands) {
    ++v.candidates;
    const Subgroup& t = lattice[ti];
    const Subgroup meet = intersection(h, t);
    if (kind == EmbeddingKind::CNormal) {
      if (!meet.is_subgroup_of(core)) continue;
    } else if (!meet.is_subgroup_of(*zf_pre)) {
      continue;
    }
    const std::size_t ht_order = h.order() * t.order() / meet.order();
    const bool whole_needed = kind == EmbeddingKind::CNormal || kind == EmbeddingKind::FnSupplemented;
    if (whole_needed) {
      if (ht_order != g.order()) continue;
    } else {
      if (g.order() % ht_order) continue;
      if (kind == EmbeddingKind::FhNormal && !detail::is_normal_hall(g, ht_order)) continue;
      if (!a.is_normal_at(ti) && !permutes(g, h, t)) continue;
      auto hti = lattice.index_of(product_set(g, h, t));
      if (!hti) continue;
      bool ok = false;
      switch (kind) {
        case EmbeddingKind::WeaklyFsQuasinormal:
        case EmbeddingKind::FsQuasinormal: ok = a.is_sqn_at(*hti); break;
        case EmbeddingKind::FQuasinormal: ok = a.is_qn_at(*hti); break;
        case EmbeddingKind::FhNormal:
        case EmbeddingKind::FnNormal: ok = a.is_normal_at(*hti); break;
        default: break;
      }
      if (!ok) continue;
    }
    v.holds = true;
    v.witness = detail::make_certificate(g, h, t, core, zf_pre);
    return v;
  }
  return v;
}

/// Greedy hypercentres of G/H_G keyed by (formation, core), shared across replays.
struct ReplayCache {
  std::map<std::string, std::unordered_map<ElementSet, ElementSet, ElementSetHash>> zf;
};

/// Replays a positive verdict through primitives independent of the search:
/// literal quasinormality checks, a fresh core and quotient, and the greedy
/// hypercentre. Returns an empty string on success, else the failed step.
inline std::string replay_witness(const Group& g, const SubgroupLattice& lattice, const Subgroup& h,
                                  const EmbeddingVerdict& v, const Formation* form = nullptr,
                                  ReplayCache* cache = nullptr) {
  if (!v.holds) return "verdict does not hold";
  EmbeddingKind kind = parse_embedding_kind(v.kind);
  if (kind == EmbeddingKind::Quasinormal) return is_quasinormal(g, lattice, h) ? "" : "not quasinormal";
  if (kind == EmbeddingKind::SQuasinormal) return is_s_quasinormal(g, lattice, h) ? "" : "not S-quasinormal";
  if (!v.witness) return "missing witness";
  const auto& w = *v.witness;
  const Subgroup& t = w.t;
  if (!is_subgroup(g, t.members())) return "T is not a subgroup";
  switch (kind) {
    case EmbeddingKind::WeaklyFsQuasinormal:
      if (!is_s_quasinormal(g, lattice, t)) return "T is not S-quasinormal";
      break;
    case EmbeddingKind::FQuasinormal:
      if (!is_quasinormal(g, lattice, t)) return "T is not quasinormal";
      break;
    default:
      if (!is_normal(g, t)) return "T is not normal";
  }
  ElementSet hts = product_set(g, h, t);
  if (!is_subgroup(g, hts)) return "HT is not a subgroup";
  Subgroup ht(hts);
  switch (kind) {
    case EmbeddingKind::WeaklyFsQuasinormal:
    case EmbeddingKind::FsQuasinormal:
      if (!is_s_quasinormal(g, lattice, ht)) return "HT is not S-quasinormal";
      break;
    case EmbeddingKind::FQuasinormal:
      if (!is_quasinormal(g, lattice, ht)) return "HT is not quasinormal";
      break;
    case EmbeddingKind::CNormal:
    case EmbeddingKind::FnSupplemented:
      if (!ht.is_whole()) return "HT is not G";
      break;
    case EmbeddingKind::FhNormal:
      if (!is_normal(g, ht) || std::gcd(ht.order(), g.order() / ht.order()) != 1) return "HT is not a normal Hall subgroup";
      break;
    case EmbeddingKind::FnNormal:
      if (!is_normal(g, ht)) return "HT is not normal";
      break;
    default: break;
  }
  Subgroup core = core_of(g, h);
  if (!(core == w.core)) return "core mismatch";
  Subgroup meet = intersection(h, t);
  if (kind == EmbeddingKind::CNormal) return meet.is_subgroup_of(core) ? "" : "H∩T is not inside H_G";
  if (!form) return "formation required";
  auto q = quotient(g, core);
  Subgroup lhs = q.push_forward(generated_subgroup(g, meet.members() | core.members()));
  auto compute = [&] {
    return (form->saturated ? f_hypercentre_greedy(q.target(), *form) : f_hypercentre(q.target(), *form)).members();
  };
  ElementSet z;
  if (cache) {
    auto& m = cache->zf[form->tag()];
    auto it = m.find(core.members());
    if (it == m.end()) it = m.emplace(core.members(), compute()).first;
    z = it->second;
  } else {
    z = compute();
  }
  if (!(lhs.members() == w.lhs)) return "certificate left side mismatch";
  if (!(z == w.zf)) return "certificate hypercentre mismatch";
  if (!lhs.is_subgroup_of(Subgroup(z))) return "containment fails";
  return "";
}

/// Some K <= G with HK = G as a set and K in the class; the first K in
/// lattice order is the witness.
inline EmbeddingVerdict has_supplement(GroupAnalysis& a, const Subgroup& h, const ClassSpec& c) {
  const Group& g = a.group();
  EmbeddingVerdict v;
  v.kind = "supp:" + c.to_string();
  const SubgroupLattice& lattice = a.lattice();
  for (std::size_t ki = 0; ki < lattice.size(); ++ki) {
    const Subgroup& k = lattice[ki];
    if (h.order() * k.order() < g.order()) continue;
    ++v.candidates;
    if (h.order() * k.order() / intersection(h, k).order() != g.order()) continue;
    if (!a.subgroup_in_class_at(ki, c)) continue;
    v.holds = true;
    v.witness = EmbeddingWitness{k, Subgroup::trivial(g), {}, {}};
    return v;
  }
  return v;
}

/// Dispatch by CLI tag: "qn", "sqn", "wfsqn", ..., or "supp:<class>".
inline EmbeddingVerdict evaluate_predicate(GroupAnalysis& a, const Subgroup& h, const std::string& tag,
                                           const Formation* form = nullptr) {
  if (tag.rfind("supp:", 0) == 0) return has_supplement(a, h, parse_class_spec(tag.substr(5)));
  return embedding_predicate(a, h, parse_embedding_kind(tag), form);
}

}  // namespace fgt
