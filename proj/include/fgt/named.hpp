#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fgt/lattice.hpp"
#include "fgt/numtheory.hpp"
#include "fgt/subgroup.hpp"

namespace fgt {

enum class NamedTag { Center, Frattini, Fitting, Op, OpPrime, UpperP, OpPrimeP };

/// Largest normal subgroup whose order satisfies pred; the join of all such
/// normal subgroups when that join still satisfies pred (true for the
/// order predicates used here).
template <typename Pred>
Subgroup largest_normal_with(const std::vector<Subgroup>& normals, Pred pred) {
  const Subgroup* best = nullptr;
  for (const auto& n : normals)
    if (pred(n) && (!best || n.order() > best->order())) best = &n;
  return *best;
}

/// O_p(G)
inline Subgroup o_p(const std::vector<Subgroup>& normals, unsigned p) {
  return largest_normal_with(normals, [p](const Subgroup& n) { return is_power_of(n.order(), p); });
}

/// O_{p'}(G)
inline Subgroup o_p_prime(const std::vector<Subgroup>& normals, unsigned p) {
  return largest_normal_with(normals, [p](const Subgroup& n) { return n.order() % p != 0; });
}

/// O^p(G): intersection of the normal subgroups of p-power index.
inline Subgroup o_upper_p(const Group& g, const std::vector<Subgroup>& normals, unsigned p) {
  ElementSet acc = ElementSet::full(g.order());
  for (const auto& n : normals)
    if (is_power_of(g.order() / n.order(), p)) acc &= n.members();
  return Subgroup(std::move(acc));
}

/// O_{p',p}(G): the largest normal N >= O_{p'}(G) with |N : O_{p'}(G)| a power of p.
inline Subgroup o_p_prime_p(const std::vector<Subgroup>& normals, unsigned p) {
  Subgroup base = o_p_prime(normals, p);
  return largest_normal_with(normals, [&](const Subgroup& n) {
    return base.is_subgroup_of(n) && is_power_of(n.order() / base.order(), p);
  });
}

/// F(G) as the product of the O_p(G).
inline Subgroup fitting(const Group& g, const std::vector<Subgroup>& normals) {
  Subgroup acc = Subgroup::trivial(g);
  for (unsigned p : g.primes()) acc = join(g, acc, o_p(normals, p));
  return acc;
}

/// Named characteristic subgroups. Frattini requires the lattice; the others
/// use only the normal subgroups.
inline Subgroup named_subgroup(const Group& g, NamedTag tag, unsigned p = 0,
                               const SubgroupLattice* lattice = nullptr) {
  if (tag == NamedTag::Center) return center(g);
  if (tag == NamedTag::Frattini) {
    if (lattice) return frattini(g, *lattice);
    return frattini(g, all_subgroups(g));
  }
  const auto normals = normal_subgroups(g);
  switch (tag) {
    case NamedTag::Fitting: return fitting(g, normals);
    case NamedTag::Op: return o_p(normals, p);
    case NamedTag::OpPrime: return o_p_prime(normals, p);
    case NamedTag::UpperP: return o_upper_p(g, normals, p);
    case NamedTag::OpPrimeP: return o_p_prime_p(normals, p);
    default: break;
  }
  return Subgroup::trivial(g);
}

}  // namespace fgt
