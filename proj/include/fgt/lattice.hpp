#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fgt/error.hpp"
#include "fgt/group.hpp"
#include "fgt/subgroup.hpp"

namespace fgt {

/// Every subgroup of a group, deduplicated and sorted by (order, members).
class SubgroupLattice {
 public:
  SubgroupLattice() = default;

  /// Adopts an already complete, sorted, duplicate-free list (cache loads).
  SubgroupLattice(const Group& g, std::vector<Subgroup> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    index_.reserve(members_.size());
    normal_.reserve(members_.size());
    for (std::size_t i = 0; i < members_.size(); ++i) {
      index_.emplace(members_[i].members(), i);
      by_order_[members_[i].order()].push_back(i);
      normal_.push_back(is_normal(g, members_[i]));
    }
  }

  std::size_t size() const noexcept { return members_.size(); }
  const Subgroup& operator[](std::size_t i) const noexcept { return members_[i]; }
  const std::vector<Subgroup>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  std::optional<std::size_t> index_of(const ElementSet& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> index_of(const Subgroup& h) const { return index_of(h.members()); }

  /// Indices of members with the given order (ascending lattice order).
  const std::vector<std::size_t>& with_order(std::size_t order) const {
    static const std::vector<std::size_t> kEmpty;
    auto it = by_order_.find(order);
    return it == by_order_.end() ? kEmpty : it->second;
  }

  bool is_normal_at(std::size_t i) const noexcept { return normal_[i]; }

 private:
  std::vector<Subgroup> members_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  std::map<std::size_t, std::vector<std::size_t>> by_order_;
  std::vector<bool> normal_;
};

/// Full subgroup lattice by breadth-first extension: start from the cyclic
/// subgroups and repeatedly join a member with a cyclic subgroup outside it.
inline SubgroupLattice all_subgroups(const Group& g, const Limits& limits = {}) {
  if (g.order() > limits.lattice_cap)
    throw Error(ErrorKind::LatticeCapExceeded,
                "order " + std::to_string(g.order()) + " exceeds lattice cap " + std::to_string(limits.lattice_cap));
  struct Entry {
    ElementSet mask;
    std::vector<Elem> gens;
  };
  std::vector<Entry> entries;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  std::vector<Elem> cyclic_gens;
  std::vector<ElementSet> cyclic_masks;
  for (std::size_t x = 0; x < g.order(); ++x) {
    Subgroup c = cyclic_subgroup(g, static_cast<Elem>(x));
    if (seen.emplace(c.members(), entries.size()).second) {
      std::vector<Elem> gens;
      if (x != 0) gens.push_back(static_cast<Elem>(x));
      entries.push_back({c.members(), gens});
      cyclic_gens.push_back(static_cast<Elem>(x));
      cyclic_masks.push_back(c.members());
    }
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t c = 0; c < cyclic_gens.size(); ++c) {
      if (cyclic_masks[c].is_subset_of(entries[i].mask)) continue;
      ElementSet mask = entries[i].mask;
      std::vector<Elem> members;
      members.reserve(g.order());
      mask.for_each([&](std::size_t e) { members.push_back(static_cast<Elem>(e)); });
      std::vector<Elem> gens = entries[i].gens;
      gens.push_back(cyclic_gens[c]);
      detail::close_under(g, members, mask, gens);
      if (seen.find(mask) != seen.end()) continue;
      if (entries.size() >= limits.subgroup_count_cap)
        throw Error(ErrorKind::SubgroupCountCapExceeded,
                    "more than " + std::to_string(limits.subgroup_count_cap) + " subgroups");
      seen.emplace(mask, entries.size());
      entries.push_back({std::move(mask), std::move(gens)});
    }
  }
  std::vector<Subgroup> subs;
  subs.reserve(entries.size());
  for (auto& e : entries) subs.emplace_back(std::move(e.mask));
  return SubgroupLattice(g, std::move(subs));
}

/// Subgroups whose order is the pi-part of |G|.
inline std::vector<Subgroup> hall_subgroups(const Group& g, const SubgroupLattice& lattice,
                                            const std::vector<unsigned>& pi) {
  std::vector<Subgroup> out;
  for (std::size_t i : lattice.with_order(pi_part(g.order(), pi))) out.push_back(lattice[i]);
  return out;
}

inline std::vector<Subgroup> sylow_subgroups(const Group& g, const SubgroupLattice& lattice, unsigned p) {
  return hall_subgroups(g, lattice, {p});
}

/// Indices of the members of `lattice` that are proper subgroups of `p` and
/// maximal among them.
inline std::vector<std::size_t> maximal_subgroup_indices(const SubgroupLattice& lattice, const Subgroup& p) {
  std::vector<std::size_t> proper;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Subgroup& m = lattice[i];
    if (m.order() >= p.order()) break;
    if (p.order() % m.order() == 0 && m.is_subgroup_of(p)) proper.push_back(i);
  }
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < proper.size(); ++a) {
    const Subgroup& m = lattice[proper[a]];
    bool maximal = true;
    for (std::size_t b = a + 1; b < proper.size() && maximal; ++b) {
      const Subgroup& n = lattice[proper[b]];
      if (n.order() > m.order() && n.order() % m.order() == 0 && m.is_subgroup_of(n)) maximal = false;
    }
    if (maximal) out.push_back(proper[a]);
  }
  return out;
}

inline std::vector<Subgroup> maximal_subgroups(const SubgroupLattice& lattice, const Subgroup& p) {
  std::vector<Subgroup> out;
  for (std::size_t i : maximal_subgroup_indices(lattice, p)) out.push_back(lattice[i]);
  return out;
}

/// Phi(G), the intersection of all maximal subgroups.
inline Subgroup frattini(const Group& g, const SubgroupLattice& lattice) {
  Subgroup whole = Subgroup::whole(g);
  ElementSet acc = whole.members();
  for (std::size_t i : maximal_subgroup_indices(lattice, whole)) acc &= lattice[i].members();
  return Subgroup(std::move(acc));
}

}  // namespace fgt
