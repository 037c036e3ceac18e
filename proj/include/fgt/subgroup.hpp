#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fgt/bitset.hpp"
#include "fgt/group.hpp"

namespace fgt {

/// A subgroup of some parent group, identified by its member bit vector.
/// Every function taking a Subgroup also takes the parent Group it lives in.
class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(ElementSet members) : members_(std::move(members)), order_(members_.count()) {}

  static Subgroup trivial(const Group& g) {
    ElementSet s(g.order());
    s.set(0);
    return Subgroup(std::move(s));
  }
  static Subgroup whole(const Group& g) { return Subgroup(ElementSet::full(g.order())); }

  const ElementSet& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return order_; }
  std::size_t parent_order() const noexcept { return members_.width(); }
  bool contains(Elem a) const noexcept { return members_.test(a); }
  bool is_trivial() const noexcept { return order_ == 1; }
  bool is_whole() const noexcept { return order_ == members_.width(); }
  bool is_subgroup_of(const Subgroup& other) const noexcept { return members_.is_subset_of(other.members_); }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(order_);
    members_.for_each([&](std::size_t i) { out.push_back(static_cast<Elem>(i)); });
    return out;
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept { return a.members_ == b.members_; }

  /// Canonical lattice order: ascending order, then lexicographic members.
  friend bool operator<(const Subgroup& a, const Subgroup& b) noexcept {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    return lex_less(a.members_, b.members_);
  }

 private:
  ElementSet members_;
  std::size_t order_ = 0;
};

struct SubgroupHash {
  std::size_t operator()(const Subgroup& s) const noexcept { return s.members().hash(); }
};

inline Subgroup intersection(const Subgroup& a, const Subgroup& b) { return Subgroup(a.members() & b.members()); }

/// Smallest subgroup containing seed.
inline Subgroup generated_subgroup(const Group& g, std::span<const Elem> seed) {
  ElementSet mask(g.order());
  mask.set(0);
  std::vector<Elem> members{0};
  std::vector<Elem> gens;
  for (Elem s : seed) {
    if (mask.test(s)) continue;
    gens.push_back(s);
    detail::close_under(g, members, mask, gens);
  }
  return Subgroup(std::move(mask));
}

inline Subgroup generated_subgroup(const Group& g, const ElementSet& seed) {
  std::vector<Elem> elems;
  seed.for_each([&](std::size_t i) { elems.push_back(static_cast<Elem>(i)); });
  return generated_subgroup(g, elems);
}

inline Subgroup cyclic_subgroup(const Group& g, Elem x) {
  ElementSet mask(g.order());
  Elem y = 0;
  do {
    mask.set(y);
    y = g.mul(y, x);
  } while (y != 0);
  return Subgroup(std::move(mask));
}

/// Greedy generating set of h in ascending element order.
inline std::vector<Elem> subgroup_generators(const Group& g, const Subgroup& h) {
  ElementSet mask(g.order());
  mask.set(0);
  std::vector<Elem> members{0};
  std::vector<Elem> gens;
  h.members().for_each([&](std::size_t i) {
    if (members.size() == h.order() || mask.test(i)) return;
    gens.push_back(static_cast<Elem>(i));
    detail::close_under(g, members, mask, gens);
  });
  return gens;
}

/// True when the member set is closed under products (hence a subgroup).
inline bool is_subgroup(const Group& g, const ElementSet& s) {
  if (s.width() != g.order() || !s.test(0)) return false;
  std::vector<Elem> elems;
  s.for_each([&](std::size_t i) { elems.push_back(static_cast<Elem>(i)); });
  for (Elem a : elems)
    for (Elem b : elems)
      if (!s.test(g.mul(a, b))) return false;
  return true;
}

/// <H, K>
inline Subgroup join(const Group& g, const Subgroup& h, const Subgroup& k) {
  if (k.is_subgroup_of(h)) return h;
  if (h.is_subgroup_of(k)) return k;
  ElementSet mask = h.members();
  std::vector<Elem> members = h.elements();
  std::vector<Elem> gens = subgroup_generators(g, h);
  for (Elem x : subgroup_generators(g, k)) gens.push_back(x);
  detail::close_under(g, members, mask, gens);
  return Subgroup(std::move(mask));
}

/// HK as a set of elements.
inline ElementSet product_set(const Group& g, const Subgroup& h, const Subgroup& k) {
  ElementSet out(g.order());
  const auto hs = h.elements();
  k.members().for_each([&](std::size_t kk) {
    if (out.test(kk)) return;  // Hk already produced: H k' = H k for k' in Hk
    for (Elem x : hs) out.set(g.mul(x, static_cast<Elem>(kk)));
  });
  return out;
}

/// HK = KH as sets; equivalently HK is a subgroup.
inline bool permutes(const Group& g, const Subgroup& h, const Subgroup& k) {
  if (h.is_subgroup_of(k) || k.is_subgroup_of(h)) return true;
  const std::size_t meet = (h.members() & k.members()).count();
  const std::size_t size = h.order() * k.order() / meet;
  if (g.order() % size != 0) return false;
  ElementSet hk = product_set(g, h, k);
  // HK is a subgroup iff it is closed; closure under right multiplication by
  // H-generators suffices since HK*K = HK and H <= HK.
  const auto hgens = subgroup_generators(g, h);
  bool closed = true;
  hk.for_each([&](std::size_t x) {
    if (!closed) return;
    for (Elem s : hgens)
      if (!hk.test(g.mul(static_cast<Elem>(x), s))) {
        closed = false;
        return;
      }
  });
  return closed;
}

inline Subgroup conjugate(const Group& g, const Subgroup& h, Elem x) {
  ElementSet out(g.order());
  h.members().for_each([&](std::size_t a) { out.set(g.conj(static_cast<Elem>(a), x)); });
  return Subgroup(std::move(out));
}

/// Normal in the subgroup `within` (defaults to the whole group).
inline bool is_normal_in(const Group& g, const Subgroup& h, const std::vector<Elem>& within_gens) {
  const auto hgens = subgroup_generators(g, h);
  for (Elem s : within_gens)
    for (Elem x : hgens)
      if (!h.contains(g.conj(x, s))) return false;
  return true;
}

inline bool is_normal(const Group& g, const Subgroup& h) { return is_normal_in(g, h, g.generators()); }

/// H_G: the largest subset of H closed under conjugation, which is the
/// intersection of all conjugates of H.
inline Subgroup core_of(const Group& g, const Subgroup& h) {
  ElementSet c = h.members();
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::size_t> drop;
    c.for_each([&](std::size_t x) {
      for (Elem s : g.generators())
        if (!c.test(g.conj(static_cast<Elem>(x), s))) {
          drop.push_back(x);
          return;
        }
    });
    for (std::size_t x : drop) c.reset(x);
    changed = !drop.empty();
  }
  return Subgroup(std::move(c));
}

/// Smallest subgroup containing h that is normalized by every element of
/// within_gens.
inline Subgroup normal_closure_in(const Group& g, const Subgroup& h, const std::vector<Elem>& within_gens) {
  ElementSet mask = h.members();
  std::vector<Elem> members = h.elements();
  std::vector<Elem> gens = subgroup_generators(g, h);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Elem s : within_gens) {
      Elem c = g.conj(gens[i], s);
      if (!mask.test(c)) {
        gens.push_back(c);
        detail::close_under(g, members, mask, gens);
      }
    }
  }
  return Subgroup(std::move(mask));
}

/// H^G
inline Subgroup normal_closure(const Group& g, const Subgroup& h) {
  return normal_closure_in(g, h, g.generators());
}

inline Subgroup normalizer(const Group& g, const Subgroup& h) {
  const auto hgens = subgroup_generators(g, h);
  ElementSet out(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem y : hgens)
      if (!h.contains(g.conj(y, static_cast<Elem>(x)))) {
        ok = false;
        break;
      }
    if (ok) out.set(x);
  }
  return Subgroup(std::move(out));
}

inline Subgroup centralizer_of_set(const Group& g, const ElementSet& s) {
  ElementSet out(g.order());
  std::vector<Elem> elems;
  s.for_each([&](std::size_t i) { elems.push_back(static_cast<Elem>(i)); });
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem y : elems)
      if (g.mul(static_cast<Elem>(x), y) != g.mul(y, static_cast<Elem>(x))) {
        ok = false;
        break;
      }
    if (ok) out.set(x);
  }
  return Subgroup(std::move(out));
}

inline Subgroup center(const Group& g) { return centralizer_of_set(g, ElementSet::full(g.order())); }

/// [A, B] = <[a, b] : a in A, b in B>, with [a, b] = a^-1 b^-1 a b.
inline Subgroup commutator_subgroup(const Group& g, const Subgroup& a, const Subgroup& b) {
  ElementSet seed(g.order());
  const auto as = a.elements();
  const auto bs = b.elements();
  for (Elem x : as)
    for (Elem y : bs) seed.set(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
  return generated_subgroup(g, seed);
}

inline Subgroup derived_subgroup(const Group& g, const Subgroup& h) { return commutator_subgroup(g, h, h); }

/// All normal subgroups, sorted by (order, members). Built as the join-closure
/// of the normal closures of single conjugacy classes, so no full lattice is
/// needed.
inline std::vector<Subgroup> normal_subgroups(const Group& g) {
  std::vector<Subgroup> principal;
  std::unordered_set<ElementSet, ElementSetHash> seen_principal;
  for (const auto& cls : conjugacy_classes(g)) {
    Subgroup n = generated_subgroup(g, cls);
    if (seen_principal.insert(n.members()).second) principal.push_back(std::move(n));
  }
  std::vector<std::vector<Elem>> principal_gens;
  for (const auto& p : principal) principal_gens.push_back(subgroup_generators(g, p));

  std::vector<Subgroup> out{Subgroup::trivial(g)};
  std::unordered_set<ElementSet, ElementSetHash> seen{out[0].members()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < principal.size(); ++j) {
      if (principal[j].is_subgroup_of(out[i])) continue;
      // N * P for normal N, P: close N's members under P's generators.
      ElementSet mask = out[i].members();
      std::vector<Elem> members = out[i].elements();
      detail::close_under(g, members, mask, principal_gens[j]);
      if (seen.insert(mask).second) out.emplace_back(std::move(mask));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Chain G = H0 >= H1 >= ... with H(i+1) the normal closure of H in H(i);
/// H is subnormal iff the chain reaches H.
inline bool is_subnormal(const Group& g, const Subgroup& h) {
  Subgroup current = Subgroup::whole(g);
  while (true) {
    if (current == h) return true;
    Subgroup next = normal_closure_in(g, h, subgroup_generators(g, current));
    if (next == current) return false;
    current = std::move(next);
  }
}

}  // namespace fgt
