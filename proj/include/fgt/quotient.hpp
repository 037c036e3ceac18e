#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fgt/error.hpp"
#include "fgt/group.hpp"
#include "fgt/subgroup.hpp"

namespace fgt {

/// G/N together with the canonical projection G -> G/N.
class QuotientMap {
 public:
  const Group& target() const noexcept { return target_; }
  const Subgroup& kernel() const noexcept { return kernel_; }
  std::size_t source_order() const noexcept { return proj_.size(); }
  /// proj()[a] is the coset index of a.
  const std::vector<Elem>& proj() const noexcept { return proj_; }
  /// Smallest source element of each coset.
  const std::vector<Elem>& coset_reps() const noexcept { return reps_; }

  Elem project(Elem a) const noexcept { return proj_[a]; }

  /// HN/N
  Subgroup push_forward(const Subgroup& h) const {
    ElementSet out(target_.order());
    h.members().for_each([&](std::size_t a) { out.set(proj_[a]); });
    return Subgroup(std::move(out));
  }

  /// Full preimage of a subgroup of the quotient; always contains N.
  Subgroup pull_back(const Subgroup& k) const {
    ElementSet out(proj_.size());
    for (std::size_t a = 0; a < proj_.size(); ++a)
      if (k.contains(proj_[a])) out.set(a);
    return Subgroup(std::move(out));
  }

  friend QuotientMap quotient(const Group& g, const Subgroup& n);

 private:
  Group target_;
  Subgroup kernel_;
  std::vector<Elem> proj_;
  std::vector<Elem> reps_;
};

/// Cosets are numbered by ascending smallest member, so the coset N is 0.
inline QuotientMap quotient(const Group& g, const Subgroup& n) {
  if (n.parent_order() != g.order() || !is_subgroup(g, n.members()))
    throw Error(ErrorKind::NotSubgroup, "kernel is not a subgroup");
  if (!is_normal(g, n)) throw Error(ErrorKind::NotNormal, "kernel is not normal");
  QuotientMap m;
  m.kernel_ = n;
  const std::size_t size = g.order();
  const auto kernel_elems = n.elements();
  constexpr Elem kUnset = 0xffff;
  m.proj_.assign(size, kUnset);
  for (std::size_t a = 0; a < size; ++a) {
    if (m.proj_[a] != kUnset) continue;
    const auto coset = static_cast<Elem>(m.reps_.size());
    m.reps_.push_back(static_cast<Elem>(a));
    for (Elem k : kernel_elems) m.proj_[g.mul(static_cast<Elem>(a), k)] = coset;
  }
  const std::size_t q = m.reps_.size();
  std::vector<Elem> flat(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) flat[i * q + j] = m.proj_[g.mul(m.reps_[i], m.reps_[j])];
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(q);
    for (Elem r : m.reps_) labels.push_back(g.label(r) + "N");
  }
  m.target_ = Group::trusted(std::move(flat), q, std::move(labels));
  return m;
}

/// A subgroup H of G re-indexed as a group in its own right: local element i
/// is the i-th smallest member of H.
struct Restriction {
  Group group;
  std::vector<Elem> to_parent;   // local -> parent
  std::vector<Elem> to_local;    // parent -> local, 0xffff outside H
  std::size_t parent_order = 0;

  Subgroup lift(const Subgroup& local) const {
    ElementSet out(parent_order);
    local.members().for_each([&](std::size_t i) { out.set(to_parent[i]); });
    return Subgroup(std::move(out));
  }

  /// Requires s to lie inside H.
  Subgroup lower(const Subgroup& s) const {
    ElementSet out(group.order());
    s.members().for_each([&](std::size_t a) { out.set(to_local[a]); });
    return Subgroup(std::move(out));
  }
};

inline Restriction restrict_to(const Group& g, const Subgroup& h) {
  Restriction r;
  r.parent_order = g.order();
  r.to_parent = h.elements();
  r.to_local.assign(g.order(), 0xffff);
  for (std::size_t i = 0; i < r.to_parent.size(); ++i) r.to_local[r.to_parent[i]] = static_cast<Elem>(i);
  const std::size_t n = r.to_parent.size();
  std::vector<Elem> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = r.to_local[g.mul(r.to_parent[i], r.to_parent[j])];
  std::vector<std::string> labels;
  if (g.has_labels())
    for (Elem a : r.to_parent) labels.push_back(g.label(a));
  r.group = Group::trusted(std::move(flat), n, std::move(labels));
  return r;
}

}  // namespace fgt
