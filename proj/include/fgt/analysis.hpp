#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fgt/error.hpp"
#include "fgt/formation.hpp"
#include "fgt/group.hpp"
#include "fgt/lattice.hpp"
#include "fgt/quotient.hpp"
#include "fgt/subgroup.hpp"

namespace fgt {

/// Lattice of a subgroup K, derived from the parent lattice and expressed in
/// the local numbering of `r`.
inline SubgroupLattice derive_sublattice(const Restriction& r, const SubgroupLattice& parent, const Subgroup& k) {
  std::vector<Subgroup> subs;
  for (const auto& h : parent) {
    if (h.order() > k.order()) break;
    if (k.order() % h.order() == 0 && h.is_subgroup_of(k)) subs.push_back(r.lower(h));
  }
  return SubgroupLattice(r.group, std::move(subs));
}

/// Lattice of G/N, derived from the members of the parent lattice containing N.
inline SubgroupLattice derive_quotient_lattice(const QuotientMap& q, const SubgroupLattice& parent) {
  std::vector<Subgroup> subs;
  for (const auto& h : parent)
    if (q.kernel().is_subgroup_of(h)) subs.push_back(q.push_forward(h));
  return SubgroupLattice(q.target(), std::move(subs));
}

/// Memo context for one group: lattice, normal subgroups, Sylow subgroups,
/// embedding flags, cores and hypercentres. Not thread-safe; use one per task.
class GroupAnalysis {
 public:
  explicit GroupAnalysis(Group g, Limits limits = {}) : g_(std::move(g)), limits_(limits) {}
  GroupAnalysis(Group g, SubgroupLattice lattice, Limits limits = {})
      : g_(std::move(g)), limits_(limits), lattice_(std::move(lattice)) {}

  const Group& group() const noexcept { return g_; }
  const Limits& limits() const noexcept { return limits_; }

  const SubgroupLattice& lattice() {
    if (!lattice_) lattice_ = all_subgroups(g_, limits_);
    return *lattice_;
  }
  bool has_lattice() const noexcept { return lattice_.has_value(); }

  std::size_t index_of(const Subgroup& h) {
    auto i = lattice().index_of(h);
    if (!i) throw Error(ErrorKind::NotSubgroup, "not a member of the lattice");
    return *i;
  }

  /// Ascending; read off the lattice when one is present.
  const std::vector<Subgroup>& normals() {
    if (!normals_) {
      if (lattice_) {
        normals_.emplace();
        for (std::size_t i = 0; i < lattice_->size(); ++i)
          if (lattice_->is_normal_at(i)) normals_->push_back((*lattice_)[i]);
      } else {
        normals_ = normal_subgroups(g_);
      }
    }
    return *normals_;
  }

  const std::vector<Subgroup>& sylows(unsigned p) {
    auto it = sylows_.find(p);
    if (it == sylows_.end()) it = sylows_.emplace(p, sylow_subgroups(g_, lattice(), p)).first;
    return it->second;
  }

  bool is_normal_at(std::size_t i) { return lattice().is_normal_at(i); }

  /// Permutes with every Sylow subgroup.
  bool is_sqn_at(std::size_t i) {
    auto& flags = flags_for(sqn_);
    if (flags[i] < 0) {
      const Subgroup& h = lattice()[i];
      bool ok = true;
      for (unsigned p : g_.primes()) {
        for (const auto& s : sylows(p))
          if (!permutes(g_, h, s)) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      flags[i] = ok;
    }
    return flags[i];
  }

  /// Permutes with every subgroup. Normal subgroups are settled directly.
  bool is_qn_at(std::size_t i) {
    auto& flags = flags_for(qn_);
    if (flags[i] < 0) {
      const Subgroup& h = lattice()[i];
      bool ok = is_normal_at(i);
      if (!ok) {
        ok = true;
        for (const auto& k : lattice())
          if (!permutes(g_, h, k)) {
            ok = false;
            break;
          }
      }
      flags[i] = ok;
    }
    return flags[i];
  }

  const std::vector<std::size_t>& sqn_indices() {
    if (!sqn_list_) {
      sqn_list_.emplace();
      for (std::size_t i = 0; i < lattice().size(); ++i)
        if (is_sqn_at(i)) sqn_list_->push_back(i);
    }
    return *sqn_list_;
  }
  const std::vector<std::size_t>& qn_indices() {
    if (!qn_list_) {
      qn_list_.emplace();
      for (std::size_t i = 0; i < lattice().size(); ++i)
        if (is_qn_at(i)) qn_list_->push_back(i);
    }
    return *qn_list_;
  }
  const std::vector<std::size_t>& normal_indices() {
    if (!normal_list_) {
      normal_list_.emplace();
      for (std::size_t i = 0; i < lattice().size(); ++i)
        if (is_normal_at(i)) normal_list_->push_back(i);
    }
    return *normal_list_;
  }

  const Subgroup& core(const Subgroup& h) {
    auto it = cores_.find(h.members());
    if (it == cores_.end()) it = cores_.emplace(h.members(), core_of(g_, h)).first;
    return it->second;
  }

  /// Z_F(G).
  const Subgroup& hypercentre(const Formation& f) { return hypercentre_preimage(Subgroup::trivial(g_), f); }

  /// Full preimage in G of Z_F(G/N) for normal N.
  const Subgroup& hypercentre_preimage(const Subgroup& n, const Formation& f) {
    auto& per_form = zf_[f.tag()];
    auto it = per_form.find(n.members());
    if (it == per_form.end()) {
      Subgroup pre;
      if (n.is_trivial()) {
        pre = f_hypercentre(g_, f, limits_, &normals());
      } else {
        // Normal subgroups of G/N are the images of those of G above N.
        auto q = quotient(g_, n);
        std::vector<Subgroup> above;
        for (const auto& m : normals())
          if (n.is_subgroup_of(m)) above.push_back(q.push_forward(m));
        pre = q.pull_back(f_hypercentre(q.target(), f, limits_, &above));
      }
      it = per_form.emplace(n.members(), std::move(pre)).first;
    }
    return it->second;
  }

  bool member(const Formation& f) {
    auto key = f.tag();
    auto it = membership_.find(key);
    if (it == membership_.end()) it = membership_.emplace(key, f.member(g_)).first;
    return it->second;
  }

  /// Class membership of the lattice member at i, viewed as a group.
  bool subgroup_in_class_at(std::size_t i, const ClassSpec& c) {
    auto& m = class_memo_[c.to_string()];
    auto it = m.find(i);
    if (it == m.end()) it = m.emplace(i, subgroup_in_class(g_, lattice()[i], c, limits_)).first;
    return it->second;
  }

  /// Memo for boolean facts about lattice members, keyed by a caller tag.
  template <class Fn>
  bool memo(const std::string& key, std::size_t i, Fn&& compute) {
    auto& m = bool_memo_[key];
    auto it = m.find(i);
    if (it == m.end()) it = m.emplace(i, static_cast<bool>(compute())).first;
    return it->second;
  }

  /// Context for a subgroup K with its lattice derived from this one.
  struct SubContext {
    Restriction restriction;
    std::unique_ptr<GroupAnalysis> analysis;
  };
  SubContext subgroup_context(const Subgroup& k) {
    SubContext sc;
    sc.restriction = restrict_to(g_, k);
    sc.analysis = std::make_unique<GroupAnalysis>(sc.restriction.group,
                                                  derive_sublattice(sc.restriction, lattice(), k), limits_);
    return sc;
  }

  /// Context for G/N with its lattice derived from this one.
  struct QuotientContext {
    QuotientMap map;
    std::unique_ptr<GroupAnalysis> analysis;
  };
  QuotientContext quotient_context(const Subgroup& n) {
    QuotientContext qc{quotient(g_, n), nullptr};
    if (has_lattice() || g_.order() <= limits_.lattice_cap)
      qc.analysis = std::make_unique<GroupAnalysis>(qc.map.target(), derive_quotient_lattice(qc.map, lattice()), limits_);
    else
      qc.analysis = std::make_unique<GroupAnalysis>(qc.map.target(), limits_);
    return qc;
  }

 private:
  std::vector<signed char>& flags_for(std::vector<signed char>& v) {
    if (v.empty()) v.assign(lattice().size(), -1);
    return v;
  }

  Group g_;
  Limits limits_;
  std::optional<SubgroupLattice> lattice_;
  std::optional<std::vector<Subgroup>> normals_;
  std::map<unsigned, std::vector<Subgroup>> sylows_;
  std::vector<signed char> sqn_, qn_;
  std::optional<std::vector<std::size_t>> sqn_list_, qn_list_, normal_list_;
  std::unordered_map<ElementSet, Subgroup, ElementSetHash> cores_;
  std::map<std::string, std::unordered_map<ElementSet, Subgroup, ElementSetHash>> zf_;
  std::map<std::string, bool> membership_;
  std::map<std::string, std::unordered_map<std::size_t, bool>> class_memo_;
  std::map<std::string, std::unordered_map<std::size_t, bool>> bool_memo_;
};

}  // namespace fgt
