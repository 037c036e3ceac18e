#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fgt/bitset.hpp"
#include "fgt/error.hpp"
#include "fgt/numtheory.hpp"
#include "fgt/permutation.hpp"

namespace fgt {

/// Element index inside one group. The identity is always 0.
using Elem = std::uint16_t;

/// Invariants used to deduplicate corpora. Isomorphic groups always share a
/// fingerprint; distinct groups occasionally collide.
struct Fingerprint {
  std::size_t order = 0;
  std::size_t exponent = 0;
  bool abelian = false;
  std::vector<std::size_t> class_sizes;     // sorted
  std::vector<std::size_t> element_orders;  // sorted

  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

/// A concrete finite group stored as a dense multiplication table.
class Group {
 public:
  using Table = std::vector<std::vector<std::size_t>>;

  /// The trivial group.
  Group() : order_(1), table_{0} { finish(); }

  /// Validates the group axioms and builds a Group.
  static Group from_table(const Table& table, std::vector<std::string> labels = {},
                          const Limits& limits = {});

  /// Breadth-first closure from the identity; element order = discovery order.
  static Group from_permutations(const std::vector<Permutation>& generators, const Limits& limits = {});

  /// Builds from a table the caller guarantees to satisfy the group axioms
  /// (quotients, restrictions, products). validate() re-checks on demand.
  static Group trusted(std::vector<Elem> flat, std::size_t order, std::vector<std::string> labels) {
    Group g{Uninit{}};
    g.order_ = order;
    g.table_ = std::move(flat);
    g.labels_ = std::move(labels);
    g.finish();
    return g;
  }

  std::size_t order() const noexcept { return order_; }
  Elem mul(Elem a, Elem b) const noexcept { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  /// b^-1 a b
  Elem conj(Elem a, Elem b) const noexcept { return mul(mul(inverse_[b], a), b); }
  std::size_t elem_order(Elem a) const noexcept { return elem_order_[a]; }
  std::span<const Elem> row(Elem a) const noexcept {
    return {table_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  const std::vector<Elem>& flat_table() const noexcept { return table_; }
  const std::vector<Elem>& inverses() const noexcept { return inverse_; }
  const std::vector<std::size_t>& element_orders() const noexcept { return elem_order_; }

  const std::vector<PrimePower>& prime_factorization() const noexcept { return factorization_; }
  std::vector<unsigned> primes() const {
    std::vector<unsigned> out;
    for (auto [p, k] : factorization_) out.push_back(p);
    return out;
  }
  /// |G|_p, the order of a Sylow p-subgroup.
  std::size_t p_part(unsigned p) const noexcept { return fgt::p_part(order_, p); }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Elem a) const { return labels_.empty() ? std::to_string(a) : labels_[a]; }

  /// A small generating set picked greedily in ascending index order.
  const std::vector<Elem>& generators() const noexcept { return generators_; }

  bool is_abelian() const noexcept { return abelian_; }
  std::size_t exponent() const noexcept { return exponent_; }

  /// Checks every group invariant exhaustively (associativity by Light's test).
  /// Returns an empty string when valid, otherwise a description of the failure.
  std::string validate() const;

  /// Stable 64-bit digest of the table; equal tables hash equally.
  std::uint64_t table_digest() const noexcept { return digest_; }

  friend bool operator==(const Group& a, const Group& b) noexcept {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  struct Uninit {};
  explicit Group(Uninit) {}
  void finish();

  std::size_t order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::size_t> elem_order_;
  std::vector<PrimePower> factorization_;
  std::vector<std::string> labels_;
  std::vector<Elem> generators_;
  bool abelian_ = true;
  std::size_t exponent_ = 1;
  std::uint64_t digest_ = 0;
};

namespace detail {

/// Closes (members, mask) under right multiplication by gens. Starting from a
/// set containing the identity this yields the subgroup the set generates.
inline void close_under(const Group& g, std::vector<Elem>& members, ElementSet& mask,
                        const std::vector<Elem>& gens) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    Elem x = members[i];
    for (Elem s : gens) {
      Elem y = g.mul(x, s);
      if (!mask.test(y)) {
        mask.set(y);
        members.push_back(y);
      }
    }
  }
}

inline std::uint64_t digest_table(const std::vector<Elem>& table, std::size_t order) {
  std::uint64_t h = 0xcbf29ce484222325ull ^ order;
  for (Elem v : table) {
    h ^= v;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace detail

inline void Group::finish() {
  const std::size_t n = order_;
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a * n + b] == 0) {
        inverse_[a] = static_cast<Elem>(b);
        break;
      }
  elem_order_.assign(n, 1);
  exponent_ = 1;
  for (std::size_t a = 1; a < n; ++a) {
    std::size_t k = 1;
    Elem x = static_cast<Elem>(a);
    while (x != 0 && k <= n) {
      x = mul(x, static_cast<Elem>(a));
      ++k;
    }
    elem_order_[a] = k;
    exponent_ = std::lcm(exponent_, k);
  }
  factorization_ = factorize(n);
  abelian_ = true;
  for (std::size_t a = 0; a < n && abelian_; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (table_[a * n + b] != table_[b * n + a]) {
        abelian_ = false;
        break;
      }
  generators_.clear();
  ElementSet mask(n);
  mask.set(0);
  std::vector<Elem> members{0};
  for (std::size_t a = 1; a < n; ++a) {
    if (mask.test(a)) continue;
    generators_.push_back(static_cast<Elem>(a));
    detail::close_under(*this, members, mask, generators_);
    if (members.size() == n) break;
  }
  digest_ = detail::digest_table(table_, n);
}

inline std::string Group::validate() const {
  const std::size_t n = order_;
  if (table_.size() != n * n) return "table size mismatch";
  for (std::size_t a = 0; a < n; ++a) {
    if (mul(0, static_cast<Elem>(a)) != a || mul(static_cast<Elem>(a), 0) != a) return "identity law fails";
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t r = table_[a * n + b], c = table_[b * n + a];
      if (r >= n || c >= n || row_seen[r] || col_seen[c]) return "not a Latin square at " + std::to_string(a);
      row_seen[r] = col_seen[c] = true;
    }
    if (mul(static_cast<Elem>(a), inverse_[a]) != 0 || mul(inverse_[a], static_cast<Elem>(a)) != 0)
      return "inverse law fails at " + std::to_string(a);
  }
  for (Elem s : generators_)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (mul(mul(static_cast<Elem>(x), s), static_cast<Elem>(y)) != mul(static_cast<Elem>(x), mul(s, static_cast<Elem>(y))))
          return "associativity fails";
  for (std::size_t a = 0; a < n; ++a) {
    Elem x = 0;
    for (std::size_t k = 0; k < elem_order_[a]; ++k) x = mul(x, static_cast<Elem>(a));
    if (x != 0 || n % elem_order_[a] != 0) return "element order wrong at " + std::to_string(a);
  }
  return {};
}

inline Group Group::from_table(const Table& table, std::vector<std::string> labels, const Limits& limits) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::NotClosed, "empty table");
  if (n > limits.table_cap || n > 65535)
    throw Error(ErrorKind::OrderCapExceeded, "order " + std::to_string(n) + " exceeds table cap " +
                                                 std::to_string(limits.table_cap));
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw Error(ErrorKind::NotClosed, "row " + std::to_string(a) + " has wrong length");
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n)
        throw Error(ErrorKind::NotClosed, "entry (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
      flat[a * n + b] = static_cast<Elem>(table[a][b]);
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (flat[a] != a || flat[a * n] != a)
      throw Error(ErrorKind::NoIdentity, "row 0 and column 0 must be the identity permutation");
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b)
      found = flat[a * n + b] == 0 && flat[b * n + a] == 0;
    if (!found) throw Error(ErrorKind::NoInverse, "element " + std::to_string(a) + " has no two-sided inverse");
  }
  if (!labels.empty() && labels.size() != n) throw Error(ErrorKind::NotClosed, "label count differs from order");

  // Light's test: the elements s with (xs)y = x(sy) for all x, y form a
  // submagma, so checking a set whose left-normed products cover the table
  // suffices.
  auto at = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(flat[a * n + b]); };
  std::vector<char> reached(n, 0);
  std::vector<std::size_t> reached_list{0};
  reached[0] = 1;
  std::vector<std::size_t> gens;
  for (std::size_t cand = 1; cand < n && reached_list.size() < n; ++cand) {
    if (reached[cand]) continue;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (at(at(x, cand), y) != at(x, at(cand, y)))
          throw Error(ErrorKind::NotAssociative, "(" + std::to_string(x) + "*" + std::to_string(cand) + ")*" +
                                                     std::to_string(y) + " != " + std::to_string(x) + "*(" +
                                                     std::to_string(cand) + "*" + std::to_string(y) + ")");
    gens.push_back(cand);
    for (std::size_t i = 0; i < reached_list.size(); ++i)
      for (std::size_t s : gens) {
        std::size_t z = at(reached_list[i], s);
        if (!reached[z]) {
          reached[z] = 1;
          reached_list.push_back(z);
        }
      }
  }
  // Associative with identity and two-sided inverses: a group, hence Latin.
  return trusted(std::move(flat), n, std::move(labels));
}

inline Group Group::from_permutations(const std::vector<Permutation>& generators, const Limits& limits) {
  std::size_t degree = 0;
  for (const auto& p : generators) degree = std::max(degree, p.degree());
  std::vector<Permutation> gens;
  for (const auto& p : generators) {
    std::vector<bool> hit(p.degree(), false);
    for (auto v : p.image) {
      if (v >= p.degree() || hit[v]) throw Error(ErrorKind::InvalidPermutation, "generator is not a bijection");
      hit[v] = true;
    }
    gens.push_back(p.extended(degree));
  }
  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::unordered_map<Permutation, std::size_t, PermutationHash> index{{elems[0], 0}};
  std::vector<std::size_t> parent{0}, via{0};
  std::vector<std::size_t> right;  // right[i * ngens + k] = index of elems[i] * gens[k]
  const std::size_t ngens = gens.size();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t k = 0; k < ngens; ++k) {
      Permutation y = elems[i] * gens[k];
      auto [it, inserted] = index.try_emplace(y, elems.size());
      if (inserted) {
        if (elems.size() + 1 > limits.table_cap || elems.size() + 1 > 65535)
          throw Error(ErrorKind::OrderCapExceeded, "permutation closure exceeds table cap " +
                                                       std::to_string(limits.table_cap));
        elems.push_back(std::move(y));
        parent.push_back(i);
        via.push_back(k);
      }
      right.push_back(it->second);
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    flat[a * n] = static_cast<Elem>(a);
    for (std::size_t b = 1; b < n; ++b) {
      // elems[b] = elems[parent[b]] * gens[via[b]], and parent[b] < b.
      std::size_t left = flat[a * n + parent[b]];
      flat[a * n + b] = static_cast<Elem>(right[left * ngens + via[b]]);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elems) labels.push_back(p.to_cycles());
  return trusted(std::move(flat), n, std::move(labels));
}

/// Conjugacy classes ordered by smallest member; each class sorted ascending.
inline std::vector<std::vector<Elem>> conjugacy_classes(const Group& g) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Elem>> classes;
  for (std::size_t a = 0; a < n; ++a) {
    if (seen[a]) continue;
    std::vector<Elem> cls{static_cast<Elem>(a)};
    seen[a] = 1;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (Elem s : g.generators()) {
        Elem y = g.conj(cls[i], s);
        if (!seen[y]) {
          seen[y] = 1;
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

inline Fingerprint fingerprint(const Group& g) {
  Fingerprint f;
  f.order = g.order();
  f.exponent = g.exponent();
  f.abelian = g.is_abelian();
  for (const auto& c : conjugacy_classes(g)) f.class_sizes.push_back(c.size());
  std::sort(f.class_sizes.begin(), f.class_sizes.end());
  f.element_orders = g.element_orders();
  std::sort(f.element_orders.begin(), f.element_orders.end());
  return f;
}

/// Direct product; (x, y) has index x * |Y| + y.
inline Group direct_product(const Group& x, const Group& y, const Limits& limits = {}) {
  const std::size_t nx = x.order(), ny = y.order(), n = nx * ny;
  if (n > limits.table_cap || n > 65535)
    throw Error(ErrorKind::OrderCapExceeded, "direct product order " + std::to_string(n) + " exceeds table cap");
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t xa = a / ny, ya = a % ny, xb = b / ny, yb = b % ny;
      flat[a * n + b] = static_cast<Elem>(x.mul(static_cast<Elem>(xa), static_cast<Elem>(xb)) * ny +
                                          y.mul(static_cast<Elem>(ya), static_cast<Elem>(yb)));
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t a = 0; a < n; ++a)
    labels.push_back("(" + x.label(static_cast<Elem>(a / ny)) + "," + y.label(static_cast<Elem>(a % ny)) + ")");
  return Group::trusted(std::move(flat), n, std::move(labels));
}

}  // namespace fgt
