#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fgt/error.hpp"
#include "fgt/group.hpp"
#include "fgt/permutation.hpp"

namespace fgt {

/// Version of the constructor language; reports name groups by expression.
inline constexpr int kExprGrammarVersion = 1;

namespace catalog {

inline std::string power_label(const char* base, std::size_t i) {
  if (i == 0) return "e";
  if (i == 1) return base;
  return std::string(base) + "^" + std::to_string(i);
}

inline void check_cap(std::size_t order, const Limits& limits) {
  if (order > limits.table_cap || order > 65535)
    throw Error(ErrorKind::OrderCapExceeded,
                "order " + std::to_string(order) + " exceeds table cap " + std::to_string(limits.table_cap));
}

inline Group cyclic(std::size_t n, const Limits& limits = {}) {
  if (n == 0) throw Error(ErrorKind::ParseError, "C(0) is not a group");
  check_cap(n, limits);
  std::vector<Elem> flat(n * n);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(power_label("a", a));
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = static_cast<Elem>((a + b) % n);
  }
  return Group::trusted(std::move(flat), n, std::move(labels));
}

/// Dihedral group of order `order`; r^i s^j has index i + (order/2) * j.
inline Group dihedral(std::size_t order, const Limits& limits = {}) {
  if (order < 2 || order % 2) throw Error(ErrorKind::ParseError, "D(n) needs even n >= 2");
  check_cap(order, limits);
  const std::size_t n = order / 2;
  std::vector<Elem> flat(order * order);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < order; ++x) {
    std::size_t i = x % n, a = x / n;
    labels.push_back(a ? (i ? power_label("r", i) + "s" : "s") : power_label("r", i));
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t k = y % n, b = y / n;
      std::size_t rot = a ? (i + n - k) % n : (i + k) % n;
      flat[x * order + y] = static_cast<Elem>(rot + n * ((a + b) % 2));
    }
  }
  return Group::trusted(std::move(flat), order, std::move(labels));
}

/// Dicyclic group of order `order` = 4m: <a, x | a^2m, x^2 = a^m, x a x^-1 = a^-1>.
inline Group dicyclic(std::size_t order, const Limits& limits = {}) {
  if (order < 4 || order % 4) throw Error(ErrorKind::ParseError, "Dic(n) needs n divisible by 4");
  check_cap(order, limits);
  const std::size_t n2 = order / 2, m = order / 4;
  std::vector<Elem> flat(order * order);
  std::vector<std::string> labels;
  for (std::size_t u = 0; u < order; ++u) {
    std::size_t i = u % n2, j = u / n2;
    labels.push_back(j ? (i ? power_label("a", i) + "x" : "x") : power_label("a", i));
    for (std::size_t v = 0; v < order; ++v) {
      std::size_t k = v % n2, l = v / n2;
      std::size_t exp, xs;
      if (j == 0) {
        exp = (i + k) % n2;
        xs = l;
      } else if (l == 0) {
        exp = (i + n2 - k) % n2;
        xs = 1;
      } else {
        exp = (i + n2 - k + m) % n2;
        xs = 0;
      }
      flat[u * order + v] = static_cast<Elem>(exp + n2 * xs);
    }
  }
  return Group::trusted(std::move(flat), order, std::move(labels));
}

/// Modular group of order 16: <a, b | a^8, b^2, b a b^-1 = a^5>.
inline Group modular16() {
  const std::size_t order = 16;
  std::vector<Elem> flat(order * order);
  std::vector<std::string> labels;
  for (std::size_t u = 0; u < order; ++u) {
    std::size_t i = u % 8, j = u / 8;
    labels.push_back(j ? (i ? power_label("a", i) + "b" : "b") : power_label("a", i));
    for (std::size_t v = 0; v < order; ++v) {
      std::size_t k = v % 8, l = v / 8;
      std::size_t exp = (i + k * (j ? 5 : 1)) % 8;
      flat[u * order + v] = static_cast<Elem>(exp + 8 * ((j + l) % 2));
    }
  }
  return Group::trusted(std::move(flat), order, std::move(labels));
}

/// SL(2,3) as 2x2 matrices over F_3 of determinant 1, identity first, the
/// rest in lexicographic order of (a, b, c, d).
inline Group sl23() {
  using M = std::array<int, 4>;
  std::vector<M> mats{{1, 0, 0, 1}};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          M m{a, b, c, d};
          if (((a * d - b * c) % 3 + 3) % 3 == 1 && m != mats[0]) mats.push_back(m);
        }
  const std::size_t n = mats.size();
  auto index = [&](const M& m) {
    for (std::size_t i = 0; i < n; ++i)
      if (mats[i] == m) return static_cast<Elem>(i);
    return Elem{0};
  };
  std::vector<Elem> flat(n * n);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) {
    const M& p = mats[x];
    labels.push_back("[" + std::to_string(p[0]) + std::to_string(p[1]) + ";" + std::to_string(p[2]) +
                     std::to_string(p[3]) + "]");
    for (std::size_t y = 0; y < n; ++y) {
      const M& q = mats[y];
      M r{(p[0] * q[0] + p[1] * q[2]) % 3, (p[0] * q[1] + p[1] * q[3]) % 3, (p[2] * q[0] + p[3] * q[2]) % 3,
          (p[2] * q[1] + p[3] * q[3]) % 3};
      flat[x * n + y] = index(r);
    }
  }
  return Group::trusted(std::move(flat), n, std::move(labels));
}

inline Group symmetric(std::size_t n, const Limits& limits = {}) {
  if (n == 0) throw Error(ErrorKind::ParseError, "S(0) is not supported");
  if (n <= 1) return Group{};
  std::string cycle = "(";
  for (std::size_t i = 1; i <= n; ++i) cycle += std::to_string(i) + (i < n ? " " : ")");
  return Group::from_permutations({parse_cycles(cycle, n), parse_cycles("(1 2)", n)}, limits);
}

inline Group alternating(std::size_t n, const Limits& limits = {}) {
  if (n == 0) throw Error(ErrorKind::ParseError, "A(0) is not supported");
  if (n <= 2) return Group{};
  std::vector<Permutation> gens;
  for (std::size_t k = 3; k <= n; ++k) gens.push_back(parse_cycles("(1 2 " + std::to_string(k) + ")", n));
  return Group::from_permutations(gens, limits);
}

inline Group elementary_abelian(std::size_t p, std::size_t k, const Limits& limits = {}) {
  if (!is_prime(p)) throw Error(ErrorKind::ParseError, "E(p,k) needs prime p");
  Group g;
  for (std::size_t i = 0; i < k; ++i) g = direct_product(g, cyclic(p, limits), limits);
  return g;
}

}  // namespace catalog

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, const Limits& limits) : text_(text), limits_(limits) {}

  Group parse() {
    Group g = parse_product();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, why + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Group parse_product() {
    Group g = parse_atom();
    while (accept('x')) g = direct_product(g, parse_atom(), limits_);
    return g;
  }

  std::string name() {
    skip();
    std::size_t start = pos_;
    // Letters then digits, so "Q8xC(2)" splits as Q8 x C(2).
    // No group name contains 'x', which is reserved for the product.
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != 'x')
      ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t number() {
    skip();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a number");
    std::size_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(text_[pos_++] - '0');
      if (v > 1000000) fail("number too large");
    }
    return v;
  }

  std::vector<std::size_t> args() {
    std::vector<std::size_t> out;
    if (!accept('(')) return out;
    if (accept(')')) return out;
    do out.push_back(number());
    while (accept(','));
    expect(')');
    return out;
  }

  /// Text up to the bracket matching the one at pos_.
  std::string_view bracketed() {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != '[') fail("expected '['");
    std::size_t depth = 0, start = pos_;
    for (; pos_ < text_.size(); ++pos_) {
      if (text_[pos_] == '[') ++depth;
      if (text_[pos_] == ']' && --depth == 0) {
        ++pos_;
        return text_.substr(start, pos_ - start);
      }
    }
    fail("unterminated '['");
  }

  Group parse_atom() {
    std::string n = name();
    if (n.empty()) fail("expected a group name");
    if (n == "perm") {
      std::string_view body = bracketed();
      return Group::from_permutations(parse_permutation_list(body.substr(1, body.size() - 2)), limits_);
    }
    if (n == "table") {
      std::string_view body = bracketed();
      Group::Table table;
      try {
        table = nlohmann::json::parse(body).get<Group::Table>();
      } catch (const nlohmann::json::exception& e) {
        fail(std::string("bad table literal: ") + e.what());
      }
      return Group::from_table(table, {}, limits_);
    }
    auto a = args();
    auto need = [&](std::size_t count) {
      if (a.size() != count) fail(n + " takes " + std::to_string(count) + " argument(s)");
    };
    if (n == "C") { need(1); return catalog::cyclic(a[0], limits_); }
    if (n == "D") { need(1); return catalog::dihedral(a[0], limits_); }
    if (n == "Dic") { need(1); return catalog::dicyclic(a[0], limits_); }
    if (n == "S") { need(1); return catalog::symmetric(a[0], limits_); }
    if (n == "A") { need(1); return catalog::alternating(a[0], limits_); }
    if (n == "E") {
      need(2);
      std::size_t order = 1;
      for (std::size_t i = 0; i < a[1]; ++i) {
        order *= a[0];
        catalog::check_cap(order, limits_);
      }
      return catalog::elementary_abelian(a[0], a[1], limits_);
    }
    if (n == "Q8") { need(0); return catalog::dicyclic(8, limits_); }
    if (n == "SL23") { need(0); return catalog::sl23(); }
    if (n == "M16") { need(0); return catalog::modular16(); }
    fail("unknown group name '" + n + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Limits limits_;
};

}  // namespace detail

/// Evaluates a constructor expression such as "S(4)", "C(2)xD(8)",
/// "perm[(1 2 3),(1 2)]" or "table[[0,1],[1,0]]".
inline Group build_from_expr(std::string_view text, const Limits& limits = {}) {
  return detail::ExprParser(text, limits).parse();
}

inline nlohmann::json group_to_json(const Group& g) {
  Group::Table table(g.order(), std::vector<std::size_t>(g.order()));
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) table[a][b] = g.mul(static_cast<Elem>(a), static_cast<Elem>(b));
  nlohmann::json j{{"order", g.order()}, {"table", table}};
  if (g.has_labels()) j["labels"] = g.labels();
  return j;
}

inline Group group_from_json(const nlohmann::json& j, const Limits& limits = {}) {
  try {
    auto table = j.at("table").get<Group::Table>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    if (j.contains("order") && j.at("order").get<std::size_t>() != table.size())
      throw Error(ErrorKind::ParseError, "order field disagrees with table size");
    return Group::from_table(table, std::move(labels), limits);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("bad group JSON: ") + e.what());
  }
}

}  // namespace fgt
