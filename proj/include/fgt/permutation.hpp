#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fgt/error.hpp"

namespace fgt {

/// Permutation of {0, ..., degree-1}; image[i] is where point i goes.
/// Products compose left to right: (a * b)(x) = b(a(x)).
struct Permutation {
  std::vector<std::uint16_t> image;

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.image.resize(degree);
    for (std::size_t i = 0; i < degree; ++i) p.image[i] = static_cast<std::uint16_t>(i);
    return p;
  }

  std::size_t degree() const noexcept { return image.size(); }

  Permutation extended(std::size_t degree) const {
    Permutation p = *this;
    for (std::size_t i = p.image.size(); i < degree; ++i) p.image.push_back(static_cast<std::uint16_t>(i));
    return p;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    Permutation out;
    out.image.resize(a.image.size());
    for (std::size_t i = 0; i < a.image.size(); ++i) out.image[i] = b.image[a.image[i]];
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; identity is "()".
  std::string to_cycles() const {
    std::string out;
    std::vector<bool> seen(image.size(), false);
    for (std::size_t start = 0; start < image.size(); ++start) {
      if (seen[start] || image[start] == start) continue;
      out += '(';
      std::size_t x = start;
      bool first = true;
      while (!seen[x]) {
        seen[x] = true;
        if (!first) out += ' ';
        out += std::to_string(x + 1);
        first = false;
        x = image[x];
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p.image) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

namespace detail {

inline void skip_space(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

}  // namespace detail

/// Parses one permutation written as a product of disjoint-or-not cycles,
/// e.g. "(1 2 3)(4 5)" or "(1,2)". Points are 1-based. Cycles are composed
/// left to right. The degree is the largest point mentioned (or min_degree).
inline Permutation parse_cycles(std::string_view text, std::size_t min_degree = 0) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t pos = 0;
  std::size_t degree = min_degree;
  detail::skip_space(text, pos);
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw Error(ErrorKind::InvalidPermutation, "expected '(' in \"" + std::string(text) + "\"");
    ++pos;
    std::vector<std::size_t> cycle;
    for (;;) {
      detail::skip_space(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw Error(ErrorKind::InvalidPermutation, "bad cycle in \"" + std::string(text) + "\"");
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        value = value * 10 + static_cast<std::size_t>(text[pos++] - '0');
      if (value == 0 || value > 60000)
        throw Error(ErrorKind::InvalidPermutation, "point out of range in \"" + std::string(text) + "\"");
      for (std::size_t v : cycle)
        if (v == value - 1)
          throw Error(ErrorKind::InvalidPermutation, "repeated point in cycle \"" + std::string(text) + "\"");
      cycle.push_back(value - 1);
      if (value > degree) degree = value;
    }
    cycles.push_back(std::move(cycle));
    detail::skip_space(text, pos);
  }
  Permutation result = Permutation::identity(degree);
  for (const auto& cycle : cycles) {
    Permutation c = Permutation::identity(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i)
      c.image[cycle[i]] = static_cast<std::uint16_t>(cycle[(i + 1) % cycle.size()]);
    result = result * c;
  }
  return result;
}

/// Parses a comma-separated list of permutations, e.g. "(1 2 3), (1 2)".
/// Commas inside parentheses separate points, not generators.
inline std::vector<Permutation> parse_permutation_list(std::string_view text) {
  std::vector<Permutation> out;
  std::size_t depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view piece = text.substr(start, end - start);
    std::size_t p = 0;
    detail::skip_space(piece, p);
    if (p < piece.size()) out.push_back(parse_cycles(piece));
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')') {
      if (depth == 0) throw Error(ErrorKind::InvalidPermutation, "unbalanced ')'");
      --depth;
    } else if (text[i] == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  if (depth != 0) throw Error(ErrorKind::InvalidPermutation, "unbalanced '('");
  flush(text.size());
  std::size_t degree = 0;
  for (const auto& p : out) degree = std::max(degree, p.degree());
  for (auto& p : out) p = p.extended(degree);
  return out;
}

}  // namespace fgt
