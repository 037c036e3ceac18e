#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace fgt {

/// Fixed-width set of element indices of one group, one bit per element.
class ElementSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  ElementSet() = default;
  explicit ElementSet(std::size_t width) : width_(width), words_((width + kWordBits - 1) / kWordBits, 0) {}

  static ElementSet full(std::size_t width) {
    ElementSet s(width);
    for (std::size_t i = 0; i < width; ++i) s.set(i);
    return s;
  }

  std::size_t width() const noexcept { return width_; }
  const std::vector<Word>& words() const noexcept { return words_; }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const noexcept {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool intersects(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  ElementSet& operator&=(const ElementSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) noexcept { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) noexcept { return a |= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
    return a.width_ == b.width_ && a.words_ == b.words_;
  }

  /// Lexicographic order on ascending member lists: at the first element where
  /// the sets differ, the set containing it sorts first.
  friend bool lex_less(const ElementSet& a, const ElementSet& b) noexcept {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      Word diff = a.words_[i] ^ b.words_[i];
      if (diff) {
        Word lowest = diff & (~diff + 1);
        return (a.words_[i] & lowest) != 0;
      }
    }
    return false;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w) {
        std::size_t bit = static_cast<std::size_t>(std::countr_zero(w));
        f(i * kWordBits + bit);
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  /// Lowest member index, or width() when empty.
  std::size_t first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return width_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull ^ width_;
    for (Word w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

  /// Hex string, least significant word first; used in reports and cache files.
  std::string to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(width_ / 4 + 1);
    for (std::size_t i = 0; i < width_; i += 4) {
      unsigned nibble = 0;
      for (std::size_t j = 0; j < 4 && i + j < width_; ++j)
        if (test(i + j)) nibble |= 1u << j;
      out.push_back(kDigits[nibble]);
    }
    return out;
  }

  static bool from_hex(const std::string& hex, std::size_t width, ElementSet& out) {
    if (hex.size() != (width + 3) / 4) return false;
    out = ElementSet(width);
    for (std::size_t k = 0; k < hex.size(); ++k) {
      char c = hex[k];
      unsigned nibble;
      if (c >= '0' && c <= '9') nibble = static_cast<unsigned>(c - '0');
      else if (c >= 'a' && c <= 'f') nibble = static_cast<unsigned>(c - 'a' + 10);
      else return false;
      for (std::size_t j = 0; j < 4; ++j) {
        if (!(nibble >> j & 1u)) continue;
        if (4 * k + j >= width) return false;
        out.set(4 * k + j);
      }
    }
    return true;
  }

 private:
  std::size_t width_ = 0;
  std::vector<Word> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace fgt
