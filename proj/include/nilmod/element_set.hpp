#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace nilmod {

/// Subset of a fixed finite universe {0, ..., universe-1}, stored as a bitset.
/// Iteration and `to_vector()` always yield ascending indices, which is the
/// canonical order used for every serialized set.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  template <class Range>
  static ElementSet from(std::size_t universe, const Range& indices) {
    ElementSet s(universe);
    for (auto i : indices) s.insert(static_cast<std::uint32_t>(i));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::uint32_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void insert(std::uint32_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::uint32_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }
  bool is_full() const noexcept { return size() == universe_; }

  bool subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  /// Elements of this set not in `o`.
  ElementSet minus(const ElementSet& o) const {
    ElementSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }
  ElementSet complement() const {
    ElementSet r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Lexicographic comparison of ascending element lists, then size first:
  /// the canonical order for lists of sets.
  friend bool canonical_less(const ElementSet& a, const ElementSet& b) {
    auto sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    auto va = a.to_vector(), vb = b.to_vector();
    return va < vb;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<std::uint32_t>(wi * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  std::optional<std::uint32_t> first() const noexcept {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
      if (words_[wi])
        return static_cast<std::uint32_t>(wi * 64 + static_cast<std::size_t>(std::countr_zero(words_[wi])));
    return std::nullopt;
  }

  /// First element not in the set, or universe() when full.
  std::uint32_t first_missing() const noexcept {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      if (~words_[wi]) {
        auto i = wi * 64 + static_cast<std::size_t>(std::countr_one(words_[wi]));
        return static_cast<std::uint32_t>(std::min(i, universe_));
      }
    }
    return static_cast<std::uint32_t>(universe_);
  }

  std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(size());
    for_each([&](std::uint32_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull ^ universe_;
    for (auto w : words_) {
      h ^= static_cast<std::size_t>(w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    }
    return h;
  }

 private:
  void trim() noexcept {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace nilmod
