#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ppspace {

/// Dense bit-vector over a fixed universe [0, universe()). Every quantifier
/// loop in the checkers reduces to word operations on these sets, so this is
/// the performance-critical type of the whole engine.
///
/// Invariant: bits at positions >= universe() are always zero.
class IndexSet {
public:
  IndexSet() = default;

  explicit IndexSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  static IndexSet full_set(std::size_t universe) {
    IndexSet s(universe);
    s.fill();
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool test(std::uint32_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }

  void set(std::uint32_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::uint32_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  void clear() {
    for (Word& w : words_) w = 0;
  }

  void fill() {
    for (Word& w : words_) w = ~Word{0};
    mask_tail();
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_full() const { return count() == universe_; }

  /// other is a subset of this set.
  bool contains_all(const IndexSet& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (other.words_[k] & ~words_[k]) return false;
    return true;
  }

  bool intersects(const IndexSet& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  /// |this ∩ other|, stopping as soon as the count reaches `bound`.
  std::size_t intersection_count_capped(const IndexSet& other, std::size_t bound) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      c += static_cast<std::size_t>(std::popcount(words_[k] & other.words_[k]));
      if (c >= bound) return c;
    }
    return c;
  }

  void intersect_with(const IndexSet& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  }

  void unite_with(const IndexSet& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  }

  friend IndexSet operator&(IndexSet a, const IndexSet& b) {
    a.intersect_with(b);
    return a;
  }

  friend IndexSet operator|(IndexSet a, const IndexSet& b) {
    a.unite_with(b);
    return a;
  }

  bool operator==(const IndexSet&) const = default;

  /// Strict ordering usable as a map key; compares universes, then words.
  bool operator<(const IndexSet& other) const {
    if (universe_ != other.universe_) return universe_ < other.universe_;
    return words_ < other.words_;
  }

  /// Least member, or -1 when empty.
  std::int64_t first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] != 0)
        return static_cast<std::int64_t>(k * kWordBits +
                                         static_cast<std::size_t>(std::countr_zero(words_[k])));
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word w = words_[k];
      while (w != 0) {
        const int bit = std::countr_zero(w);
        f(static_cast<std::uint32_t>(k * kWordBits + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::uint32_t i) { out.push_back(i); });
    return out;
  }

private:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  void mask_tail() {
    const std::size_t rem = universe_ % kWordBits;
    if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace ppspace
