#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cubix/kernels/bitops.hpp"

namespace cubix {

// Fixed-width dynamic bitset. Bits beyond size() are always zero, which the
// kernels rely on for counts and subset tests.
class Bitset {
 public:
  using Word = kernels::Word;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  static Bitset full(std::size_t size);
  static Bitset from_indices(std::size_t size, std::span<const std::uint32_t> indices);

  std::size_t size() const noexcept { return size_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::span<const Word> words() const noexcept { return words_; }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  void assign(std::size_t i, bool value) noexcept {
    if (value) set(i); else reset(i);
  }

  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool any() const noexcept { return !none(); }

  bool intersects(const Bitset& other) const noexcept;
  // this ⊆ other
  bool is_subset_of(const Bitset& other) const noexcept;
  std::size_t count_and(const Bitset& other) const noexcept;
  std::size_t count_xor(const Bitset& other) const noexcept;
  static std::size_t count_and3(const Bitset& a, const Bitset& b, const Bitset& c) noexcept;

  Bitset& operator&=(const Bitset& other) noexcept;
  Bitset& operator|=(const Bitset& other) noexcept;
  Bitset& operator^=(const Bitset& other) noexcept;
  // set difference
  Bitset& operator-=(const Bitset& other) noexcept;
  Bitset complement() const;

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  // Index of the lowest set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const noexcept;
  std::size_t find_first() const noexcept { return find_next(0); }
  std::vector<std::uint32_t> indices() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        const auto bit = static_cast<std::size_t>(__builtin_ctzll(bits));
        f(static_cast<std::uint32_t>(w * kWordBits + bit));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const Bitset& a, const Bitset& b) = default;

  // Order by the lowest differing index: the set lacking that index is
  // smaller. For orientations (bit = Right) this is the lexicographic order of
  // side strings with L < R.
  static bool index_lex_less(const Bitset& a, const Bitset& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  void clear_tail() noexcept;

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

}  // namespace cubix
