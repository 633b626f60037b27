#include "cubix/bitset.hpp"

#include <algorithm>
#include <cassert>

namespace cubix {

Bitset Bitset::full(std::size_t size) {
  Bitset b(size);
  std::fill(b.words_.begin(), b.words_.end(), ~Word{0});
  b.clear_tail();
  return b;
}

Bitset Bitset::from_indices(std::size_t size, std::span<const std::uint32_t> indices) {
  Bitset b(size);
  for (auto i : indices) b.set(i);
  return b;
}

void Bitset::clear_tail() noexcept {
  const std::size_t rem = size_ % kWordBits;
  if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
}

std::size_t Bitset::count() const noexcept { return kernels::active().count(words_.data(), words_.size()); }

bool Bitset::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool Bitset::intersects(const Bitset& other) const noexcept {
  assert(other.size_ == size_);
  return kernels::active().intersects(words_.data(), other.words_.data(), words_.size());
}

bool Bitset::is_subset_of(const Bitset& other) const noexcept {
  assert(other.size_ == size_);
  return kernels::active().is_subset(words_.data(), other.words_.data(), words_.size());
}

std::size_t Bitset::count_and(const Bitset& other) const noexcept {
  assert(other.size_ == size_);
  return kernels::active().count_and(words_.data(), other.words_.data(), words_.size());
}

std::size_t Bitset::count_xor(const Bitset& other) const noexcept {
  assert(other.size_ == size_);
  return kernels::active().count_xor(words_.data(), other.words_.data(), words_.size());
}

std::size_t Bitset::count_and3(const Bitset& a, const Bitset& b, const Bitset& c) noexcept {
  assert(a.size_ == b.size_ && b.size_ == c.size_);
  return kernels::active().count_and3(a.words_.data(), b.words_.data(), c.words_.data(),
                                      a.words_.size());
}

Bitset& Bitset::operator&=(const Bitset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Bitset& Bitset::operator^=(const Bitset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

Bitset& Bitset::operator-=(const Bitset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

Bitset Bitset::complement() const {
  Bitset out(*this);
  for (auto& w : out.words_) w = ~w;
  out.clear_tail();
  return out;
}

std::size_t Bitset::find_next(std::size_t from) const noexcept {
  if (from >= size_) return size_;
  std::size_t w = from / kWordBits;
  Word bits = words_[w] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (bits) return w * kWordBits + static_cast<std::size_t>(__builtin_ctzll(bits));
    if (++w >= words_.size()) return size_;
    bits = words_[w];
  }
}

std::vector<std::uint32_t> Bitset::indices() const {
  std::vector<std::uint32_t> out;
  out.reserve(count());
  for_each([&](std::uint32_t i) { out.push_back(i); });
  return out;
}

bool Bitset::index_lex_less(const Bitset& a, const Bitset& b) noexcept {
  assert(a.size_ == b.size_);
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const Word diff = a.words_[w] ^ b.words_[w];
    if (diff) {
      const Word lowest = diff & (~diff + 1);
      return (a.words_[w] & lowest) == 0;
    }
  }
  return false;
}

std::size_t Bitset::hash() const noexcept {
  // FNV-1a over words, then a finalizer.
  std::uint64_t h = 1469598103934665603ULL ^ size_;
  for (Word w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

}  // namespace cubix
