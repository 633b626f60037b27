// aarch64 only; NEON is baseline there so no runtime probe is needed.

#include <arm_neon.h>

#include "cubix/kernels/bitops.hpp"

namespace cubix::kernels {
namespace {

inline std::size_t popcount_q(uint64x2_t v) {
  return static_cast<std::size_t>(vaddlvq_u8(vcntq_u8(vreinterpretq_u8_u64(v))));
}

bool intersects(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t x = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    if (vgetq_lane_u64(x, 0) | vgetq_lane_u64(x, 1)) return true;
  }
  for (; i < n; ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

bool is_subset(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t x = vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    if (vgetq_lane_u64(x, 0) | vgetq_lane_u64(x, 1)) return false;
  }
  for (; i < n; ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

std::size_t count(const Word* a, std::size_t n) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) total += popcount_q(vld1q_u64(a + i));
  for (; i < n; ++i) total += static_cast<std::size_t>(__builtin_popcountll(a[i]));
  return total;
}

std::size_t count_and(const Word* a, const Word* b, std::size_t n) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) total += popcount_q(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < n; ++i) total += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
  return total;
}

std::size_t count_xor(const Word* a, const Word* b, std::size_t n) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) total += popcount_q(veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < n; ++i) total += static_cast<std::size_t>(__builtin_popcountll(a[i] ^ b[i]));
  return total;
}

std::size_t count_and3(const Word* a, const Word* b, const Word* c, std::size_t n) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t ab = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    total += popcount_q(vandq_u64(ab, vld1q_u64(c + i)));
  }
  for (; i < n; ++i) total += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i] & c[i]));
  return total;
}

constexpr BitKernels kNeon{Isa::Neon, "neon", intersects, is_subset, count,
                           count_and, count_xor, count_and3};

}  // namespace

const BitKernels& neon_table() noexcept { return kNeon; }

}  // namespace cubix::kernels
