#include <atomic>
#include <cstdlib>
#include <string_view>

#include "cubix/kernels/bitops.hpp"

namespace cubix::kernels {

#ifdef CUBIX_HAVE_AVX2
const BitKernels& avx2_table() noexcept;
#endif
#ifdef CUBIX_HAVE_NEON
const BitKernels& neon_table() noexcept;
#endif

namespace {

std::atomic<const BitKernels*> g_active{nullptr};

const BitKernels* detect() noexcept {
  const char* env = std::getenv("CUBIX_ISA");
  const std::string_view want = env ? env : "auto";
  if (want == "scalar") return &scalar_kernels();
  if (want == "avx2") {
    if (const auto* k = avx2_kernels()) return k;
    return &scalar_kernels();
  }
  if (want == "neon") {
    if (const auto* k = neon_kernels()) return k;
    return &scalar_kernels();
  }
  if (const auto* k = avx2_kernels()) return k;
  if (const auto* k = neon_kernels()) return k;
  return &scalar_kernels();
}

}  // namespace

const BitKernels* avx2_kernels() noexcept {
#ifdef CUBIX_HAVE_AVX2
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported ? &avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const BitKernels* neon_kernels() noexcept {
#ifdef CUBIX_HAVE_NEON
  return &neon_table();
#else
  return nullptr;
#endif
}

const BitKernels& active() noexcept {
  const BitKernels* k = g_active.load(std::memory_order_acquire);
  if (!k) {
    k = detect();
    g_active.store(k, std::memory_order_release);
  }
  return *k;
}

bool select_isa(Isa isa) noexcept {
  const BitKernels* k = nullptr;
  switch (isa) {
    case Isa::Scalar: k = &scalar_kernels(); break;
    case Isa::Avx2: k = avx2_kernels(); break;
    case Isa::Neon: k = neon_kernels(); break;
  }
  if (!k) return false;
  g_active.store(k, std::memory_order_release);
  return true;
}

void reset_isa() noexcept { g_active.store(detect(), std::memory_order_release); }

}  // namespace cubix::kernels
