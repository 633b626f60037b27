#pragma once

// Word-level bitset kernels. Every halfspace, vertex set and orientation in
// the library is a packed bitset, and the hot loops (pairwise halfspace
// intersection, interval triple intersection, Hamming distance) reduce to the
// primitives below.
//
// A scalar reference table is always present. Vector tables are compiled in
// per ISA and chosen once at runtime; the choice can be pinned with the
// CUBIX_ISA environment variable (scalar | avx2 | neon | auto) or with
// select_isa() in tests.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace cubix::kernels {

using Word = std::uint64_t;

enum class Isa { Scalar, Avx2, Neon };

struct BitKernels {
  Isa isa;
  std::string_view name;
  // (a & b) != 0 over n words
  bool (*intersects)(const Word* a, const Word* b, std::size_t n);
  // (a & ~b) == 0 over n words
  bool (*is_subset)(const Word* a, const Word* b, std::size_t n);
  std::size_t (*count)(const Word* a, std::size_t n);
  std::size_t (*count_and)(const Word* a, const Word* b, std::size_t n);
  std::size_t (*count_xor)(const Word* a, const Word* b, std::size_t n);
  std::size_t (*count_and3)(const Word* a, const Word* b, const Word* c, std::size_t n);
};

const BitKernels& scalar_kernels() noexcept;

// nullptr when the variant is not compiled in or the CPU lacks the ISA.
const BitKernels* avx2_kernels() noexcept;
const BitKernels* neon_kernels() noexcept;

// The table every Bitset operation goes through.
const BitKernels& active() noexcept;

// Pins the active table. Returns false (and leaves the selection unchanged)
// when the requested ISA is unavailable.
bool select_isa(Isa isa) noexcept;

// Re-runs automatic detection (honouring CUBIX_ISA).
void reset_isa() noexcept;

}  // namespace cubix::kernels
