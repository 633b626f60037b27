#pragma once

#include <cstdint>
#include <limits>

namespace cubix {

using PointId = std::uint32_t;
using WallId = std::uint32_t;
using VertexId = std::uint32_t;
using HyperplaneId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

enum class Side : std::uint8_t { Left = 0, Right = 1 };

constexpr Side opposite(Side s) noexcept { return s == Side::Left ? Side::Right : Side::Left; }
constexpr char side_char(Side s) noexcept { return s == Side::Left ? 'L' : 'R'; }

}  // namespace cubix
