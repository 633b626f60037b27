#pragma once

// Line-oriented text formats. Each file opens with a versioned header line;
// '#' starts a comment; blank lines are ignored. Names use letters, digits
// and _ + . only.
//
//   cubix wallspace v1        cubix complex v1         cubix action v1
//   points: a,b,c,d           vertices: a,b,c          generator t
//   a,b|c,d                   a-b                      a->b
//   a,c|b,d                   b-c                      b->c
//                             interior: b   (optional)
//
//   cubix partition v1        (one class of wall ids per line)
//   0,2
//   1

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubix/actions.hpp"
#include "cubix/dual.hpp"
#include "cubix/wallspace.hpp"

namespace cubix::io {

// Throws ParseError with 1-based line and column, or the domain error of the
// constructed value.
Wallspace parse_wallspace(std::string_view text);
std::string write_wallspace(const Wallspace& ws);

struct ComplexFile {
  CubicalComplex complex;
  std::optional<Bitset> interior;
};

ComplexFile parse_complex(std::string_view text);
std::string write_complex(const CubicalComplex& complex, const Bitset* interior = nullptr);

// Vertices left out of a generator's pairs are unmapped.
std::vector<Automorphism> parse_action(std::string_view text, const CubicalComplex& complex);
std::string write_action(const CubicalComplex& complex, const std::vector<Automorphism>& generators);

std::vector<std::vector<WallId>> parse_partition(std::string_view text);
std::string write_partition(const std::vector<std::vector<WallId>>& partition);

// Side vector per dual vertex and hyperplane id per wall.
std::string write_dual_table(const DualComplex& dual);

bool valid_name(std::string_view name);

}  // namespace cubix::io
