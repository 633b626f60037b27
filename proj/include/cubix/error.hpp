#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cubix {

// Every failure the library reports carries one of these codes. The CLI maps
// them onto its exit-code taxonomy, so the list is append-only.
enum class ErrorCode {
  // wallspace
  EmptyPointSet,
  DuplicatePoint,
  EmptyHalfspace,
  OverlappingHalfspaces,
  IncompleteCover,
  DuplicateWall,
  UnknownPoint,
  UnknownWall,
  SameWall,
  EmptySubset,
  InvalidPartition,
  PartitionNotPairwiseCrossing,
  // complex
  Disconnected,
  LoopEdge,
  DuplicateEdge,
  DuplicateVertex,
  UnknownEndpoint,
  UnknownVertex,
  NotMedian,
  SideCountNot2,
  UnknownHyperplane,
  NotConnected,
  DimLimitExceeded,
  NotInjective,
  NotSimplicial,
  // dual
  LimitExceeded,
  NotSubset,
  InvalidOrientation,
  // actions / axis
  InvalidAction,
  AdjacencyViolation,
  HasInversions,
  NotTotalAction,
  FixedVertexFound,
  EscapesWindow,
  NoStableVertexInWindow,
  NotTotallyOrdered,
  // shared
  GuardExceeded,
  ParseError,
  VerbUnknown,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cubix
