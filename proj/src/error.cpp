#include "cubix/error.hpp"

namespace cubix {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyPointSet: return "EmptyPointSet";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::EmptyHalfspace: return "EmptyHalfspace";
    case ErrorCode::OverlappingHalfspaces: return "OverlappingHalfspaces";
    case ErrorCode::IncompleteCover: return "IncompleteCover";
    case ErrorCode::DuplicateWall: return "DuplicateWall";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::UnknownWall: return "UnknownWall";
    case ErrorCode::SameWall: return "SameWall";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::PartitionNotPairwiseCrossing: return "PartitionNotPairwiseCrossing";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotMedian: return "NotMedian";
    case ErrorCode::SideCountNot2: return "SideCountNot2";
    case ErrorCode::UnknownHyperplane: return "UnknownHyperplane";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::DimLimitExceeded: return "DimLimitExceeded";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::NotSubset: return "NotSubset";
    case ErrorCode::InvalidOrientation: return "InvalidOrientation";
    case ErrorCode::InvalidAction: return "InvalidAction";
    case ErrorCode::AdjacencyViolation: return "AdjacencyViolation";
    case ErrorCode::HasInversions: return "HasInversions";
    case ErrorCode::NotTotalAction: return "NotTotalAction";
    case ErrorCode::FixedVertexFound: return "FixedVertexFound";
    case ErrorCode::EscapesWindow: return "EscapesWindow";
    case ErrorCode::NoStableVertexInWindow: return "NoStableVertexInWindow";
    case ErrorCode::NotTotallyOrdered: return "NotTotallyOrdered";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VerbUnknown: return "VerbUnknown";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorCode::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace cubix
