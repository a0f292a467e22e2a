#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lappoly {

/// Every failure the library reports carries one of these codes. The names
/// are part of the CLI's machine-readable error object.
enum class ErrorCode {
  MalformedGraph6,
  MalformedEdgeList,
  EndpointOutOfRange,
  DuplicateEdge,
  LoopEdge,
  BadParameter,
  VertexOutOfRange,
  NotDivisible,
  OddCoefficientPresent,
  NotRealRooted,
  NotTuSubgraph,
  InternalInvariantViolation,
  NotTreeOrUnicyclic,
  NotConnected,
  NoEdges,
  MaxDegreeTooSmall,
  DegreeMismatch,
  VertexNotInH,
  LengthMismatch,
  NonpositiveWeight,
  MinDegreeNotOne,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lappoly
