#include "lappoly/error.hpp"

namespace lappoly {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::MalformedEdgeList: return "MalformedEdgeList";
    case ErrorCode::EndpointOutOfRange: return "EndpointOutOfRange";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::OddCoefficientPresent: return "OddCoefficientPresent";
    case ErrorCode::NotRealRooted: return "NotRealRooted";
    case ErrorCode::NotTuSubgraph: return "NotTuSubgraph";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::NotTreeOrUnicyclic: return "NotTreeOrUnicyclic";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::MaxDegreeTooSmall: return "MaxDegreeTooSmall";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::VertexNotInH: return "VertexNotInH";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::MinDegreeNotOne: return "MinDegreeNotOne";
  }
  return "Unknown";
}

}  // namespace lappoly
