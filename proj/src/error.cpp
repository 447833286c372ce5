#include "qaoa/error.hpp"

namespace qaoa {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidProbability: return "InvalidProbability";
    case Errc::AttemptsExhausted: return "AttemptsExhausted";
    case Errc::ParseError: return "ParseError";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::QubitOutOfRange: return "QubitOutOfRange";
    case Errc::ControlEqualsTarget: return "ControlEqualsTarget";
    case Errc::InvalidAngle: return "InvalidAngle";
    case Errc::Disconnected: return "Disconnected";
    case Errc::EdgeMismatch: return "EdgeMismatch";
    case Errc::TooLarge: return "TooLarge";
    case Errc::TooManyQubits: return "TooManyQubits";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::InvalidReduction: return "InvalidReduction";
    case Errc::InvalidDevice: return "InvalidDevice";
    case Errc::InvalidTrials: return "InvalidTrials";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace qaoa
