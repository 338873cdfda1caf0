#pragma once

#include <stdexcept>
#include <string>

namespace domina {

// Failure kinds. The names below appear verbatim in CLI error output.
enum class Errc {
  InvalidVertex,
  LoopRejected,
  UnsupportedOrder,
  MalformedGraph6,
  InvalidProbability,
  EnumerationTooLarge,
  EmptyGraph,
  NotInSet,
  NotDominating,
  TotalDominationUndefined,
  ConnectedDominationUndefined,
  TooSmall,
  PartitionInvalid,
  SizeBoundViolated,
  EmptyPartForNonIsolated,
  CrossEdgeViolation,
  VLastUnderConnected,
  DecompositionTooLarge,
  NotGammaSet,
  WrongCardinality,
  GraphTooSmall,
  Disconnected,
  ScanTooLarge,
};

inline const char* to_string(Errc code) {
  switch (code) {
    case Errc::InvalidVertex: return "InvalidVertex";
    case Errc::LoopRejected: return "LoopRejected";
    case Errc::UnsupportedOrder: return "UnsupportedOrder";
    case Errc::MalformedGraph6: return "MalformedGraph6";
    case Errc::InvalidProbability: return "InvalidProbability";
    case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::NotInSet: return "NotInSet";
    case Errc::NotDominating: return "NotDominating";
    case Errc::TotalDominationUndefined: return "TotalDominationUndefined";
    case Errc::ConnectedDominationUndefined: return "ConnectedDominationUndefined";
    case Errc::TooSmall: return "TooSmall";
    case Errc::PartitionInvalid: return "PartitionInvalid";
    case Errc::SizeBoundViolated: return "SizeBoundViolated";
    case Errc::EmptyPartForNonIsolated: return "EmptyPartForNonIsolated";
    case Errc::CrossEdgeViolation: return "CrossEdgeViolation";
    case Errc::VLastUnderConnected: return "VLastUnderConnected";
    case Errc::DecompositionTooLarge: return "DecompositionTooLarge";
    case Errc::NotGammaSet: return "NotGammaSet";
    case Errc::WrongCardinality: return "WrongCardinality";
    case Errc::GraphTooSmall: return "GraphTooSmall";
    case Errc::Disconnected: return "Disconnected";
    case Errc::ScanTooLarge: return "ScanTooLarge";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  Errc code() const { return code_; }
  // Message without the code prefix, for re-wrapping.
  const std::string& detail() const { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace domina
