#pragma once

#include <stdexcept>
#include <string>

namespace galois_span {

enum class Errc {
  IndexOutOfRange,
  InvalidGraph,
  DisconnectedGraph,
  TooLarge,
  ClosureTooLarge,
  InvalidTable,
  OrderTooLarge,
  NotNormal,
  NotASubgroup,
  NoSuitablePrime,
  MismatchedGroup,
  NotRationalValued,
  GeneratorDependent,
  NotAbelian,
  NotGalois,
  NoConnectedAssignmentFound,
  InvalidVoltage,
  InvalidRepresentation,
  NotBouquet,
  EulerZero,
  LengthMismatch,
  InterpolationMismatch,
  NotSquare,
  WrongGroup,
  NotABrauerRelation,
  NonCyclicOnEulerZero,
  InvalidPoset,
  ParseError,
  InvalidArgument,
  InternalInconsistency,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::DisconnectedGraph: return "DisconnectedGraph";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ClosureTooLarge: return "ClosureTooLarge";
    case Errc::InvalidTable: return "InvalidTable";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::NoSuitablePrime: return "NoSuitablePrime";
    case Errc::MismatchedGroup: return "MismatchedGroup";
    case Errc::NotRationalValued: return "NotRationalValued";
    case Errc::GeneratorDependent: return "GeneratorDependent";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::NotGalois: return "NotGalois";
    case Errc::NoConnectedAssignmentFound: return "NoConnectedAssignmentFound";
    case Errc::InvalidVoltage: return "InvalidVoltage";
    case Errc::InvalidRepresentation: return "InvalidRepresentation";
    case Errc::NotBouquet: return "NotBouquet";
    case Errc::EulerZero: return "EulerZero";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::InterpolationMismatch: return "InterpolationMismatch";
    case Errc::NotSquare: return "NotSquare";
    case Errc::WrongGroup: return "WrongGroup";
    case Errc::NotABrauerRelation: return "NotABrauerRelation";
    case Errc::NonCyclicOnEulerZero: return "NonCyclicOnEulerZero";
    case Errc::InvalidPoset: return "InvalidPoset";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace galois_span
