#include "tcolor/error.hpp"

namespace tcolor {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::MissingVariable: return "MissingVariable";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DuplicateAbscissa: return "DuplicateAbscissa";
    case ErrorCode::WrongSampleCount: return "WrongSampleCount";
    case ErrorCode::ExponentTooLarge: return "ExponentTooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::PartialAssignment: return "PartialAssignment";
    case ErrorCode::EmptyCandidateSet: return "EmptyCandidateSet";
    case ErrorCode::NoValidM1: return "NoValidM1";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void Budget::charge(std::uint64_t units, const char* what) {
  if (!can_afford(units)) {
    throw Error(ErrorCode::BudgetExceeded,
                std::string(what) + " needs " + std::to_string(units) + " evaluations, " +
                    std::to_string(limit_ - spent_) + " left");
  }
  spent_ += units;
}

bool Budget::can_afford(std::uint64_t units) const {
  return units <= limit_ - spent_;
}

}  // namespace tcolor
