#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tcolor {

enum class ErrorCode {
  NotPrime,
  InvalidArgument,
  DivisionByZero,
  ModulusMismatch,
  MissingVariable,
  ZeroPolynomial,
  DuplicateAbscissa,
  WrongSampleCount,
  ExponentTooLarge,
  BudgetExceeded,
  ParseError,
  LoopEdge,
  DuplicateEdge,
  PartialAssignment,
  EmptyCandidateSet,
  NoValidM1,
  InvariantViolation,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Evaluation budget for one check. Every expensive routine charges the
// number of primitive evaluations it is about to perform; crossing the limit
// throws BudgetExceeded, which callers turn into an Inconclusive outcome.
class Budget {
 public:
  static constexpr std::uint64_t kUnlimited = ~std::uint64_t{0};

  explicit Budget(std::uint64_t limit = kUnlimited) : limit_(limit) {}

  void charge(std::uint64_t units, const char* what);
  bool can_afford(std::uint64_t units) const;

  std::uint64_t limit() const { return limit_; }
  std::uint64_t spent() const { return spent_; }

 private:
  std::uint64_t limit_;
  std::uint64_t spent_ = 0;
};

}  // namespace tcolor
