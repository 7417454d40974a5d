#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace popboards {

// Failure codes for domain errors. The names appear verbatim in CLI error
// reports, so they are part of the tool's output contract.
enum class Errc {
  NotWeaklyDecreasing,
  NonPositivePart,
  InfeasibleBoard,
  NotAPermutation,
  CellOutsideBoard,
  CycleDetected,
  LabelOutOfRange,
  ApexOutOfRange,
  InvalidParam,
  NotAvoiding,
  SoundnessViolation,
  LetterOutOfRange,
  EmptyValidSet,
  StateInconsistent,
  ParamMismatch,
  CapExceeded,
  EquivalenceViolated,
  ParseError,
};

constexpr std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NotWeaklyDecreasing: return "NotWeaklyDecreasing";
    case Errc::NonPositivePart: return "NonPositivePart";
    case Errc::InfeasibleBoard: return "InfeasibleBoard";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::CellOutsideBoard: return "CellOutsideBoard";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::LabelOutOfRange: return "LabelOutOfRange";
    case Errc::ApexOutOfRange: return "ApexOutOfRange";
    case Errc::InvalidParam: return "InvalidParam";
    case Errc::NotAvoiding: return "NotAvoiding";
    case Errc::SoundnessViolation: return "SoundnessViolation";
    case Errc::LetterOutOfRange: return "LetterOutOfRange";
    case Errc::EmptyValidSet: return "EmptyValidSet";
    case Errc::StateInconsistent: return "StateInconsistent";
    case Errc::ParamMismatch: return "ParamMismatch";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::EquivalenceViolated: return "EquivalenceViolated";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, long detail = -1)
      : std::runtime_error(std::move(message)), code_(code), detail_(detail) {}

  Errc code() const noexcept { return code_; }
  std::string_view code_name() const noexcept { return errc_name(code_); }
  // Offending column/step/letter index for errors that have one, -1 otherwise.
  long detail() const noexcept { return detail_; }

 private:
  Errc code_;
  long detail_;
};

[[noreturn]] inline void fail(Errc code, std::string message, long detail = -1) {
  throw Error(code, std::move(message), detail);
}

}  // namespace popboards
