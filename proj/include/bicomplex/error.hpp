#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bcx {

enum class Errc {
  NotInvertible,
  NonFiniteOperand,
  PreconditionViolation,
  InvalidFraction,
  InvalidArgument,
  NotStrongPole,
  EmptyGrid,
  NotHolomorphic,
  NotInvertibleSeparation,
  ParseError,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NonFiniteOperand: return "NonFiniteOperand";
    case Errc::PreconditionViolation: return "PreconditionViolation";
    case Errc::InvalidFraction: return "InvalidFraction";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotStrongPole: return "NotStrongPole";
    case Errc::EmptyGrid: return "EmptyGrid";
    case Errc::NotHolomorphic: return "NotHolomorphic";
    case Errc::NotInvertibleSeparation: return "NotInvertibleSeparation";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bcx
