#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsp4 {

enum class Errc {
  NotDivisible,
  DivisionByZero,
  ParseError,
  Inconsistent,
  Underdetermined,
  InvalidIndex,
  NotDominant,
  NotInSpan,
  NonIntegralCoefficient,
  SamePrime,
  EmptyWindow,
  ModulusMismatch,
  PrecisionExhausted,
  InvalidArgument,
};

const char* errc_name(Errc code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(Errc::ParseError, what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace gsp4
