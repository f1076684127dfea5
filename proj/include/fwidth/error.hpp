#pragma once

#include <stdexcept>
#include <string>

namespace fwidth {

enum class Errc {
  parse,
  alphabet_cap,
  alphabet_mismatch,
  rank_out_of_range,
  cap_exceeded,
  crosscheck_mismatch,
  empty_sequence,
  invalid_argument,
};

inline const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::parse: return "parse error";
    case Errc::alphabet_cap: return "alphabet cap exceeded";
    case Errc::alphabet_mismatch: return "alphabet mismatch";
    case Errc::rank_out_of_range: return "permutation rank out of range";
    case Errc::cap_exceeded: return "cap exceeded";
    case Errc::crosscheck_mismatch: return "crosscheck mismatch";
    case Errc::empty_sequence: return "empty sequence";
    case Errc::invalid_argument: return "invalid argument";
  }
  return "unknown error";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can tell cap violations from malformed input.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fwidth
