#pragma once

#include <stdexcept>
#include <string>

namespace synorder {

enum class Errc {
  ParseError,
  InvalidAutomaton,
  ArityExceeded,
  ArityMismatch,
  BadParameters,
  NotAnOrder,
  NotLinear,
  OverlappingSupports,
  ComplementNotInfinite,
  ComplementNotFinite,
  InfiniteAntichain,
  InconsistentOrder,
};

const char* to_string(Errc code);

// Domain error with a stable code; the CLI maps every code to exit status 2.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace synorder
