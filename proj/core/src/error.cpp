#include "synorder/error.hpp"

namespace synorder {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::ParseError: return "PARSE_ERROR";
    case Errc::InvalidAutomaton: return "INVALID_AUTOMATON";
    case Errc::ArityExceeded: return "ARITY_EXCEEDED";
    case Errc::ArityMismatch: return "ARITY_MISMATCH";
    case Errc::BadParameters: return "BAD_PARAMETERS";
    case Errc::NotAnOrder: return "NOT_AN_ORDER";
    case Errc::NotLinear: return "NOT_LINEAR";
    case Errc::OverlappingSupports: return "OVERLAPPING_SUPPORTS";
    case Errc::ComplementNotInfinite: return "COMPLEMENT_NOT_INFINITE";
    case Errc::ComplementNotFinite: return "COMPLEMENT_NOT_FINITE";
    case Errc::InfiniteAntichain: return "INFINITE_ANTICHAIN";
    case Errc::InconsistentOrder: return "INCONSISTENT_ORDER";
  }
  return "UNKNOWN";
}

}  // namespace synorder
