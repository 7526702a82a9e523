#include "kempe/error.hpp"

#include <cstdio>

#include "kempe/hash.hpp"

namespace kempe {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SimpleGraphViolation: return "SimpleGraphViolation";
    case ErrorKind::MalformedRotation: return "MalformedRotation";
    case ErrorKind::NoValidGraph: return "NoValidGraph";
    case ErrorKind::NotAWalk: return "NotAWalk";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::AnchorColorMismatch: return "AnchorColorMismatch";
    case ErrorKind::Unsatisfiable: return "Unsatisfiable";
    case ErrorKind::NotIndependent: return "NotIndependent";
    case ErrorKind::Overlap: return "Overlap";
    case ErrorKind::InvalidPrefix: return "InvalidPrefix";
    case ErrorKind::StateCapExceeded: return "StateCapExceeded";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::TemplateNotContained: return "TemplateNotContained";
    case ErrorKind::NotGood: return "NotGood";
    case ErrorKind::NotFourColorable: return "NotFourColorable";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string to_hex(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

}  // namespace kempe
