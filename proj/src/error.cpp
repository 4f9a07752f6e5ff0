#include "subcode/error.hpp"

namespace subcode {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::usage: return "usage";
    case ErrorKind::zero_divisor: return "zero_divisor";
    case ErrorKind::not_codeword: return "not_codeword";
    case ErrorKind::not_in_subgroup: return "not_in_subgroup";
    case ErrorKind::inconsistent: return "inconsistent";
    case ErrorKind::consistency: return "consistency";
    case ErrorKind::budget_exceeded: return "budget_exceeded";
  }
  return "unknown";
}

}  // namespace subcode
