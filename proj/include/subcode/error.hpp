#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subcode {

enum class ErrorKind {
  usage,             // malformed input or violated precondition
  zero_divisor,      // division or inversion by zero
  not_codeword,      // subspace is not a codeword of the code at hand
  not_in_subgroup,   // discrete log target outside the cyclic group
  inconsistent,      // congruence system without a solution
  consistency,       // internal cross-check failed (e.g. rho_inv on a non-image)
  budget_exceeded,   // factorization or search effort cap hit
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorKind::usage, what);
}

}  // namespace subcode
