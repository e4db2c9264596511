#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace acsl {

enum class ErrorKind {
  parse,             // malformed PD text or JSON
  invalid_diagram,   // PD code violates an edge/component invariant
  invalid_link,      // FramedLink violates an invariant (asymmetry, sizes)
  index,             // component or crossing index out of range
  invalid_argument,  // precondition on an operation argument
  order_mismatch,    // CycNum operands over different root orders
  zero_inverse,      // inverse of the zero field element
  denominator_zero,  // surgery normalisation Gauss sum vanishes
  term_limit,        // float oracle asked to sum too many terms
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace acsl
