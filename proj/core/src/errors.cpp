#include "acsl/errors.hpp"

namespace acsl {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid_diagram: return "invalid_diagram";
    case ErrorKind::invalid_link: return "invalid_link";
    case ErrorKind::index: return "index";
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::order_mismatch: return "order_mismatch";
    case ErrorKind::zero_inverse: return "zero_inverse";
    case ErrorKind::denominator_zero: return "denominator_zero";
    case ErrorKind::term_limit: return "term_limit";
  }
  return "unknown";
}

}  // namespace acsl
