#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace partcx {

enum class ErrorKind {
  invalid_argument,
  invalid_corner,
  inadmissible_transfer,
  unknown_vertex,
  not_a_clique,
  empty_complex,
  invalid_loop,
  theorem_violation,
  budget_exceeded,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::invalid_corner: return "invalid-corner";
    case ErrorKind::inadmissible_transfer: return "inadmissible-transfer";
    case ErrorKind::unknown_vertex: return "unknown-vertex";
    case ErrorKind::not_a_clique: return "not-a-clique";
    case ErrorKind::empty_complex: return "empty-complex";
    case ErrorKind::invalid_loop: return "invalid-loop";
    case ErrorKind::theorem_violation: return "theorem-violation";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
  }
  return "unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace partcx
