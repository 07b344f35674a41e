#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace prodquot {

enum class ErrorCode {
  invalid_group,
  invalid_parameters,
  cap_exceeded,
  syntax_error,
  unknown_generator,
  empty_generator_list,
  catalog_parse,
  order_mismatch,
  duplicate_isomorphism_class,
  manifest_mismatch,
  order_incomplete,
  not_found,
  nonhyperbolic_signature,
  non_integral_genus,
  non_integral_invariant,
  inapplicable_move,
  index_out_of_range,
  empty_orbit_problem,
  catalog_incomplete,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` distinguishes failure modes.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
public:
  ParseError(ErrorCode code, const std::string& what, int line, int column)
      : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_group: return "invalid_group";
    case ErrorCode::invalid_parameters: return "invalid_parameters";
    case ErrorCode::cap_exceeded: return "cap_exceeded";
    case ErrorCode::syntax_error: return "syntax_error";
    case ErrorCode::unknown_generator: return "unknown_generator";
    case ErrorCode::empty_generator_list: return "empty_generator_list";
    case ErrorCode::catalog_parse: return "catalog_parse";
    case ErrorCode::order_mismatch: return "order_mismatch";
    case ErrorCode::duplicate_isomorphism_class: return "duplicate_isomorphism_class";
    case ErrorCode::manifest_mismatch: return "manifest_mismatch";
    case ErrorCode::order_incomplete: return "order_incomplete";
    case ErrorCode::not_found: return "not_found";
    case ErrorCode::nonhyperbolic_signature: return "nonhyperbolic_signature";
    case ErrorCode::non_integral_genus: return "non_integral_genus";
    case ErrorCode::non_integral_invariant: return "non_integral_invariant";
    case ErrorCode::inapplicable_move: return "inapplicable_move";
    case ErrorCode::index_out_of_range: return "index_out_of_range";
    case ErrorCode::empty_orbit_problem: return "empty_orbit_problem";
    case ErrorCode::catalog_incomplete: return "catalog_incomplete";
  }
  return "unknown";
}

}  // namespace prodquot
