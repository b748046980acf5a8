#pragma once

#include <stdexcept>
#include <string>

namespace chimeraq {

// Error signals used across the library. Tests and the CLI dispatch on the
// code rather than on message text.
enum class ErrorCode {
  invalid_parameter,
  unknown_node,
  incomplete_assignment,
  invalid_range,
  invalid_subset,
  too_large,
  k_too_large,
  non_chimera_topology,
  parse_error,
  non_chimera_edge,
  duplicate_entry,
  malformed_section,
  unknown_variable,
  duplicate_bound,
  empty_sample,
  nonpositive_sample,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace chimeraq
