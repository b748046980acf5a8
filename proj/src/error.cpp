#include "chimeraq/error.hpp"

namespace chimeraq {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_parameter: return "invalid-parameter";
    case ErrorCode::unknown_node: return "unknown-node";
    case ErrorCode::incomplete_assignment: return "incomplete-assignment";
    case ErrorCode::invalid_range: return "invalid-range";
    case ErrorCode::invalid_subset: return "invalid-subset";
    case ErrorCode::too_large: return "too-large";
    case ErrorCode::k_too_large: return "k-too-large";
    case ErrorCode::non_chimera_topology: return "non-chimera-topology";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::non_chimera_edge: return "non-chimera-edge";
    case ErrorCode::duplicate_entry: return "duplicate-entry";
    case ErrorCode::malformed_section: return "malformed-section";
    case ErrorCode::unknown_variable: return "unknown-variable";
    case ErrorCode::duplicate_bound: return "duplicate-bound";
    case ErrorCode::empty_sample: return "empty-sample";
    case ErrorCode::nonpositive_sample: return "nonpositive-sample-for-geomean";
  }
  return "unknown-error";
}

}  // namespace chimeraq
