#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chimeraq/instances.hpp"

namespace chimeraq {

// The four instance families. The two QUBO families draw every weight
// directly; the two Ising families draw +-1 couplers and fields, and map to
// the "weakly correlated" (with fields) or "strongly correlated" (zero
// field) QUBO families under ising_to_qubo.
enum class GenFamily {
  uniform_pm1,      // QUBO, every weight uniform on {-1,+1}
  uniform_int_range,  // QUBO, every weight uniform on integers [lo,hi]
  ising_with_fields,  // Ising, J and h uniform on {-1,+1}
  ising_zero_field,   // Ising, same couplers as ising_with_fields, h = 0
};

const char* gen_family_name(GenFamily f);
std::optional<GenFamily> parse_gen_family(const std::string& name);

struct GenSpec {
  GenFamily family = GenFamily::uniform_pm1;
  int k = 1;
  std::optional<std::vector<NodeId>> node_subset;
  std::optional<std::pair<long long, long long>> range;  // uniform_int_range only
  std::uint64_t seed = 0;
};

// Draw order is fixed: edge weights first in canonical edge order, then node
// weights in node order. The zero-field family therefore shares its couplers
// with the with-fields family under the same seed.
QuboInstance gen_qubo_pm1(int k, std::uint64_t seed,
                          std::optional<std::vector<NodeId>> subset = std::nullopt);
QuboInstance gen_qubo_range(int k, long long lo, long long hi, std::uint64_t seed,
                            std::optional<std::vector<NodeId>> subset = std::nullopt);
IsingInstance gen_ising_fields(int k, std::uint64_t seed,
                               std::optional<std::vector<NodeId>> subset = std::nullopt);
IsingInstance gen_ising_zero_field(int k, std::uint64_t seed,
                                   std::optional<std::vector<NodeId>> subset = std::nullopt);

using AnyInstance = std::variant<QuboInstance, IsingInstance>;

AnyInstance generate(const GenSpec& spec);

}  // namespace chimeraq
