#pragma once

// Batch experiment harness: generate an instance grid (one cell per k in the
// requested list), solve every instance with one method, and aggregate
// per-cell statistics.  Value columns are deterministic given the spec;
// wall-clock columns are measurements and sit apart from the deterministic
// portion.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chimeraq/generators.hpp"
#include "chimeraq/solvers.hpp"
#include "chimeraq/stats.hpp"

namespace chimeraq {

enum class Method { brute, dp, heur, heur_vs_dp };

const char* method_name(Method m);
std::optional<Method> parse_method(const std::string& name);

struct ExperimentSpec {
  GenFamily family = GenFamily::ising_with_fields;
  std::vector<int> ks;
  int per_cell = 50;
  Method method = Method::dp;
  std::optional<std::pair<long long, long long>> range;  // uniform_int_range only
  HeuristicParams heur;  // heur methods; per-instance seeds derive from heur.seed
  int brute_cap = brute_force_default_cap;
  int dp_max_k = dp_default_max_k;
  std::uint64_t base_seed = 0;  // instance i in every cell uses base_seed + i
};

struct InstanceResult {
  GenFamily family{};
  int k = 0;
  int index = 0;
  std::uint64_t seed = 0;
  std::size_t nodes = 0, edges = 0;
  std::optional<long long> value;  // best value found; empty when the solve failed
  std::optional<long long> exact;  // heur_vs_dp: the DP-certified optimum
  std::optional<long long> gap;    // value - exact, >= 0
  double time_ms = 0.0;            // wall clock of the solve
  std::string error;               // error code name when the solve failed
};

struct CellReport {
  GenFamily family{};
  int k = 0;
  std::size_t nodes = 0, edges = 0;
  std::size_t solved = 0, failed = 0;
  std::optional<RunStats> time_stats;  // over successful solves, milliseconds
};

struct ExperimentReport {
  ExperimentSpec spec;
  std::vector<InstanceResult> instances;
  std::vector<CellReport> cells;
};

// Solver errors are captured per instance (error column) without aborting
// the batch.  An empty k-list yields an empty report.
ExperimentReport run_experiment(const ExperimentSpec& spec);

// Aligned text table, one row per (family, k) cell.
std::string render_table(const ExperimentReport& report);

// Per-instance comma-separated rows.  With include_timings = false the output
// is byte-identical across runs of the same spec.
std::string render_csv(const ExperimentReport& report, bool include_timings = true);

// Re-reads render_csv output (with timings) and rebuilds the per-cell rows.
std::vector<CellReport> recompute_cells_from_csv(const std::string& csv);

}  // namespace chimeraq
