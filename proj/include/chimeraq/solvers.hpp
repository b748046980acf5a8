#pragma once

// Exact optimization (Gray-code brute force, Chimera-frontier dynamic
// programming) and the randomized local-search heuristic, for both instance
// forms.  QUBO instances are solved through the exact x4-scaled spin
// conversion, so all arithmetic stays in integers.

#include <chrono>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "chimeraq/instances.hpp"

namespace chimeraq {

using AnyAssignment = std::variant<SpinAssignment, BinaryAssignment>;

struct SolveResult {
  long long best_value = 0;
  AnyAssignment best_assignment;
  bool proven_optimal = false;
  std::uint64_t iterations = 0;               // solver-specific work counter
  std::chrono::duration<double> elapsed{0.0};
};

inline constexpr int brute_force_default_cap = 26;
inline constexpr int dp_default_max_k = 4;

// Exhaustive minimization in single-bit-flip (Gray-code) order with
// incremental objective updates; ties broken toward the lexicographically
// smallest assignment in node-index order (all-(-1) / all-0 first).
// Throws too-large when the instance has more than `cap` nodes.
SolveResult solve_brute_force(const IsingInstance& inst,
                              int cap = brute_force_default_cap);
SolveResult solve_brute_force(const QuboInstance& inst,
                              int cap = brute_force_default_cap);

// Exact minimization by sweeping unit cells in row-major order.  The frontier
// state holds the left-partition spins of the k most recently completed cells
// plus the right-partition spins of the preceding cell (4k+4 bits).  Nodes of
// C_k absent from the instance are treated as present with zero weight.
// Throws k-too-large when k exceeds max_k (memory grows as 2^(4k+4)).
SolveResult solve_chimera_dp(const IsingInstance& inst,
                             int max_k = dp_default_max_k);
SolveResult solve_chimera_dp(const QuboInstance& inst,
                             int max_k = dp_default_max_k);

// Stopping rule for one local-search run.  At least one of max_moves /
// max_millis must be set (stop_at_value alone cannot guarantee termination).
// A "move" is either one steepest-descent flip or one whole perturbation.
struct Budget {
  std::optional<std::uint64_t> max_moves;
  std::optional<double> max_millis;     // wall clock, per restart
  std::optional<long long> stop_at_value;  // stop once best_value <= this
};

struct HeuristicParams {
  int restarts = 1;
  // Perturbation flips ceil(n * pert_num / pert_den) distinct random nodes.
  long long pert_num = 1;
  long long pert_den = 30;
  Budget budget;
  std::uint64_t seed = 0;
};

// Hooks into the local-search trajectory, used by tests and the trajectory
// hash.  Callbacks fire synchronously on the solving thread.
struct SearchObserver {
  virtual ~SearchObserver() = default;
  virtual void on_start(const SpinAssignment& /*start*/, long long /*value*/) {}
  virtual void on_descent_flip(NodeId /*node*/, long long /*value_after*/) {}
  virtual void on_perturbation(const std::vector<NodeId>& /*flipped*/,
                               const SpinAssignment& /*before*/,
                               long long /*value_before*/) {}
  virtual void on_new_best(long long /*value*/) {}
};

// One seeded run: random +-1 start, steepest single-flip descent (strict
// improvement, ties to the lowest node index), perturbation of
// ceil(n * pert_num / pert_den) random distinct nodes when no improving flip
// exists, best-seen tracking at every flip.  Deterministic per seed when the
// budget is not wall-clock based.
SolveResult solve_local_search(const IsingInstance& inst,
                               const HeuristicParams& params,
                               SearchObserver* observer = nullptr);
SolveResult solve_local_search(const QuboInstance& inst,
                               const HeuristicParams& params,
                               SearchObserver* observer = nullptr);

// `restarts` independent runs seeded seed+0 ... seed+restarts-1, aggregated
// order-independently: the minimum best_value wins, ties going to the lowest
// seed index.  When stop_at_value is set, the lowest seed index reaching the
// target wins and later restarts may be skipped — the result is the same as
// if all restarts had run, because no restart can beat a reached target that
// is only ever set to a certified optimum; with a target strictly above the
// optimum the documented contract is "lowest seed index reaching the target".
SolveResult run_restarts(const IsingInstance& inst,
                         const HeuristicParams& params);
SolveResult run_restarts(const QuboInstance& inst,
                         const HeuristicParams& params);

}  // namespace chimeraq
