#include <algorithm>
#include <chrono>
#include <string>

#include "chimeraq/rng.hpp"
#include "chimeraq/solvers.hpp"
#include "solver_common.hpp"

namespace chimeraq {

namespace {

using Clock = std::chrono::steady_clock;

// Search state over node positions with incrementally maintained local
// fields: field[p] = h_p + sum_u J_pu s_u, so flipping p changes the
// objective by -2 s_p field[p] and costs O(degree) to repair.
struct SearchState {
  detail::FlatGraph g;
  std::vector<std::int8_t> s;
  std::vector<long long> field;
  long long value = 0;

  void randomize(SplitMix64& rng) {
    const int n = g.n;
    s.resize(n);
    for (int p = 0; p < n; ++p) s[p] = static_cast<std::int8_t>(rng.pm1());
    field = g.h;
    value = 0;
    for (int p = 0; p < n; ++p) {
      value += g.h[p] * s[p];
      for (int i = g.off[p]; i < g.off[p + 1]; ++i) {
        const int u = g.nbr[i];
        field[p] += g.w[i] * s[u];
        if (u > p) value += g.w[i] * s[p] * s[u];
      }
    }
  }

  long long gain(int p) const { return -2LL * s[p] * field[p]; }

  void flip(int p) {
    value += gain(p);
    s[p] = static_cast<std::int8_t>(-s[p]);
    const long long sp = s[p];
    for (int i = g.off[p]; i < g.off[p + 1]; ++i) field[g.nbr[i]] += 2 * g.w[i] * sp;
  }

  SpinAssignment assignment() const { return SpinAssignment{s}; }
};

}  // namespace

SolveResult solve_local_search(const IsingInstance& inst, const HeuristicParams& params,
                               SearchObserver* observer) {
  const auto start = Clock::now();
  const Topology& t = inst.graph.topology;
  const int n = static_cast<int>(t.node_count());
  if (n < 1)
    throw Error(ErrorCode::invalid_parameter, "local search needs at least one node");
  if (params.pert_den <= 0 || params.pert_num <= 0)
    throw Error(ErrorCode::invalid_parameter, "perturbation fraction must be positive");
  if (!params.budget.max_moves && !params.budget.max_millis)
    throw Error(ErrorCode::invalid_parameter,
                "budget requires max_moves or max_millis to guarantee termination");

  // ceil(n * num / den), clamped to [1, n].
  const long long raw =
      (static_cast<long long>(n) * params.pert_num + params.pert_den - 1) /
      params.pert_den;
  const int pert_size = static_cast<int>(std::clamp<long long>(raw, 1, n));

  SplitMix64 rng(params.seed);
  SearchState st;
  st.g = detail::flatten(inst);
  st.randomize(rng);
  if (observer) observer->on_start(st.assignment(), st.value);

  long long best = st.value;
  SpinAssignment best_assignment = st.assignment();
  if (observer) observer->on_new_best(best);

  const auto out_of_time = [&]() {
    return params.budget.max_millis &&
           std::chrono::duration<double, std::milli>(Clock::now() - start).count() >=
               *params.budget.max_millis;
  };
  const auto target_hit = [&]() {
    return params.budget.stop_at_value && best <= *params.budget.stop_at_value;
  };
  const auto note_state = [&]() {
    if (st.value < best) {
      best = st.value;
      best_assignment = st.assignment();
      if (observer) observer->on_new_best(best);
    }
  };

  std::vector<int> pool(n);
  std::vector<NodeId> flipped;
  std::uint64_t moves = 0;
  while (!target_hit() &&
         !(params.budget.max_moves && moves >= *params.budget.max_moves) &&
         !out_of_time()) {
    // Steepest descent: most negative gain, ties to the lowest node index.
    int pick = -1;
    long long pick_gain = 0;
    for (int p = 0; p < n; ++p) {
      const long long g = st.gain(p);
      if (g < pick_gain) {
        pick_gain = g;
        pick = p;
      }
    }
    ++moves;
    if (pick >= 0) {
      st.flip(pick);
      if (observer) observer->on_descent_flip(t.nodes()[pick], st.value);
      note_state();
      continue;
    }

    // Local minimum: flip a uniformly random subset of pert_size distinct
    // nodes (partial Fisher-Yates over the position pool).
    for (int p = 0; p < n; ++p) pool[p] = p;
    for (int i = 0; i < pert_size; ++i) {
      const int j = i + static_cast<int>(rng.uniform_index(
                            static_cast<std::size_t>(n - i)));
      std::swap(pool[i], pool[j]);
    }
    if (observer) {
      flipped.assign(pert_size, 0);
      for (int i = 0; i < pert_size; ++i) flipped[i] = t.nodes()[pool[i]];
      observer->on_perturbation(flipped, st.assignment(), st.value);
    }
    for (int i = 0; i < pert_size; ++i) {
      st.flip(pool[i]);
      note_state();
    }
  }

  SolveResult res;
  res.best_value = best;
  res.best_assignment = std::move(best_assignment);
  res.proven_optimal = false;
  res.iterations = moves;
  res.elapsed = Clock::now() - start;
  return res;
}

SolveResult solve_local_search(const QuboInstance& inst, const HeuristicParams& params,
                               SearchObserver* observer) {
  // The heuristic runs in spin space; a budget target, if set, is translated
  // through the same exact x4 scaling as the values.
  const ScaledIsing scaled = qubo_to_ising(inst);
  HeuristicParams p = params;
  if (params.budget.stop_at_value)
    p.budget.stop_at_value =
        *params.budget.stop_at_value * ScaledIsing::scale - scaled.offset;
  SolveResult result = solve_local_search(scaled.ising, p, observer);
  const auto& spins = std::get<SpinAssignment>(result.best_assignment);
  result.best_assignment = to_binary(spins);
  result.best_value = (result.best_value + scaled.offset) / ScaledIsing::scale;
  return result;
}

namespace {

template <class Inst>
SolveResult run_restarts_impl(const Inst& inst, const HeuristicParams& params) {
  if (params.restarts < 1)
    throw Error(ErrorCode::invalid_parameter, "restarts must be >= 1");
  const auto start = Clock::now();
  SolveResult agg;
  bool have = false;
  std::uint64_t iterations = 0;
  for (int r = 0; r < params.restarts; ++r) {
    HeuristicParams p = params;
    p.seed = params.seed + static_cast<std::uint64_t>(r);
    SolveResult one = solve_local_search(inst, p, nullptr);
    iterations += one.iterations;
    if (!have || one.best_value < agg.best_value) {
      agg = std::move(one);
      have = true;
    }
    if (params.budget.stop_at_value && agg.best_value <= *params.budget.stop_at_value)
      break;  // lowest seed index reaching the target wins by contract
  }
  agg.iterations = iterations;
  agg.elapsed = Clock::now() - start;
  return agg;
}

}  // namespace

SolveResult run_restarts(const IsingInstance& inst, const HeuristicParams& params) {
  return run_restarts_impl(inst, params);
}

SolveResult run_restarts(const QuboInstance& inst, const HeuristicParams& params) {
  return run_restarts_impl(inst, params);
}

}  // namespace chimeraq
