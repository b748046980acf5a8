#include <bit>
#include <cassert>
#include <chrono>
#include <string>

#include "chimeraq/solvers.hpp"
#include "solver_common.hpp"

namespace chimeraq {

namespace {

// Lexicographic order over assignments in node-index order, states packed as
// bit i = node position i, set bit = spin +1.  The smaller assignment is the
// one with -1 at the lowest differing position.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  return ((a >> std::countr_zero(diff)) & 1) == 0;
}

SolveResult solve_spin(const IsingInstance& inst, int cap) {
  const auto start = std::chrono::steady_clock::now();
  const int n = static_cast<int>(inst.graph.topology.node_count());
  if (n > cap)
    throw Error(ErrorCode::too_large, "brute force limited to " + std::to_string(cap) +
                                          " nodes, instance has " + std::to_string(n));
  if (n > 62)
    throw Error(ErrorCode::too_large,
                "brute force enumeration state is limited to 62 nodes");

  SolveResult res;
  res.proven_optimal = true;
  if (n == 0) {
    res.best_assignment = SpinAssignment{};
    res.iterations = 1;
    res.elapsed = std::chrono::steady_clock::now() - start;
    return res;
  }

  const detail::FlatGraph g = detail::flatten(inst);
  std::vector<std::int8_t> s(n, -1);
  // Local fields f[p] = h_p + sum_u J_pu s_u; at the all-(-1) start every
  // coupler contributes -J.
  std::vector<long long> f(g.h);
  for (int p = 0; p < n; ++p)
    for (int i = g.off[p]; i < g.off[p + 1]; ++i) f[p] -= g.w[i];
  long long value = g.edge_sum;
  for (int p = 0; p < n; ++p) value -= g.h[p];

#ifndef NDEBUG
  auto fresh_value = [&]() {
    long long v = 0;
    for (int p = 0; p < n; ++p) {
      v += g.h[p] * s[p];
      for (int i = g.off[p]; i < g.off[p + 1]; ++i)
        if (g.nbr[i] > p) v += g.w[i] * s[p] * s[g.nbr[i]];
    }
    return v;
  };
#endif

  std::uint64_t cur = 0;  // bit p set <=> s[p] == +1
  std::uint64_t best_mask = 0;
  long long best = value;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int v = std::countr_zero(step);  // Gray code: flip lowest set bit of step
    value += -2LL * s[v] * f[v];
    s[v] = static_cast<std::int8_t>(-s[v]);
    cur ^= std::uint64_t{1} << v;
    const long long sv = s[v];
    for (int i = g.off[v]; i < g.off[v + 1]; ++i) f[g.nbr[i]] += 2 * g.w[i] * sv;
#ifndef NDEBUG
    if ((step & 1023u) == 0) assert(value == fresh_value());
#endif
    if (value < best || (value == best && lex_less(cur, best_mask))) {
      best = value;
      best_mask = cur;
    }
  }

  SpinAssignment a;
  a.values.resize(n);
  for (int p = 0; p < n; ++p)
    a.values[p] = ((best_mask >> p) & 1) ? std::int8_t{1} : std::int8_t{-1};
  res.best_value = best;
  res.best_assignment = std::move(a);
  res.iterations = total;
  res.elapsed = std::chrono::steady_clock::now() - start;
  return res;
}

}  // namespace

SolveResult solve_brute_force(const IsingInstance& inst, int cap) {
  return solve_spin(inst, cap);
}

SolveResult solve_brute_force(const QuboInstance& inst, int cap) {
  return detail::solve_qubo_via_spin(
      inst, [cap](const IsingInstance& i) { return solve_spin(i, cap); });
}

}  // namespace chimeraq
