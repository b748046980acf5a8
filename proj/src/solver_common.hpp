#pragma once

// Internal helpers shared by the solver translation units.

#include <utility>
#include <vector>

#include "chimeraq/solvers.hpp"

namespace chimeraq::detail {

// Instance flattened to node positions (0..n-1 in topology order) with CSR
// adjacency, so solver hot loops touch plain arrays only.
struct FlatGraph {
  int n = 0;
  std::vector<long long> h;
  std::vector<int> off;      // size n+1
  std::vector<int> nbr;      // neighbor positions
  std::vector<long long> w;  // coupler weights, parallel to nbr
  long long edge_sum = 0;
};

inline FlatGraph flatten(const IsingInstance& inst) {
  const Topology& t = inst.graph.topology;
  FlatGraph g;
  g.n = static_cast<int>(t.node_count());
  g.h = inst.graph.node_weights;
  const auto& edges = t.edges();
  std::vector<int> degree(g.n, 0);
  std::vector<std::pair<int, int>> pos_edges(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const int pu = static_cast<int>(*t.node_pos(edges[e].first));
    const int pv = static_cast<int>(*t.node_pos(edges[e].second));
    pos_edges[e] = {pu, pv};
    ++degree[pu];
    ++degree[pv];
    g.edge_sum += inst.graph.edge_weights[e];
  }
  g.off.assign(g.n + 1, 0);
  for (int p = 0; p < g.n; ++p) g.off[p + 1] = g.off[p] + degree[p];
  g.nbr.resize(g.off[g.n]);
  g.w.resize(g.off[g.n]);
  std::vector<int> fill(g.off.begin(), g.off.end() - 1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [pu, pv] = pos_edges[e];
    const long long jw = inst.graph.edge_weights[e];
    g.nbr[fill[pu]] = pv;
    g.w[fill[pu]++] = jw;
    g.nbr[fill[pv]] = pu;
    g.w[fill[pv]++] = jw;
  }
  return g;
}

// Solves a QUBO instance through the exact x4-scaled spin conversion:
// 4 * eval_qubo(q, x) == eval_ising(ising, 2x-1) + C, so the spin-domain
// minimizer maps straight back and the division below is always exact.
template <class SpinSolver>
SolveResult solve_qubo_via_spin(const QuboInstance& q, SpinSolver&& solve) {
  const ScaledIsing scaled = qubo_to_ising(q);
  SolveResult result = solve(scaled.ising);
  const auto& spins = std::get<SpinAssignment>(result.best_assignment);
  result.best_assignment = to_binary(spins);
  result.best_value = (result.best_value + scaled.offset) / ScaledIsing::scale;
  return result;
}

}  // namespace chimeraq::detail
