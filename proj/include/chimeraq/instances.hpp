#pragma once

#include <cstdint>
#include <vector>

#include "chimeraq/chimera_graph.hpp"

namespace chimeraq {

// Weights are exact 64-bit integers. Inputs are capped so that no objective
// evaluation or transform can overflow: with |w| <= max_abs_weight and at
// most 8*16383^2 terms, all intermediate sums stay far below 2^63.
inline constexpr long long max_abs_weight = 1'000'000'000LL;

// Node and edge weights over a Chimera (sub)graph. Weight vectors run
// parallel to topology.nodes() / topology.edges(); a missing entry is not
// representable, zero means "no weight".
struct WeightedGraph {
  Topology topology;
  std::vector<long long> node_weights;  // parallel to topology.nodes()
  std::vector<long long> edge_weights;  // parallel to topology.edges()

  WeightedGraph() = default;
  explicit WeightedGraph(Topology t)
      : topology(std::move(t)),
        node_weights(topology.node_count(), 0),
        edge_weights(topology.edge_count(), 0) {}

  long long node_weight_or_zero(NodeId v) const;
  long long edge_weight_or_zero(NodeId u, NodeId v) const;

  bool operator==(const WeightedGraph& o) const {
    return topology.nodes() == o.topology.nodes() &&
           topology.edges() == o.topology.edges() && topology.k() == o.topology.k() &&
           node_weights == o.node_weights && edge_weights == o.edge_weights;
  }
};

// Ising form: minimize sum_{pairs {i,j}} J_ij s_i s_j + sum_i h_i s_i over
// s in {-1,+1}^n. Couplers J are the edge weights (one value per unordered
// pair), fields h the node weights.
struct IsingInstance {
  WeightedGraph graph;
  bool operator==(const IsingInstance&) const = default;
};

// QUBO form: minimize sum_{i<j} Q_ij x_i x_j + sum_i Q_ii x_i + offset over
// x in {0,1}^n. Off-diagonal Q entries are the edge weights, the diagonal
// the node weights.
struct QuboInstance {
  WeightedGraph graph;
  long long offset = 0;
  bool operator==(const QuboInstance&) const = default;
};

// Candidate solutions, stored in topology node order: values[i] belongs to
// graph.topology.nodes()[i].
struct SpinAssignment {
  std::vector<std::int8_t> values;  // each -1 or +1
  bool operator==(const SpinAssignment&) const = default;
};

struct BinaryAssignment {
  std::vector<std::int8_t> values;  // each 0 or 1
  bool operator==(const BinaryAssignment&) const = default;
};

BinaryAssignment to_binary(const SpinAssignment& s);  // x = (s+1)/2
SpinAssignment to_spin(const BinaryAssignment& x);    // s = 2x-1

long long eval_ising(const IsingInstance& inst, const SpinAssignment& s);
long long eval_qubo(const QuboInstance& inst, const BinaryAssignment& x);

// Exact substitution s_i = 2x_i - 1. For every spin vector s,
//   eval_ising(inst, s) == eval_qubo(ising_to_qubo(inst), to_binary(s)).
QuboInstance ising_to_qubo(const IsingInstance& inst);

// Inverse direction, scaled by 4 to keep the coefficients integral:
//   4 * eval_qubo(q, x) == eval_ising(result.ising, to_spin(x)) + result.offset
// for every binary vector x.
struct ScaledIsing {
  IsingInstance ising;
  long long offset = 0;
  static constexpr long long scale = 4;
};
ScaledIsing qubo_to_ising(const QuboInstance& inst);

// Same couplers, all fields zeroed (the zero-field variant of an instance).
IsingInstance strip_fields(const IsingInstance& inst);

}  // namespace chimeraq
