#include "chimeraq/instances.hpp"

#include <string>

namespace chimeraq {

namespace {

void check_complete(std::size_t have, std::size_t want) {
  if (have != want)
    throw Error(ErrorCode::incomplete_assignment,
                "assignment covers " + std::to_string(have) + " of " +
                    std::to_string(want) + " nodes");
}

}  // namespace

long long WeightedGraph::node_weight_or_zero(NodeId v) const {
  auto pos = topology.node_pos(v);
  return pos ? node_weights[*pos] : 0;
}

long long WeightedGraph::edge_weight_or_zero(NodeId u, NodeId v) const {
  auto pos = topology.edge_pos(u, v);
  return pos ? edge_weights[*pos] : 0;
}

BinaryAssignment to_binary(const SpinAssignment& s) {
  BinaryAssignment x;
  x.values.reserve(s.values.size());
  for (auto v : s.values) x.values.push_back(v > 0 ? 1 : 0);
  return x;
}

SpinAssignment to_spin(const BinaryAssignment& x) {
  SpinAssignment s;
  s.values.reserve(x.values.size());
  for (auto v : x.values) s.values.push_back(v ? 1 : -1);
  return s;
}

long long eval_ising(const IsingInstance& inst, const SpinAssignment& s) {
  const auto& g = inst.graph;
  const auto& topo = g.topology;
  check_complete(s.values.size(), topo.node_count());

  long long total = 0;
  const auto& edges = topo.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto pu = *topo.node_pos(edges[e].first);
    const auto pv = *topo.node_pos(edges[e].second);
    total += g.edge_weights[e] * s.values[pu] * s.values[pv];
  }
  for (std::size_t i = 0; i < g.node_weights.size(); ++i)
    total += g.node_weights[i] * s.values[i];
  return total;
}

long long eval_qubo(const QuboInstance& inst, const BinaryAssignment& x) {
  const auto& g = inst.graph;
  const auto& topo = g.topology;
  check_complete(x.values.size(), topo.node_count());

  long long total = inst.offset;
  const auto& edges = topo.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto pu = *topo.node_pos(edges[e].first);
    const auto pv = *topo.node_pos(edges[e].second);
    if (x.values[pu] && x.values[pv]) total += g.edge_weights[e];
  }
  for (std::size_t i = 0; i < g.node_weights.size(); ++i)
    if (x.values[i]) total += g.node_weights[i];
  return total;
}

QuboInstance ising_to_qubo(const IsingInstance& inst) {
  const auto& g = inst.graph;
  const auto& topo = g.topology;

  QuboInstance out;
  out.graph = WeightedGraph(topo);

  // J_ij s_i s_j with s = 2x-1 expands to 4J x_i x_j - 2J x_i - 2J x_j + J,
  // and h_i s_i to 2h_i x_i - h_i.
  long long offset = 0;
  const auto& edges = topo.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const long long j = g.edge_weights[e];
    out.graph.edge_weights[e] = 4 * j;
    out.graph.node_weights[*topo.node_pos(edges[e].first)] -= 2 * j;
    out.graph.node_weights[*topo.node_pos(edges[e].second)] -= 2 * j;
    offset += j;
  }
  for (std::size_t i = 0; i < g.node_weights.size(); ++i) {
    out.graph.node_weights[i] += 2 * g.node_weights[i];
    offset -= g.node_weights[i];
  }
  out.offset = offset;
  return out;
}

ScaledIsing qubo_to_ising(const QuboInstance& inst) {
  const auto& g = inst.graph;
  const auto& topo = g.topology;

  // With x = (s+1)/2: 4 x_i x_j = s_i s_j + s_i + s_j + 1 and 4 x_i = 2 s_i + 2,
  // so 4*qubo(x) = sum Q_ij s_i s_j + sum_i (2 Q_ii + sum_{j~i} Q_ij) s_i + C.
  ScaledIsing out;
  out.ising.graph = WeightedGraph(topo);

  long long constant = 4 * inst.offset;
  const auto& edges = topo.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const long long q = g.edge_weights[e];
    out.ising.graph.edge_weights[e] = q;
    out.ising.graph.node_weights[*topo.node_pos(edges[e].first)] += q;
    out.ising.graph.node_weights[*topo.node_pos(edges[e].second)] += q;
    constant += q;
  }
  for (std::size_t i = 0; i < g.node_weights.size(); ++i) {
    out.ising.graph.node_weights[i] += 2 * g.node_weights[i];
    constant += 2 * g.node_weights[i];
  }
  out.offset = constant;
  return out;
}

IsingInstance strip_fields(const IsingInstance& inst) {
  IsingInstance out = inst;
  out.graph.node_weights.assign(out.graph.node_weights.size(), 0);
  return out;
}

}  // namespace chimeraq
