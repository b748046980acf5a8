#include <doctest.h>

#include "chimeraq/instances.hpp"
#include "test_util.hpp"

using namespace chimeraq;
using namespace testutil;

namespace {

SpinAssignment spins_from_mask(std::size_t n, std::uint64_t mask) {
  SpinAssignment s;
  s.values.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    s.values[i] = (mask >> i) & 1 ? std::int8_t{1} : std::int8_t{-1};
  return s;
}

}  // namespace

TEST_CASE("evaluation agrees with a dense independent evaluator") {
  SplitMix64 rng(11);
  const Topology full = build_chimera(2);
  for (int trial = 0; trial < 25; ++trial) {
    const auto subset = random_subset(rng, full, 1 + rng.uniform_index(12));
    IsingInstance ising;
    ising.graph = WeightedGraph(induce_subgraph(full, subset));
    for (auto& w : ising.graph.edge_weights) w = rng.uniform_int(-50, 50);
    for (auto& w : ising.graph.node_weights) w = rng.uniform_int(-50, 50);
    QuboInstance qubo;
    qubo.graph = ising.graph;
    qubo.offset = rng.uniform_int(-100, 100);

    const std::size_t n = ising.graph.topology.node_count();
    for (int t = 0; t < 20; ++t) {
      const auto mask = static_cast<std::uint64_t>(rng.uniform_int(0, (1LL << n) - 1));
      const SpinAssignment s = spins_from_mask(n, mask);
      CHECK(eval_ising(ising, s) == naive_ising(ising, s));
      CHECK(eval_qubo(qubo, to_binary(s)) == naive_qubo(qubo, to_binary(s)));
    }
  }
}

TEST_CASE("hand-checked evaluations") {
  // Two nodes of one K_{4,4}: J_{04} = 3, h_0 = -1, h_4 = 2.
  IsingInstance inst;
  inst.graph = make_graph(1, {0, 4}, {{0, 4, 3}, {0, 0, -1}, {4, 4, 2}});
  CHECK(eval_ising(inst, SpinAssignment{{+1, +1}}) == 3 - 1 + 2);
  CHECK(eval_ising(inst, SpinAssignment{{+1, -1}}) == -3 - 1 - 2);
  CHECK(eval_ising(inst, SpinAssignment{{-1, +1}}) == -3 + 1 + 2);
  CHECK(eval_ising(inst, SpinAssignment{{-1, -1}}) == 3 + 1 - 2);

  QuboInstance q;
  q.graph = inst.graph;
  q.offset = 7;
  CHECK(eval_qubo(q, BinaryAssignment{{0, 0}}) == 7);
  CHECK(eval_qubo(q, BinaryAssignment{{1, 0}}) == 7 - 1);
  CHECK(eval_qubo(q, BinaryAssignment{{0, 1}}) == 7 + 2);
  CHECK(eval_qubo(q, BinaryAssignment{{1, 1}}) == 7 + 3 - 1 + 2);
}

TEST_CASE("assignments must cover every node") {
  IsingInstance inst;
  inst.graph = make_graph(1, {0, 4}, {{0, 4, 1}});
  CHECK_THROWS_AS(eval_ising(inst, SpinAssignment{{1}}), Error);
  QuboInstance q;
  q.graph = inst.graph;
  CHECK_THROWS_AS(eval_qubo(q, BinaryAssignment{{1, 0, 1}}), Error);
}

TEST_CASE("spin/binary conversions invert each other") {
  const SpinAssignment s{{-1, 1, 1, -1}};
  CHECK(to_binary(s) == BinaryAssignment{{0, 1, 1, 0}});
  CHECK(to_spin(to_binary(s)) == s);
  const BinaryAssignment x{{1, 0}};
  CHECK(to_binary(to_spin(x)) == x);
}

TEST_CASE("ising_to_qubo preserves values pointwise") {
  SplitMix64 rng(23);
  const Topology full = build_chimera(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto subset = random_subset(rng, full, 1 + rng.uniform_index(10));
    IsingInstance ising;
    ising.graph = WeightedGraph(induce_subgraph(full, subset));
    for (auto& w : ising.graph.edge_weights) w = rng.uniform_int(-9, 9);
    for (auto& w : ising.graph.node_weights) w = rng.uniform_int(-9, 9);
    const QuboInstance q = ising_to_qubo(ising);
    const std::size_t n = ising.graph.topology.node_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const SpinAssignment s = spins_from_mask(n, mask);
      CHECK(eval_ising(ising, s) == eval_qubo(q, to_binary(s)));
    }
  }
}

TEST_CASE("qubo_to_ising is the exact x4-scaled inverse") {
  SplitMix64 rng(29);
  const Topology full = build_chimera(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto subset = random_subset(rng, full, 1 + rng.uniform_index(10));
    QuboInstance q;
    q.graph = WeightedGraph(induce_subgraph(full, subset));
    for (auto& w : q.graph.edge_weights) w = rng.uniform_int(-9, 9);
    for (auto& w : q.graph.node_weights) w = rng.uniform_int(-9, 9);
    q.offset = rng.uniform_int(-20, 20);
    const ScaledIsing scaled = qubo_to_ising(q);
    const std::size_t n = q.graph.topology.node_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const SpinAssignment s = spins_from_mask(n, mask);
      CHECK(4 * eval_qubo(q, to_binary(s)) ==
            eval_ising(scaled.ising, s) + scaled.offset);
    }
  }
}

TEST_CASE("round-tripping the transforms recovers the instance") {
  SplitMix64 rng(31);
  IsingInstance ising;
  ising.graph = WeightedGraph(build_chimera(1));
  for (auto& w : ising.graph.edge_weights) w = rng.uniform_int(-5, 5);
  for (auto& w : ising.graph.node_weights) w = rng.uniform_int(-5, 5);
  // ising -> qubo -> scaled ising divides back to 4x the original weights.
  const ScaledIsing back = qubo_to_ising(ising_to_qubo(ising));
  for (std::size_t e = 0; e < ising.graph.edge_weights.size(); ++e)
    CHECK(back.ising.graph.edge_weights[e] == 4 * ising.graph.edge_weights[e]);
  for (std::size_t i = 0; i < ising.graph.node_weights.size(); ++i)
    CHECK(back.ising.graph.node_weights[i] == 4 * ising.graph.node_weights[i]);
}

TEST_CASE("strip_fields zeroes fields and keeps couplers") {
  IsingInstance inst;
  inst.graph = make_graph(1, {0, 4, 5}, {{0, 4, 2}, {0, 5, -3}, {0, 0, 7}, {5, 5, 1}});
  const IsingInstance stripped = strip_fields(inst);
  CHECK(stripped.graph.edge_weights == inst.graph.edge_weights);
  for (const auto w : stripped.graph.node_weights) CHECK(w == 0);
}
