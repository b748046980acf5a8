#include <doctest.h>

#include <cstdlib>

#include "chimeraq/formulations.hpp"
#include "chimeraq/solvers.hpp"
#include "test_util.hpp"

using namespace chimeraq;
using namespace testutil;

namespace {

QuboInstance random_qubo(SplitMix64& rng, int k, std::size_t max_nodes, long long lo,
                         long long hi) {
  const Topology full = build_chimera(k);
  const auto subset = random_subset(rng, full, 1 + rng.uniform_index(max_nodes));
  QuboInstance q;
  q.graph = WeightedGraph(induce_subgraph(full, subset));
  for (auto& w : q.graph.edge_weights) w = rng.uniform_int(lo, hi);
  for (auto& w : q.graph.node_weights) w = rng.uniform_int(lo, hi);
  q.offset = rng.uniform_int(-10, 10);
  return q;
}

std::size_t nonzero_edges(const QuboInstance& q) {
  std::size_t c = 0;
  for (const auto w : q.graph.edge_weights) c += w != 0;
  return c;
}

}  // namespace

TEST_CASE("two-node linearization by hand") {
  QuboInstance q;
  q.graph = make_graph(1, {0, 4}, {{0, 4, -5}, {0, 0, 2}, {4, 4, -1}});
  q.offset = 3;

  const MilpModel full = build_milp(q, MilpMode::full);
  CHECK(full.x_vars == std::vector<NodeId>{0, 4});
  CHECK(full.z_vars == std::vector<Edge>{{0, 4}});
  CHECK(full.x_obj == std::vector<long long>{2, -1});
  CHECK(full.z_obj == std::vector<long long>{-5});
  CHECK(full.offset == 3);
  REQUIRE(full.rows.size() == 4);
  // z - x_0 <= 0, z - x_4 <= 0, x_0 + x_4 - z <= 1, z >= 0
  CHECK(full.rows[0] ==
        MilpRow{"c0", {{1, z_var(0, 4)}, {-1, x_var(0)}}, Sense::le, 0});
  CHECK(full.rows[1] ==
        MilpRow{"c1", {{1, z_var(0, 4)}, {-1, x_var(4)}}, Sense::le, 0});
  CHECK(full.rows[2] ==
        MilpRow{"c2", {{1, x_var(0)}, {1, x_var(4)}, {-1, z_var(0, 4)}}, Sense::le, 1});
  CHECK(full.rows[3] == MilpRow{"c3", {{1, z_var(0, 4)}}, Sense::ge, 0});

  // Negative pair weight keeps only the z <= x rows in reduced mode.
  const MilpModel reduced = build_milp(q, MilpMode::reduced);
  REQUIRE(reduced.rows.size() == 2);
  CHECK(reduced.rows[0].terms == full.rows[0].terms);
  CHECK(reduced.rows[1].terms == full.rows[1].terms);

  // Objective with implied z equals the quadratic at all four points.
  for (int b0 = 0; b0 <= 1; ++b0)
    for (int b1 = 0; b1 <= 1; ++b1) {
      const BinaryAssignment x{{static_cast<std::int8_t>(b0), static_cast<std::int8_t>(b1)}};
      const long long want = eval_qubo(q, x);
      CHECK(milp_objective_with_implied_z(full, x) == want);
      CHECK(milp_objective_with_implied_z(reduced, x) == want);
    }
  // Minimum is at x = (1,1): 3 - 5 + 2 - 1 = -1.
  CHECK(milp_min_brute_force(full).value == -1);
  CHECK(milp_min_brute_force(reduced).assignment == BinaryAssignment{{1, 1}});
}

TEST_CASE("row counts: 4 per edge in full mode, 2 per nonzero edge reduced") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const QuboInstance q = random_qubo(rng, 2, 14, -2, 2);  // small range -> zeros occur
    const MilpModel full = build_milp(q, MilpMode::full);
    const MilpModel red = build_milp(q, MilpMode::reduced);
    CHECK(full.rows.size() == 4 * q.graph.topology.edge_count());
    CHECK(full.z_vars.size() == q.graph.topology.edge_count());
    CHECK(red.rows.size() == 2 * nonzero_edges(q));
    CHECK(red.z_vars.size() == nonzero_edges(q));
    // Row names are c0..cN in order.
    for (std::size_t r = 0; r < full.rows.size(); ++r)
      CHECK(full.rows[r].name == "c" + std::to_string(r));
  }
}

TEST_CASE("linearized minimum equals the quadratic minimum") {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    const QuboInstance q = random_qubo(rng, 2, 12, -7, 7);
    const SolveResult direct = solve_brute_force(q);
    for (MilpMode mode : {MilpMode::full, MilpMode::reduced}) {
      const MilpOptimum got = milp_min_brute_force(build_milp(q, mode));
      CHECK(got.value == direct.best_value);
      CHECK(eval_qubo(q, got.assignment) == got.value);
    }
  }
}

TEST_CASE("implied-z objective tracks eval_qubo at random points") {
  SplitMix64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const QuboInstance q = random_qubo(rng, 2, 16, -9, 9);
    const MilpModel full = build_milp(q, MilpMode::full);
    const MilpModel red = build_milp(q, MilpMode::reduced);
    const std::size_t n = q.graph.topology.node_count();
    for (int t = 0; t < 30; ++t) {
      BinaryAssignment x;
      x.values.resize(n);
      for (auto& b : x.values) b = static_cast<std::int8_t>(rng.uniform_index(2));
      const long long want = eval_qubo(q, x);
      CHECK(milp_objective_with_implied_z(full, x) == want);
      CHECK(milp_objective_with_implied_z(red, x) == want);
    }
  }
}

TEST_CASE("diagonal shift by hand") {
  // Node 0 sees |{-5}| = 5 off-diagonal mass, Q_00 = 2:
  //   D_00 = ceil((5 - 4) / 2) = 1.
  // Node 4 sees 5 with Q_44 = -1: D_44 = ceil((5 + 2) / 2) = 4.
  QuboInstance q;
  q.graph = make_graph(1, {0, 4}, {{0, 4, -5}, {0, 0, 2}, {4, 4, -1}});

  const MiqpModel plain = build_miqp(q, MiqpRepair::none);
  CHECK(!plain.shift.has_value());
  CHECK(plain.quad_diag == std::vector<long long>{2, -1});
  CHECK(plain.linear == std::vector<long long>{0, 0});

  const MiqpModel shifted = build_miqp(q, MiqpRepair::diag_dominant);
  REQUIRE(shifted.shift.has_value());
  CHECK(*shifted.shift == std::vector<long long>{1, 4});
  CHECK(shifted.quad_diag == std::vector<long long>{3, 3});
  CHECK(shifted.linear == std::vector<long long>{-1, -4});
}

TEST_CASE("diagonal shift never changes binary objective values") {
  SplitMix64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const QuboInstance q = random_qubo(rng, 2, 10, -9, 9);
    const MiqpModel plain = build_miqp(q, MiqpRepair::none);
    const MiqpModel shifted = build_miqp(q, MiqpRepair::diag_dominant);
    const std::size_t n = q.graph.topology.node_count();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      BinaryAssignment x;
      x.values.resize(n);
      for (std::size_t i = 0; i < n; ++i)
        x.values[i] = static_cast<std::int8_t>((bits >> i) & 1);
      const long long want = eval_qubo(q, x);
      CHECK(miqp_objective_at(plain, x) == want);
      CHECK(miqp_objective_at(shifted, x) == want);
    }
  }
}

TEST_CASE("shifted quadratic form is nonnegative at fractional points") {
  SplitMix64 rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    const QuboInstance q = random_qubo(rng, 2, 16, -9, 9);
    const MiqpModel shifted = build_miqp(q, MiqpRepair::diag_dominant);
    // Diagonal dominance check on the shifted matrix.
    const auto& topo = q.graph.topology;
    for (std::size_t i = 0; i < shifted.x_vars.size(); ++i) {
      long long off = 0;
      for (std::size_t e = 0; e < shifted.quad_edges.size(); ++e)
        if (shifted.quad_edges[e].first == shifted.x_vars[i] ||
            shifted.quad_edges[e].second == shifted.x_vars[i])
          off += std::llabs(shifted.quad_edge_coeff[e]);
      CHECK(2 * shifted.quad_diag[i] >= off);  // diag of Qbar+D is quad_diag, off-diag Q/2
    }
    const std::size_t n = topo.node_count();
    std::vector<double> x(n);
    for (int t = 0; t < 50; ++t) {
      for (auto& v : x)
        v = static_cast<double>(rng.uniform_index(10001)) / 10000.0;
      double norm2 = 0.0;
      for (const double v : x) norm2 += v * v;
      CHECK(miqp_quadratic_form(shifted, x) >= -1e-9 * norm2);
    }
  }
}

TEST_CASE("variable names and brute-force cap") {
  CHECK(x_var(12).name() == "x12");
  CHECK(z_var(5, 1).name() == "z_1_5");

  QuboInstance q;
  q.graph = WeightedGraph(build_chimera(2));  // 32 nodes
  const MilpModel m = build_milp(q, MilpMode::full);
  try {
    milp_min_brute_force(m, 20);
    FAIL("expected too_large");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::too_large);
  }
}
