#include <doctest.h>

#include <array>
#include <cmath>

#include "chimeraq/generators.hpp"
#include "test_util.hpp"

using namespace chimeraq;
using namespace testutil;

TEST_CASE("generators are deterministic in the seed") {
  for (std::uint64_t seed : {0ULL, 1ULL, 424242ULL}) {
    CHECK(gen_qubo_pm1(2, seed) == gen_qubo_pm1(2, seed));
    CHECK(gen_qubo_range(2, -5, 7, seed) == gen_qubo_range(2, -5, 7, seed));
    CHECK(gen_ising_fields(2, seed) == gen_ising_fields(2, seed));
    CHECK(gen_ising_zero_field(2, seed) == gen_ising_zero_field(2, seed));
  }
  // Different seeds give different instances (112 +-1 draws agree with
  // probability 2^-112; a collision here means the seed is ignored).
  CHECK(gen_qubo_pm1(2, 1) != gen_qubo_pm1(2, 2));
  CHECK(gen_ising_fields(2, 1) != gen_ising_fields(2, 2));
}

TEST_CASE("pm1 families draw only -1 and +1") {
  const QuboInstance q = gen_qubo_pm1(2, 9);
  const IsingInstance s = gen_ising_fields(2, 9);
  for (const auto* g : {&q.graph, &s.graph}) {
    for (const auto w : g->edge_weights) CHECK((w == 1 || w == -1));
    for (const auto w : g->node_weights) CHECK((w == 1 || w == -1));
  }
  CHECK(q.offset == 0);
}

TEST_CASE("zero-field family shares couplers with the with-fields family") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const IsingInstance with = gen_ising_fields(3, seed);
    const IsingInstance zero = gen_ising_zero_field(3, seed);
    CHECK(zero.graph.edge_weights == with.graph.edge_weights);
    for (const auto h : zero.graph.node_weights) CHECK(h == 0);
  }
}

TEST_CASE("range family respects bounds and hits both endpoints") {
  bool saw_lo = false, saw_hi = false;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const QuboInstance q = gen_qubo_range(2, -3, 3, seed);
    for (const auto w : q.graph.edge_weights) {
      CHECK(w >= -3);
      CHECK(w <= 3);
      saw_lo |= w == -3;
      saw_hi |= w == 3;
    }
  }
  CHECK(saw_lo);
  CHECK(saw_hi);
  // Degenerate single-value range.
  const QuboInstance c = gen_qubo_range(1, 4, 4, 77);
  for (const auto w : c.graph.edge_weights) CHECK(w == 4);
}

TEST_CASE("range draws look uniform (5-sigma histogram)") {
  // 20 C_3 instances on [0,9]: (192 + 72) * 20 = 5280 draws, 528 expected
  // per value, sigma = sqrt(5280 * 0.1 * 0.9) ~= 21.8, so a 5-sigma band of
  // +-109 around 528 flags only a broken generator, not an unlucky seed.
  std::array<int, 10> bins{};
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const QuboInstance q = gen_qubo_range(3, 0, 9, seed);
    for (const auto w : q.graph.edge_weights) ++bins[static_cast<std::size_t>(w)];
    for (const auto w : q.graph.node_weights) ++bins[static_cast<std::size_t>(w)];
  }
  int total = 0;
  for (const int b : bins) {
    CHECK(b > 528 - 109);
    CHECK(b < 528 + 109);
    total += b;
  }
  CHECK(total == 5280);
}

TEST_CASE("subset generation matches the induced subgraph") {
  const std::vector<NodeId> subset{0, 4, 5, 12};
  const QuboInstance q = gen_qubo_pm1(2, 3, subset);
  CHECK(q.graph.topology.node_count() == 4);
  CHECK(q.graph.topology.edge_count() == 3);  // 0-4, 0-5, 4-12
  CHECK_THROWS_AS(gen_qubo_pm1(2, 3, std::vector<NodeId>{0, 999}), Error);
  try {
    gen_ising_fields(1, 0, std::vector<NodeId>{8});
    FAIL("expected invalid_subset");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_subset);
  }
}

TEST_CASE("generate() dispatches on the spec") {
  GenSpec spec;
  spec.family = GenFamily::ising_zero_field;
  spec.k = 2;
  spec.seed = 5;
  const AnyInstance any = generate(spec);
  CHECK(std::get<IsingInstance>(any) == gen_ising_zero_field(2, 5));

  spec.family = GenFamily::uniform_int_range;
  try {
    generate(spec);  // no range given
    FAIL("expected invalid_range");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_range);
  }
  spec.range = {{-2, 2}};
  CHECK(std::get<QuboInstance>(generate(spec)) == gen_qubo_range(2, -2, 2, 5));
}

TEST_CASE("family names round-trip") {
  for (GenFamily f : {GenFamily::uniform_pm1, GenFamily::uniform_int_range,
                      GenFamily::ising_with_fields, GenFamily::ising_zero_field})
    CHECK(parse_gen_family(gen_family_name(f)) == f);
  CHECK(!parse_gen_family("no-such-family"));
}
