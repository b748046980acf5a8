#include "chimeraq/generators.hpp"

#include <utility>

#include "chimeraq/rng.hpp"

namespace chimeraq {

namespace {

Topology make_topology(int k, const std::optional<std::vector<NodeId>>& subset) {
  Topology full = build_chimera(k);
  if (!subset) return full;
  for (NodeId v : *subset)
    if (!full.contains(v))
      throw Error(ErrorCode::invalid_subset,
                  "node " + std::to_string(v) + " is not in C_" + std::to_string(k));
  return induce_subgraph(full, *subset);
}

// Edges first, then nodes, so sibling families share coupler draws.
template <typename Draw>
WeightedGraph draw_weights(Topology topo, Draw&& draw) {
  WeightedGraph g(std::move(topo));
  for (auto& w : g.edge_weights) w = draw();
  for (auto& w : g.node_weights) w = draw();
  return g;
}

}  // namespace

const char* gen_family_name(GenFamily f) {
  switch (f) {
    case GenFamily::uniform_pm1: return "uniform-pm1";
    case GenFamily::uniform_int_range: return "uniform-int-range";
    case GenFamily::ising_with_fields: return "ising-with-fields";
    case GenFamily::ising_zero_field: return "ising-zero-field";
  }
  return "?";
}

std::optional<GenFamily> parse_gen_family(const std::string& name) {
  if (name == "uniform-pm1") return GenFamily::uniform_pm1;
  if (name == "uniform-int-range") return GenFamily::uniform_int_range;
  if (name == "ising-with-fields") return GenFamily::ising_with_fields;
  if (name == "ising-zero-field") return GenFamily::ising_zero_field;
  return std::nullopt;
}

QuboInstance gen_qubo_pm1(int k, std::uint64_t seed,
                          std::optional<std::vector<NodeId>> subset) {
  SplitMix64 rng(seed);
  QuboInstance inst;
  inst.graph = draw_weights(make_topology(k, subset), [&] { return rng.pm1(); });
  return inst;
}

QuboInstance gen_qubo_range(int k, long long lo, long long hi, std::uint64_t seed,
                            std::optional<std::vector<NodeId>> subset) {
  if (lo > hi) throw Error(ErrorCode::invalid_range, "lo > hi");
  if (lo < -max_abs_weight || hi > max_abs_weight)
    throw Error(ErrorCode::invalid_range, "weights must stay within +-1e9");
  SplitMix64 rng(seed);
  QuboInstance inst;
  inst.graph = draw_weights(make_topology(k, subset), [&] { return rng.uniform_int(lo, hi); });
  return inst;
}

IsingInstance gen_ising_fields(int k, std::uint64_t seed,
                               std::optional<std::vector<NodeId>> subset) {
  SplitMix64 rng(seed);
  IsingInstance inst;
  inst.graph = draw_weights(make_topology(k, subset), [&] { return rng.pm1(); });
  return inst;
}

IsingInstance gen_ising_zero_field(int k, std::uint64_t seed,
                                   std::optional<std::vector<NodeId>> subset) {
  return strip_fields(gen_ising_fields(k, seed, std::move(subset)));
}

AnyInstance generate(const GenSpec& spec) {
  switch (spec.family) {
    case GenFamily::uniform_pm1:
      return gen_qubo_pm1(spec.k, spec.seed, spec.node_subset);
    case GenFamily::uniform_int_range: {
      if (!spec.range)
        throw Error(ErrorCode::invalid_range, "uniform-int-range requires a range");
      return gen_qubo_range(spec.k, spec.range->first, spec.range->second, spec.seed,
                            spec.node_subset);
    }
    case GenFamily::ising_with_fields:
      return gen_ising_fields(spec.k, spec.seed, spec.node_subset);
    case GenFamily::ising_zero_field:
      return gen_ising_zero_field(spec.k, spec.seed, spec.node_subset);
  }
  throw Error(ErrorCode::invalid_parameter, "unknown family");
}

}  // namespace chimeraq
