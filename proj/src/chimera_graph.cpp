#include "chimeraq/chimera_graph.hpp"

#include <algorithm>
#include <limits>

namespace chimeraq {

namespace {

void check_k(int k) {
  if (k < 1) throw Error(ErrorCode::invalid_parameter, "k must be >= 1");
  // 8k^2 must stay representable as a NodeId.
  const auto max_id = static_cast<std::int64_t>(std::numeric_limits<NodeId>::max());
  if (static_cast<std::int64_t>(k) * k > max_id / 8)
    throw Error(ErrorCode::invalid_parameter,
                "k=" + std::to_string(k) + " overflows the node index range");
}

}  // namespace

NodeId chimera_node_id(int k, const NodeCoords& c) {
  check_k(k);
  if (c.row < 0 || c.row >= k || c.col < 0 || c.col >= k || c.slot < 0 || c.slot > 3)
    throw Error(ErrorCode::invalid_parameter, "node coordinates out of range");
  return static_cast<NodeId>(8 * (c.row * k + c.col) + 4 * static_cast<int>(c.part) + c.slot);
}

NodeCoords chimera_node_coords(int k, NodeId v) {
  check_k(k);
  if (v < 0 || static_cast<std::int64_t>(v) >= 8LL * k * k)
    throw Error(ErrorCode::unknown_node, "node " + std::to_string(v) + " not in C_" + std::to_string(k));
  NodeCoords c;
  c.slot = v % 4;
  c.part = static_cast<Partition>((v / 4) % 2);
  const int cell = v / 8;
  c.row = cell / k;
  c.col = cell % k;
  return c;
}

void Topology::finalize() {
  const std::size_t span = static_cast<std::size_t>(8) * k_ * k_;
  rank_.assign(span, -1);
  adj_.assign(span, {});
  for (std::size_t i = 0; i < nodes_.size(); ++i) rank_[nodes_[i]] = static_cast<std::int32_t>(i);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

std::optional<std::size_t> Topology::edge_pos(NodeId u, NodeId v) const {
  if (u > v) std::swap(u, v);
  const Edge e{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Topology build_chimera(int k) {
  check_k(k);
  Topology t;
  t.k_ = k;
  const std::size_t n = static_cast<std::size_t>(8) * k * k;
  t.nodes_.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.nodes_[i] = static_cast<NodeId>(i);

  t.edges_.reserve(static_cast<std::size_t>(24) * k * k - 8 * k);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      const NodeId base = static_cast<NodeId>(8 * (r * k + c));
      // intra-cell K_{4,4}: left slot t <-> right slot t'
      for (int ls = 0; ls < 4; ++ls)
        for (int rs = 0; rs < 4; ++rs)
          t.edges_.emplace_back(base + ls, base + 4 + rs);
      // horizontal: right slots couple to the cell on the right
      if (c + 1 < k)
        for (int s = 0; s < 4; ++s)
          t.edges_.emplace_back(base + 4 + s, base + 8 + 4 + s);
      // vertical: left slots couple to the cell below
      if (r + 1 < k)
        for (int s = 0; s < 4; ++s)
          t.edges_.emplace_back(base + s, base + 8 * k + s);
    }
  }
  std::sort(t.edges_.begin(), t.edges_.end());
  t.finalize();
  return t;
}

Topology induce_subgraph(const Topology& t, std::span<const NodeId> keep) {
  Topology out;
  out.k_ = t.k_;
  out.nodes_.assign(keep.begin(), keep.end());
  std::sort(out.nodes_.begin(), out.nodes_.end());
  out.nodes_.erase(std::unique(out.nodes_.begin(), out.nodes_.end()), out.nodes_.end());
  for (NodeId v : out.nodes_)
    if (!t.contains(v))
      throw Error(ErrorCode::unknown_node,
                  "node " + std::to_string(v) + " is not in the topology");

  std::vector<std::uint8_t> kept(static_cast<std::size_t>(8) * t.k_ * t.k_, 0);
  for (NodeId v : out.nodes_) kept[v] = 1;
  for (const auto& e : t.edges_)
    if (kept[e.first] && kept[e.second]) out.edges_.push_back(e);

  out.finalize();
  return out;
}

std::vector<NodeId> neighbors(const Topology& t, NodeId v) {
  if (!t.contains(v))
    throw Error(ErrorCode::unknown_node, "node " + std::to_string(v) + " is not in the topology");
  return t.adjacent(v);
}

}  // namespace chimeraq
