#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "chimeraq/error.hpp"

namespace chimeraq {

// A Chimera graph C_k is a k x k grid of K_{4,4} unit cells. Within a cell
// the four "left" nodes are connected to the four "right" nodes; right nodes
// couple to the right nodes of the horizontally adjacent cells (same slot),
// left nodes to the left nodes of the vertically adjacent cells.
//
// Node indexing is fixed so instance files are reproducible:
//   index = 8*(row*k + col) + 4*partition + slot,  partition 0 = left,
//   slot in 0..3.  Edges are stored with the smaller endpoint first and the
//   edge list is sorted lexicographically.

using NodeId = std::int32_t;
using Edge = std::pair<NodeId, NodeId>;  // first < second

enum class Partition : int { left = 0, right = 1 };

struct NodeCoords {
  int row = 0;
  int col = 0;
  Partition part = Partition::left;
  int slot = 0;
};

NodeId chimera_node_id(int k, const NodeCoords& c);
NodeCoords chimera_node_coords(int k, NodeId v);

class Topology {
 public:
  Topology() = default;  // empty; populated topologies come from the builders

  int k() const { return k_; }
  const std::vector<NodeId>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool contains(NodeId v) const {
    return v >= 0 && static_cast<std::size_t>(v) < rank_.size() && rank_[v] >= 0;
  }

  // Position of v in nodes(), or nullopt if absent.
  std::optional<std::size_t> node_pos(NodeId v) const {
    if (!contains(v)) return std::nullopt;
    return static_cast<std::size_t>(rank_[v]);
  }
  // Position of {u,v} in edges(), or nullopt if not an edge.
  std::optional<std::size_t> edge_pos(NodeId u, NodeId v) const;

  // Sorted adjacency of a node known to be present (unchecked).
  const std::vector<NodeId>& adjacent(NodeId v) const { return adj_[v]; }

  friend Topology build_chimera(int k);
  friend Topology induce_subgraph(const Topology& t, std::span<const NodeId> keep);

 private:
  void finalize();  // builds rank_ and adj_ from nodes_/edges_

  int k_ = 0;
  std::vector<NodeId> nodes_;          // ascending
  std::vector<Edge> edges_;            // lexicographic, min endpoint first
  std::vector<std::int32_t> rank_;     // raw NodeId -> position in nodes_, -1 if absent
  std::vector<std::vector<NodeId>> adj_;
};

// Full C_k.  Rejects k < 1 and k large enough that 8k^2 overflows NodeId.
Topology build_chimera(int k);

// Node-induced subgraph: node set = keep (deduplicated), edges = all edges of
// t with both ends kept.  Rejects ids outside t.
Topology induce_subgraph(const Topology& t, std::span<const NodeId> keep);

// Sorted neighbor list of v in t.  Rejects ids outside t.
std::vector<NodeId> neighbors(const Topology& t, NodeId v);

}  // namespace chimeraq
