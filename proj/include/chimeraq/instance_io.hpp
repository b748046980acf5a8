#pragma once

// Text format for instances, one record per line:
//
//   # comment
//   <form> <k> <n> <m>        header; form is "qubo" or "ising"
//   # offset <c>              qubo only: constant term of the objective
//   i i w                     node weight (h_i or Q_ii)
//   i j w                     edge weight (J_ij or Q_ij), i < j
//
// Records are sorted strictly increasing by (i, j); n node lines and m edge
// lines.  The instance topology is the subgraph of C_k induced by the
// declared nodes; topology edges without an edge line have weight zero.
// Serialization always writes every node and every induced edge, so
// parse(serialize(inst)) == inst and equal instances serialize to identical
// bytes.

#include <string>

#include "chimeraq/generators.hpp"  // AnyInstance

namespace chimeraq {

std::string serialize_instance(const IsingInstance& inst);
std::string serialize_instance(const QuboInstance& inst);
std::string serialize_instance(const AnyInstance& inst);

// Errors: parse-error (with line number), non-chimera-edge, duplicate-entry.
AnyInstance parse_instance(const std::string& text);

AnyInstance read_instance(const std::string& path);
void write_instance(const AnyInstance& inst, const std::string& path);

// Adapter for bare weighted-graph data: every line is "u v w" (an edge) or
// "u u w" (a node weight), 0-based ids, any order, nodes implicit.  Returns
// canonical InstanceFile text with the given form tag and k inferred as the
// smallest C_k containing every id.  The result parses with read_instance.
std::string convert_raw_edge_list(const std::string& text, const std::string& form);

}  // namespace chimeraq
