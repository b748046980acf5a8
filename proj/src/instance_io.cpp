#include "chimeraq/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

namespace chimeraq {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": " + msg);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long long to_int(const std::string& tok, std::size_t line_no) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    fail(line_no, "expected integer, got '" + tok + "'");
  return v;
}

void serialize_body(std::string& out, const WeightedGraph& g) {
  const Topology& t = g.topology;
  // Merged (i,i) node lines and (i,j) edge lines in lexicographic key order;
  // the edge list is already sorted with the smaller endpoint first.
  std::size_t e = 0;
  for (std::size_t i = 0; i < t.nodes().size(); ++i) {
    const NodeId v = t.nodes()[i];
    out += std::to_string(v) + " " + std::to_string(v) + " " +
           std::to_string(g.node_weights[i]) + "\n";
    for (; e < t.edges().size() && t.edges()[e].first == v; ++e)
      out += std::to_string(v) + " " + std::to_string(t.edges()[e].second) + " " +
             std::to_string(g.edge_weights[e]) + "\n";
  }
}

std::string header_line(const char* form, const WeightedGraph& g) {
  return std::string(form) + " " + std::to_string(g.topology.k()) + " " +
         std::to_string(g.topology.node_count()) + " " +
         std::to_string(g.topology.edge_count()) + "\n";
}

}  // namespace

std::string serialize_instance(const IsingInstance& inst) {
  std::string out = header_line("ising", inst.graph);
  serialize_body(out, inst.graph);
  return out;
}

std::string serialize_instance(const QuboInstance& inst) {
  std::string out = header_line("qubo", inst.graph);
  out += "# offset " + std::to_string(inst.offset) + "\n";
  serialize_body(out, inst.graph);
  return out;
}

std::string serialize_instance(const AnyInstance& inst) {
  return std::visit([](const auto& i) { return serialize_instance(i); }, inst);
}

AnyInstance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;

  bool have_header = false;
  bool is_qubo = false;
  int k = 0;
  long long want_nodes = 0, want_edges = 0;
  bool have_offset = false;
  long long offset = 0;

  struct Rec {
    NodeId i, j;
    long long w;
    std::size_t line_no;
  };
  std::vector<Rec> node_recs, edge_recs;
  bool have_prev = false;
  std::pair<NodeId, NodeId> prev_key{0, 0};

  while (std::getline(in, line)) {
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0][0] == '#') {
      if (toks.size() >= 2 && toks[0] == "#" && toks[1] == "offset") {
        if (!have_header) fail(line_no, "offset directive before header");
        if (!is_qubo) fail(line_no, "offset directive on an ising instance");
        if (have_offset) fail(line_no, "duplicate offset directive");
        if (toks.size() != 3) fail(line_no, "offset directive needs one value");
        offset = to_int(toks[2], line_no);
        have_offset = true;
      }
      continue;
    }
    if (!have_header) {
      if (toks.size() != 4) fail(line_no, "header must be '<form> <k> <n> <m>'");
      if (toks[0] == "qubo")
        is_qubo = true;
      else if (toks[0] == "ising")
        is_qubo = false;
      else
        fail(line_no, "unknown form '" + toks[0] + "'");
      const long long kk = to_int(toks[1], line_no);
      if (kk < 1 || kk > 16383) fail(line_no, "k out of range");
      k = static_cast<int>(kk);
      want_nodes = to_int(toks[2], line_no);
      want_edges = to_int(toks[3], line_no);
      const long long max_nodes = 8LL * k * k;
      if (want_nodes < 0 || want_nodes > max_nodes) fail(line_no, "node count out of range");
      if (want_edges < 0 || want_edges > 24LL * k * k) fail(line_no, "edge count out of range");
      have_header = true;
      continue;
    }
    if (toks.size() != 3) fail(line_no, "record must be 'i j w'");
    const long long i = to_int(toks[0], line_no);
    const long long j = to_int(toks[1], line_no);
    const long long w = to_int(toks[2], line_no);
    const long long max_id = 8LL * k * k;
    if (i < 0 || i >= max_id || j < 0 || j >= max_id)
      fail(line_no, "node id out of range for k = " + std::to_string(k));
    if (i > j) fail(line_no, "record endpoints must satisfy i <= j");
    if (w < -max_abs_weight || w > max_abs_weight) fail(line_no, "weight out of range");
    const std::pair<NodeId, NodeId> key{static_cast<NodeId>(i), static_cast<NodeId>(j)};
    if (have_prev && !(prev_key < key)) {
      if (prev_key == key)
        throw Error(ErrorCode::duplicate_entry,
                    "line " + std::to_string(line_no) + ": duplicate record " +
                        std::to_string(i) + " " + std::to_string(j));
      fail(line_no, "records out of lexicographic order");
    }
    prev_key = key;
    have_prev = true;
    if (i == j)
      node_recs.push_back({key.first, key.second, w, line_no});
    else
      edge_recs.push_back({key.first, key.second, w, line_no});
  }

  if (!have_header) fail(line_no, "missing header");
  if (static_cast<long long>(node_recs.size()) != want_nodes)
    fail(line_no, "header declares " + std::to_string(want_nodes) + " nodes, found " +
                      std::to_string(node_recs.size()));
  if (static_cast<long long>(edge_recs.size()) != want_edges)
    fail(line_no, "header declares " + std::to_string(want_edges) + " edges, found " +
                      std::to_string(edge_recs.size()));

  std::vector<NodeId> declared(node_recs.size());
  for (std::size_t i = 0; i < node_recs.size(); ++i) declared[i] = node_recs[i].i;
  WeightedGraph g(induce_subgraph(build_chimera(k), declared));
  for (std::size_t i = 0; i < node_recs.size(); ++i)
    g.node_weights[*g.topology.node_pos(node_recs[i].i)] = node_recs[i].w;
  for (const Rec& r : edge_recs) {
    const auto pos = g.topology.edge_pos(r.i, r.j);
    if (!pos)
      throw Error(ErrorCode::non_chimera_edge,
                  "line " + std::to_string(r.line_no) + ": {" + std::to_string(r.i) +
                      "," + std::to_string(r.j) +
                      "} is not an edge of the declared Chimera subgraph");
    g.edge_weights[*pos] = r.w;
  }

  if (is_qubo) return QuboInstance{std::move(g), offset};
  return IsingInstance{std::move(g)};
}

AnyInstance read_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_instance(const AnyInstance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::parse_error, "cannot open " + path + " for writing");
  out << serialize_instance(inst);
  if (!out) throw Error(ErrorCode::parse_error, "short write to " + path);
}

std::string convert_raw_edge_list(const std::string& text, const std::string& form) {
  if (form != "qubo" && form != "ising")
    throw Error(ErrorCode::invalid_parameter, "form must be 'qubo' or 'ising'");
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::map<NodeId, long long> node_w;
  std::map<NodeId, bool> node_explicit;  // separates "u u w" lines from edge mentions
  std::map<Edge, long long> edge_w;
  NodeId max_id = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks.size() != 3) fail(line_no, "record must be 'u v w'");
    const long long u = to_int(toks[0], line_no);
    const long long v = to_int(toks[1], line_no);
    const long long w = to_int(toks[2], line_no);
    if (u < 0 || v < 0 || u > 8LL * 16383 * 16383 - 1 || v > 8LL * 16383 * 16383 - 1)
      fail(line_no, "node id out of range");
    if (w < -max_abs_weight || w > max_abs_weight) fail(line_no, "weight out of range");
    const auto a = static_cast<NodeId>(std::min(u, v));
    const auto b = static_cast<NodeId>(std::max(u, v));
    max_id = std::max(max_id, b);
    if (a == b) {
      if (std::exchange(node_explicit[a], true))
        throw Error(ErrorCode::duplicate_entry,
                    "line " + std::to_string(line_no) + ": duplicate node " +
                        std::to_string(a));
      node_w[a] = w;
    } else {
      node_w.try_emplace(a, 0);
      node_w.try_emplace(b, 0);
      if (!edge_w.emplace(Edge{a, b}, w).second)
        throw Error(ErrorCode::duplicate_entry,
                    "line " + std::to_string(line_no) + ": duplicate edge " +
                        std::to_string(a) + " " + std::to_string(b));
    }
  }
  int k = 1;
  while (8LL * k * k <= max_id) ++k;

  std::string out = form + " " + std::to_string(k) + " " +
                    std::to_string(node_w.size()) + " " + std::to_string(edge_w.size()) +
                    "\n";
  if (form == "qubo") out += "# offset 0\n";
  auto eit = edge_w.begin();
  for (const auto& [v, w] : node_w) {
    out += std::to_string(v) + " " + std::to_string(v) + " " + std::to_string(w) + "\n";
    for (; eit != edge_w.end() && eit->first.first == v; ++eit)
      out += std::to_string(v) + " " + std::to_string(eit->first.second) + " " +
             std::to_string(eit->second) + "\n";
  }
  return out;
}

}  // namespace chimeraq
