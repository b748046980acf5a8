#include "chimeraq/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <iomanip>
#include <sstream>

namespace chimeraq {

namespace {

using Clock = std::chrono::steady_clock;

// Wall-clock floor: a solve is never reported faster than the clock can
// resolve, which also keeps every sample strictly positive for the stats.
constexpr double min_time_ms = 1e-6;

long long value_of(const SolveResult& r) { return r.best_value; }

SolveResult dispatch(const AnyInstance& inst, const ExperimentSpec& spec,
                     const HeuristicParams& heur, Method m) {
  return std::visit(
      [&](const auto& i) {
        switch (m) {
          case Method::brute:
            return solve_brute_force(i, spec.brute_cap);
          case Method::dp:
            return solve_chimera_dp(i, spec.dp_max_k);
          default:
            return run_restarts(i, heur);
        }
      },
      inst);
}

std::string opt_str(const std::optional<long long>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::brute: return "brute";
    case Method::dp: return "dp";
    case Method::heur: return "heur";
    case Method::heur_vs_dp: return "heur-vs-dp";
  }
  return "?";
}

std::optional<Method> parse_method(const std::string& name) {
  if (name == "brute") return Method::brute;
  if (name == "dp") return Method::dp;
  if (name == "heur") return Method::heur;
  if (name == "heur-vs-dp") return Method::heur_vs_dp;
  return std::nullopt;
}

ExperimentReport run_experiment(const ExperimentSpec& spec) {
  ExperimentReport report;
  report.spec = spec;
  for (const int k : spec.ks) {
    CellReport cell;
    cell.family = spec.family;
    cell.k = k;
    std::vector<double> times;
    for (int i = 0; i < spec.per_cell; ++i) {
      InstanceResult row;
      row.family = spec.family;
      row.k = k;
      row.index = i;
      row.seed = spec.base_seed + static_cast<std::uint64_t>(i);
      try {
        GenSpec gs;
        gs.family = spec.family;
        gs.k = k;
        gs.range = spec.range;
        gs.seed = row.seed;
        const AnyInstance inst = generate(gs);
        std::visit(
            [&](const auto& in) {
              row.nodes = in.graph.topology.node_count();
              row.edges = in.graph.topology.edge_count();
            },
            inst);
        cell.nodes = row.nodes;
        cell.edges = row.edges;

        HeuristicParams heur = spec.heur;
        if (spec.method == Method::heur_vs_dp) {
          const SolveResult exact = std::visit(
              [&](const auto& in) { return solve_chimera_dp(in, spec.dp_max_k); },
              inst);
          row.exact = value_of(exact);
          if (!heur.budget.stop_at_value) heur.budget.stop_at_value = row.exact;
        }
        const auto t0 = Clock::now();
        const SolveResult res =
            dispatch(inst, spec, heur,
                     spec.method == Method::heur_vs_dp ? Method::heur : spec.method);
        row.time_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        row.value = value_of(res);
        if (row.exact) row.gap = *row.value - *row.exact;
        ++cell.solved;
        times.push_back(std::max(row.time_ms, min_time_ms));
      } catch (const Error& e) {
        row.error = error_code_name(e.code());
        ++cell.failed;
      }
      report.instances.push_back(std::move(row));
    }
    if (!times.empty()) cell.time_stats = compute_stats(times);
    report.cells.push_back(std::move(cell));
  }
  return report;
}

std::string render_table(const ExperimentReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(18) << "family" << std::right << std::setw(4) << "k"
      << std::setw(8) << "nodes" << std::setw(8) << "edges" << std::setw(7) << "ok"
      << std::setw(7) << "fail" << std::setw(12) << "mean_ms" << std::setw(12)
      << "gmean_ms" << std::setw(12) << "min_ms" << std::setw(12) << "max_ms"
      << std::setw(12) << "std_ms" << "\n";
  out << std::fixed << std::setprecision(3);
  for (const CellReport& c : report.cells) {
    out << std::left << std::setw(18) << gen_family_name(c.family) << std::right
        << std::setw(4) << c.k << std::setw(8) << c.nodes << std::setw(8) << c.edges
        << std::setw(7) << c.solved << std::setw(7) << c.failed;
    if (c.time_stats) {
      const RunStats& s = *c.time_stats;
      out << std::setw(12) << s.mean << std::setw(12) << s.geomean << std::setw(12)
          << s.min << std::setw(12) << s.max << std::setw(12) << s.std_dev;
    } else {
      for (int i = 0; i < 5; ++i) out << std::setw(12) << "-";
    }
    out << "\n";
  }
  return out.str();
}

std::string render_csv(const ExperimentReport& report, bool include_timings) {
  std::ostringstream out;
  out << "family,k,index,seed,nodes,edges,value,exact,gap,error";
  if (include_timings) out << ",time_ms";
  out << "\n";
  out << std::fixed << std::setprecision(6);
  for (const InstanceResult& r : report.instances) {
    out << gen_family_name(r.family) << "," << r.k << "," << r.index << "," << r.seed
        << "," << r.nodes << "," << r.edges << "," << opt_str(r.value) << ","
        << opt_str(r.exact) << "," << opt_str(r.gap) << "," << r.error;
    if (include_timings) out << "," << r.time_ms;
    out << "\n";
  }
  return out.str();
}

std::vector<CellReport> recompute_cells_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line))
    throw Error(ErrorCode::parse_error, "line 1: empty results file");

  const auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (const char ch : s) {
      if (ch == ',') {
        out.push_back(cur);
        cur.clear();
      } else if (ch != '\r') {
        cur += ch;
      }
    }
    out.push_back(cur);
    return out;
  };

  const auto header = split(line);
  const auto col = [&](const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
      throw Error(ErrorCode::parse_error, "line 1: missing column '" + name + "'");
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t c_family = col("family"), c_k = col("k"), c_nodes = col("nodes"),
                    c_edges = col("edges"), c_error = col("error"),
                    c_time = col("time_ms");

  struct Acc {
    CellReport cell;
    std::vector<double> times;
  };
  std::vector<Acc> accs;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto f = split(line);
    if (f.size() != header.size())
      throw Error(ErrorCode::parse_error,
                  "line " + std::to_string(line_no) + ": wrong field count");
    const auto num = [&](std::size_t c) -> double {
      double v = 0;
      const std::string& s = f[c];
      const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size())
        throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) +
                                                ": bad number '" + s + "'");
      return v;
    };
    const auto fam = parse_gen_family(f[c_family]);
    if (!fam)
      throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) +
                                              ": unknown family '" + f[c_family] + "'");
    const int k = static_cast<int>(num(c_k));
    Acc* acc = nullptr;
    for (Acc& a : accs)
      if (a.cell.family == *fam && a.cell.k == k) acc = &a;
    if (!acc) {
      accs.push_back({});
      acc = &accs.back();
      acc->cell.family = *fam;
      acc->cell.k = k;
      acc->cell.nodes = static_cast<std::size_t>(num(c_nodes));
      acc->cell.edges = static_cast<std::size_t>(num(c_edges));
    }
    if (f[c_error].empty()) {
      ++acc->cell.solved;
      acc->times.push_back(std::max(num(c_time), min_time_ms));
    } else {
      ++acc->cell.failed;
    }
  }

  std::vector<CellReport> cells;
  for (Acc& a : accs) {
    if (!a.times.empty()) a.cell.time_stats = compute_stats(a.times);
    cells.push_back(std::move(a.cell));
  }
  return cells;
}

}  // namespace chimeraq
