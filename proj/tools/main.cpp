// chimeraq command line: generate, convert, formulate, solve, and benchmark
// QUBO/Ising instances on Chimera graphs.
//
// Exit codes: 0 success, 1 usage error, 2 data/solver error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chimeraq/bench.hpp"
#include "chimeraq/formulations.hpp"
#include "chimeraq/generators.hpp"
#include "chimeraq/instance_io.hpp"
#include "chimeraq/lp_format.hpp"
#include "chimeraq/solvers.hpp"

namespace {

using namespace chimeraq;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::parse_error, "cannot open " + path + " for writing");
  out << text;
  if (!out) throw Error(ErrorCode::parse_error, "short write to " + path);
}

GenFamily family_arg(const std::string& name) {
  const auto f = parse_gen_family(name);
  if (!f)
    throw Error(ErrorCode::invalid_parameter,
                "unknown family '" + name +
                    "' (uniform-pm1, uniform-int-range, ising-with-fields, "
                    "ising-zero-field)");
  return *f;
}

std::pair<long long, long long> pert_arg(const std::string& spec) {
  const auto slash = spec.find('/');
  try {
    if (slash == std::string::npos) throw std::invalid_argument(spec);
    return {std::stoll(spec.substr(0, slash)), std::stoll(spec.substr(slash + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::invalid_parameter,
                "--pert expects a fraction like 1/30, got '" + spec + "'");
  }
}

struct HeurFlags {
  int restarts = 8;
  double budget_ms = 250.0;
  std::uint64_t max_moves = 0;  // 0 = unset
  std::uint64_t seed = 0;
  std::string pert = "1/30";
  long long stop_at = 0;
  bool has_stop_at = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--restarts", restarts, "independent heuristic restarts");
    cmd->add_option("--budget-ms", budget_ms, "wall-clock budget per restart (ms)");
    cmd->add_option("--max-moves", max_moves,
                    "move budget per restart (deterministic; 0 = none)");
    cmd->add_option("--seed", seed, "heuristic base seed");
    cmd->add_option("--pert", pert, "perturbation fraction, e.g. 1/30");
    cmd->add_option("--stop-at", stop_at, "stop once this value is reached")
        ->each([this](const std::string&) { has_stop_at = true; });
  }

  HeuristicParams params() const {
    HeuristicParams p;
    p.restarts = restarts;
    std::tie(p.pert_num, p.pert_den) = pert_arg(pert);
    p.seed = seed;
    if (budget_ms > 0) p.budget.max_millis = budget_ms;
    if (max_moves > 0) p.budget.max_moves = max_moves;
    if (has_stop_at) p.budget.stop_at_value = stop_at;
    return p;
  }
};

int run_gen(const std::string& family, int k, int count, std::uint64_t seed,
            const std::string& out_dir, long long lo, long long hi, bool has_range) {
  GenSpec spec;
  spec.family = family_arg(family);
  spec.k = k;
  if (has_range) spec.range = {lo, hi};
  std::filesystem::create_directories(out_dir);
  for (int i = 0; i < count; ++i) {
    spec.seed = seed + static_cast<std::uint64_t>(i);
    const AnyInstance inst = generate(spec);
    const std::string path = out_dir + "/" + gen_family_name(spec.family) + "_k" +
                             std::to_string(k) + "_" + std::to_string(i) + ".txt";
    write_instance(inst, path);
    std::cout << path << "\n";
  }
  return 0;
}

int run_convert(const std::string& in, const std::string& out, const std::string& to,
                bool strip) {
  const AnyInstance inst = read_instance(in);
  if (to == "qubo") {
    if (strip)
      throw Error(ErrorCode::invalid_parameter,
                  "--strip-fields applies to ising output only");
    const QuboInstance q = std::holds_alternative<QuboInstance>(inst)
                               ? std::get<QuboInstance>(inst)
                               : ising_to_qubo(std::get<IsingInstance>(inst));
    write_instance(AnyInstance{q}, out);
  } else if (to == "ising") {
    IsingInstance is;
    if (std::holds_alternative<IsingInstance>(inst)) {
      is = std::get<IsingInstance>(inst);
    } else {
      const ScaledIsing scaled = qubo_to_ising(std::get<QuboInstance>(inst));
      is = scaled.ising;
      std::cout << "note: scaled conversion, qubo_value = (ising_value + "
                << scaled.offset << ") / " << ScaledIsing::scale << "\n";
    }
    if (strip) is = strip_fields(is);
    write_instance(AnyInstance{is}, out);
  } else {
    throw Error(ErrorCode::invalid_parameter, "--to must be 'qubo' or 'ising'");
  }
  return 0;
}

int run_emit(const std::string& in, const std::string& out, const std::string& form) {
  const AnyInstance inst = read_instance(in);
  const QuboInstance q = std::holds_alternative<QuboInstance>(inst)
                             ? std::get<QuboInstance>(inst)
                             : ising_to_qubo(std::get<IsingInstance>(inst));
  std::string text;
  if (form == "milp-full")
    text = emit_lp(build_milp(q, MilpMode::full));
  else if (form == "milp-reduced")
    text = emit_lp(build_milp(q, MilpMode::reduced));
  else if (form == "miqp")
    text = emit_lp(build_miqp(q, MiqpRepair::none));
  else if (form == "miqp-shifted")
    text = emit_lp(build_miqp(q, MiqpRepair::diag_dominant));
  else
    throw Error(ErrorCode::invalid_parameter,
                "--form must be milp-full, milp-reduced, miqp, or miqp-shifted");
  spit(out, text);
  return 0;
}

void print_result(const SolveResult& r, bool with_assignment) {
  std::cout << "value " << r.best_value << "\n"
            << "proven_optimal " << (r.proven_optimal ? 1 : 0) << "\n"
            << "iterations " << r.iterations << "\n"
            << "time_ms " << r.elapsed.count() * 1e3 << "\n";
  if (with_assignment) {
    std::cout << "assignment";
    std::visit(
        [](const auto& a) {
          for (const auto v : a.values) std::cout << " " << static_cast<int>(v);
        },
        r.best_assignment);
    std::cout << "\n";
  }
}

int run_solve(const std::string& in, const std::string& method, int cap, int max_k,
              const HeurFlags& heur, bool with_assignment) {
  const AnyInstance inst = read_instance(in);
  SolveResult res;
  if (method == "brute")
    res = std::visit([&](const auto& i) { return solve_brute_force(i, cap); }, inst);
  else if (method == "dp")
    res = std::visit([&](const auto& i) { return solve_chimera_dp(i, max_k); }, inst);
  else if (method == "heur")
    res = std::visit([&](const auto& i) { return run_restarts(i, heur.params()); },
                     inst);
  else
    throw Error(ErrorCode::invalid_parameter, "--method must be brute, dp, or heur");
  print_result(res, with_assignment);
  return 0;
}

int run_bench(const std::string& family, const std::vector<int>& ks, int count,
              const std::string& method, std::uint64_t seed, const HeurFlags& heur,
              long long lo, long long hi, bool has_range, const std::string& csv_path) {
  ExperimentSpec spec;
  spec.family = family_arg(family);
  spec.ks = ks;
  spec.per_cell = count;
  const auto m = parse_method(method);
  if (!m)
    throw Error(ErrorCode::invalid_parameter,
                "--method must be brute, dp, heur, or heur-vs-dp");
  spec.method = *m;
  if (has_range) spec.range = {lo, hi};
  spec.heur = heur.params();
  spec.base_seed = seed;
  const ExperimentReport report = run_experiment(spec);
  std::cout << render_table(report);
  if (!csv_path.empty()) spit(csv_path, render_csv(report, true));
  return 0;
}

int run_stats(const std::string& in) {
  ExperimentReport report;
  report.cells = recompute_cells_from_csv(slurp(in));
  std::cout << render_table(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QUBO/Ising toolkit for Chimera graphs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate instance files");
  std::string g_family;
  int g_k = 1, g_count = 1;
  std::uint64_t g_seed = 0;
  std::string g_out = ".";
  long long g_lo = 0, g_hi = 0;
  gen->add_option("--family", g_family, "instance family")->required();
  gen->add_option("--k", g_k, "Chimera size C_k")->required();
  gen->add_option("--count", g_count, "number of instances");
  gen->add_option("--seed", g_seed, "seed of the first instance");
  gen->add_option("--out", g_out, "output directory");
  auto* g_lo_opt = gen->add_option("--lo", g_lo, "range low (uniform-int-range)");
  gen->add_option("--hi", g_hi, "range high (uniform-int-range)")->needs(g_lo_opt);

  // convert
  auto* conv = app.add_subcommand("convert", "convert between qubo and ising forms");
  std::string c_in, c_out, c_to;
  bool c_strip = false;
  conv->add_option("--in", c_in)->required();
  conv->add_option("--out", c_out)->required();
  conv->add_option("--to", c_to, "target form: qubo or ising")->required();
  conv->add_flag("--strip-fields", c_strip, "zero the fields of the ising result");

  // emit
  auto* emit = app.add_subcommand("emit", "write an LP file for an instance");
  std::string e_in, e_out, e_form;
  emit->add_option("--in", e_in)->required();
  emit->add_option("--out", e_out)->required();
  emit->add_option("--form", e_form, "milp-full | milp-reduced | miqp | miqp-shifted")
      ->required();

  // solve
  auto* solve = app.add_subcommand("solve", "solve one instance file");
  std::string s_in, s_method = "dp";
  int s_cap = brute_force_default_cap, s_max_k = dp_default_max_k;
  bool s_assignment = false;
  HeurFlags s_heur;
  solve->add_option("--in", s_in)->required();
  solve->add_option("--method", s_method, "brute | dp | heur");
  solve->add_option("--cap", s_cap, "brute-force node cap");
  solve->add_option("--max-k", s_max_k, "frontier DP size cap");
  solve->add_flag("--assignment", s_assignment, "print the best assignment");
  s_heur.attach(solve);

  // bench
  auto* bench = app.add_subcommand("bench", "run an experiment grid");
  std::string b_family, b_method = "dp", b_csv;
  std::vector<int> b_ks;
  int b_count = 50;
  std::uint64_t b_seed = 0;
  long long b_lo = 0, b_hi = 0;
  HeurFlags b_heur;
  bench->add_option("--family", b_family)->required();
  bench->add_option("--ks", b_ks, "comma-separated k list")->delimiter(',');
  bench->add_option("--count", b_count, "instances per cell");
  bench->add_option("--method", b_method, "brute | dp | heur | heur-vs-dp");
  bench->add_option("--bench-seed", b_seed, "base instance seed");
  auto* b_lo_opt = bench->add_option("--lo", b_lo, "range low (uniform-int-range)");
  bench->add_option("--hi", b_hi, "range high (uniform-int-range)")->needs(b_lo_opt);
  bench->add_option("--csv", b_csv, "also write per-instance results to this file");
  b_heur.attach(bench);

  // stats
  auto* stats = app.add_subcommand("stats", "recompute the table from a results csv");
  std::string st_in;
  stats->add_option("--in", st_in)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed())
      return run_gen(g_family, g_k, g_count, g_seed, g_out, g_lo, g_hi,
                     g_lo_opt->count() > 0);
    if (conv->parsed()) return run_convert(c_in, c_out, c_to, c_strip);
    if (emit->parsed()) return run_emit(e_in, e_out, e_form);
    if (solve->parsed())
      return run_solve(s_in, s_method, s_cap, s_max_k, s_heur, s_assignment);
    if (bench->parsed())
      return run_bench(b_family, b_ks, b_count, b_method, b_seed, b_heur, b_lo, b_hi,
                       b_lo_opt->count() > 0, b_csv);
    if (stats->parsed()) return run_stats(st_in);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
