#include "chimeraq/formulations.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace chimeraq {

std::string VarId::name() const {
  if (kind == Kind::x) return "x" + std::to_string(i);
  return "z_" + std::to_string(i) + "_" + std::to_string(j);
}

VarId x_var(NodeId i) { return VarId{VarId::Kind::x, i, 0}; }

VarId z_var(NodeId i, NodeId j) {
  if (i > j) std::swap(i, j);
  return VarId{VarId::Kind::z, i, j};
}

namespace {

// ceil(a/2) in integer arithmetic
long long ceil_half(long long a) { return a > 0 ? (a + 1) / 2 : a / 2; }

}  // namespace

MilpModel build_milp(const QuboInstance& inst, MilpMode mode) {
  const auto& g = inst.graph;
  const auto& topo = g.topology;

  MilpModel m;
  m.x_vars = topo.nodes();
  m.x_obj = g.node_weights;
  m.offset = inst.offset;

  const auto& edges = topo.edges();
  std::size_t row_idx = 0;
  auto add_row = [&](std::vector<LinTerm> terms, Sense sense, long long rhs) {
    m.rows.push_back({"c" + std::to_string(row_idx++), std::move(terms), sense, rhs});
  };

  for (std::size_t e = 0; e < edges.size(); ++e) {
    const long long q = g.edge_weights[e];
    if (mode == MilpMode::reduced && q == 0) continue;
    const auto [i, j] = edges[e];
    const VarId z = z_var(i, j);
    m.z_vars.push_back(edges[e]);
    m.z_obj.push_back(q);

    const bool keep_upper = mode == MilpMode::full || q < 0;
    const bool keep_lower = mode == MilpMode::full || q > 0;
    if (keep_upper) {
      add_row({{1, z}, {-1, x_var(i)}}, Sense::le, 0);   // z <= x_i
      add_row({{1, z}, {-1, x_var(j)}}, Sense::le, 0);   // z <= x_j
    }
    if (keep_lower) {
      add_row({{1, x_var(i)}, {1, x_var(j)}, {-1, z}}, Sense::le, 1);  // x_i + x_j - z <= 1
      add_row({{1, z}}, Sense::ge, 0);                                 // z >= 0
    }
  }
  return m;
}

MiqpModel build_miqp(const QuboInstance& inst, MiqpRepair repair) {
  const auto& g = inst.graph;
  const auto& topo = g.topology;

  MiqpModel m;
  m.x_vars = topo.nodes();
  m.quad_edges = topo.edges();
  m.quad_edge_coeff = g.edge_weights;
  m.quad_diag = g.node_weights;
  m.linear.assign(m.x_vars.size(), 0);
  m.offset = inst.offset;

  if (repair == MiqpRepair::diag_dominant) {
    // Row sums of |Qbar| off-diagonal are sum_j |Q_ij| / 2; the smallest
    // integer D_ii with Q_ii + D_ii >= sum_j |Q_ij| / 2 is
    // ceil((sum_j |Q_ij| - 2 Q_ii) / 2), clamped at 0.
    std::vector<long long> abs_row(m.x_vars.size(), 0);
    const auto& edges = topo.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const long long a = std::llabs(g.edge_weights[e]);
      abs_row[*topo.node_pos(edges[e].first)] += a;
      abs_row[*topo.node_pos(edges[e].second)] += a;
    }
    std::vector<long long> d(m.x_vars.size(), 0);
    for (std::size_t i = 0; i < d.size(); ++i)
      d[i] = std::max(0LL, ceil_half(abs_row[i] - 2 * g.node_weights[i]));
    for (std::size_t i = 0; i < d.size(); ++i) {
      m.quad_diag[i] += d[i];
      m.linear[i] -= d[i];
    }
    m.shift = std::move(d);
  }
  return m;
}

long long milp_objective_with_implied_z(const MilpModel& m, const BinaryAssignment& x) {
  if (x.values.size() != m.x_vars.size())
    throw Error(ErrorCode::incomplete_assignment, "assignment size mismatch");

  // Position lookups by variable id.
  auto x_pos = [&](NodeId v) -> std::size_t {
    auto it = std::lower_bound(m.x_vars.begin(), m.x_vars.end(), v);
    return static_cast<std::size_t>(it - m.x_vars.begin());
  };

  long long total = m.offset;
  for (std::size_t i = 0; i < m.x_vars.size(); ++i)
    if (x.values[i]) total += m.x_obj[i];

  // For each z variable, intersect the feasible interval implied by the
  // rows at this x with the [0,1] variable bound, then sit at the endpoint
  // favored by the objective. McCormick rows carry unit z coefficients, so
  // every interval endpoint is an exact integer at a binary point.
  for (std::size_t zi = 0; zi < m.z_vars.size(); ++zi) {
    const VarId z = z_var(m.z_vars[zi].first, m.z_vars[zi].second);
    long long lo = 0, hi = 1;
    for (const auto& row : m.rows) {
      long long z_coeff = 0, fixed = 0;
      for (const auto& t : row.terms) {
        if (t.var == z)
          z_coeff += t.coeff;
        else if (t.var.kind == VarId::Kind::x)
          fixed += t.coeff * (x.values[x_pos(t.var.i)] ? 1 : 0);
        // rows never mix two z variables
      }
      if (z_coeff == 0) continue;
      if (z_coeff != 1 && z_coeff != -1)
        throw Error(ErrorCode::invalid_parameter, "non-unit z coefficient in row " + row.name);
      // normalize to z <= b or z >= b
      const long long b = row.rhs - fixed;
      const bool upper = (row.sense == Sense::le) == (z_coeff == 1);
      if (upper)
        hi = std::min(hi, z_coeff == 1 ? b : -b);
      else
        lo = std::max(lo, z_coeff == 1 ? b : -b);
    }
    if (lo > hi)
      throw Error(ErrorCode::invalid_parameter, "infeasible z interval at binary point");
    total += m.z_obj[zi] * (m.z_obj[zi] >= 0 ? lo : hi);
  }
  return total;
}

MilpOptimum milp_min_brute_force(const MilpModel& m, int cap) {
  const std::size_t n = m.x_vars.size();
  if (n > static_cast<std::size_t>(cap))
    throw Error(ErrorCode::too_large,
                "model has " + std::to_string(n) + " binaries, cap is " + std::to_string(cap));

  MilpOptimum best;
  best.value = std::numeric_limits<long long>::max();
  BinaryAssignment x;
  x.values.assign(n, 0);
  const std::uint64_t total = 1ULL << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (std::size_t i = 0; i < n; ++i) x.values[i] = (bits >> i) & 1 ? 1 : 0;
    const long long v = milp_objective_with_implied_z(m, x);
    if (v < best.value) {
      best.value = v;
      best.assignment = x;
    }
  }
  return best;
}

long long miqp_objective_at(const MiqpModel& m, const BinaryAssignment& x) {
  if (x.values.size() != m.x_vars.size())
    throw Error(ErrorCode::incomplete_assignment, "assignment size mismatch");
  auto pos = [&](NodeId v) -> std::size_t {
    auto it = std::lower_bound(m.x_vars.begin(), m.x_vars.end(), v);
    return static_cast<std::size_t>(it - m.x_vars.begin());
  };
  long long total = m.offset;
  for (std::size_t e = 0; e < m.quad_edges.size(); ++e) {
    const auto& [u, v] = m.quad_edges[e];
    if (x.values[pos(u)] && x.values[pos(v)]) total += m.quad_edge_coeff[e];
  }
  for (std::size_t i = 0; i < m.x_vars.size(); ++i)
    if (x.values[i]) total += m.quad_diag[i] + m.linear[i];
  return total;
}

double miqp_quadratic_form(const MiqpModel& m, std::span<const double> x) {
  if (x.size() != m.x_vars.size())
    throw Error(ErrorCode::incomplete_assignment, "point size mismatch");
  auto pos = [&](NodeId v) -> std::size_t {
    auto it = std::lower_bound(m.x_vars.begin(), m.x_vars.end(), v);
    return static_cast<std::size_t>(it - m.x_vars.begin());
  };
  double total = 0.0;
  for (std::size_t i = 0; i < m.x_vars.size(); ++i)
    total += static_cast<double>(m.quad_diag[i]) * x[i] * x[i];
  for (std::size_t e = 0; e < m.quad_edges.size(); ++e) {
    const auto& [u, v] = m.quad_edges[e];
    total += static_cast<double>(m.quad_edge_coeff[e]) * x[pos(u)] * x[pos(v)];
  }
  return total;
}

}  // namespace chimeraq
