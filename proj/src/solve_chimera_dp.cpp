#include <algorithm>
#include <array>
#include <cassert>
#include <chrono>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "chimeraq/solvers.hpp"
#include "solver_common.hpp"

namespace chimeraq {

namespace {

constexpr long long inf_cost = LLONG_MAX / 4;

inline long long spin_of(unsigned nibble, int slot) {
  return ((nibble >> slot) & 1u) ? 1 : -1;
}

// Defensive structural check: every edge must be a K_{4,4} intra-cell edge,
// a same-slot horizontal right-right edge, or a same-slot vertical left-left
// edge.  Topologies built by this library always satisfy this.
void check_chimera(const Topology& t) {
  const int k = t.k();
  for (const auto& [u, v] : t.edges()) {
    const NodeCoords a = chimera_node_coords(k, u);
    const NodeCoords b = chimera_node_coords(k, v);
    bool ok = false;
    if (a.row == b.row && a.col == b.col) {
      ok = a.part != b.part;
    } else if (a.part == Partition::right && b.part == Partition::right &&
               a.row == b.row && a.slot == b.slot) {
      ok = std::abs(a.col - b.col) == 1;
    } else if (a.part == Partition::left && b.part == Partition::left &&
               a.col == b.col && a.slot == b.slot) {
      ok = std::abs(a.row - b.row) == 1;
    }
    if (!ok)
      throw Error(ErrorCode::non_chimera_topology,
                  "edge {" + std::to_string(u) + "," + std::to_string(v) +
                      "} is not a Chimera coupling");
  }
}

SolveResult solve_spin_dp(const IsingInstance& inst, int max_k) {
  const auto start = std::chrono::steady_clock::now();
  const Topology& t = inst.graph.topology;
  const int k = t.k();
  if (k > max_k || 4 * k + 4 > 40)
    throw Error(ErrorCode::k_too_large,
                "frontier DP limited to k <= " + std::to_string(std::min(max_k, 9)) +
                    " (state table has 2^(4k+4) entries), instance has k = " +
                    std::to_string(k));
  if (k > dp_default_max_k)
    std::cerr << "note: frontier DP at k = " << k << " allocates "
              << ((std::uint64_t{1} << (4 * k + 4)) * 16 >> 20) << " MiB of state\n";
  check_chimera(t);

  const int cells = k * k;
  const int r_shift = 4 * k;                       // right nibble position
  const int top_shift = 4 * k - 4;                 // newest left nibble position
  const std::size_t state_count = std::size_t{1} << (r_shift + 4);
  const std::size_t mid_mask = (std::size_t{1} << top_shift) - 1;

  // Weights per cell, zero where the instance has no node/edge.  Node ids:
  // 8*cell + 4*partition + slot; jh couples to the cell on the right, jv to
  // the cell below, both one value per slot.
  const auto nid = [](int cell, int part, int slot) {
    return static_cast<NodeId>(8 * cell + 4 * part + slot);
  };
  std::vector<std::array<long long, 8>> hw(cells);
  std::vector<std::array<long long, 16>> jin(cells);
  std::vector<std::array<long long, 4>> jh(cells), jv(cells);
  for (int cell = 0; cell < cells; ++cell) {
    const int row = cell / k, col = cell % k;
    for (int q = 0; q < 8; ++q)
      hw[cell][q] = inst.graph.node_weight_or_zero(static_cast<NodeId>(8 * cell + q));
    for (int ls = 0; ls < 4; ++ls)
      for (int rs = 0; rs < 4; ++rs)
        jin[cell][ls * 4 + rs] =
            inst.graph.edge_weight_or_zero(nid(cell, 0, ls), nid(cell, 1, rs));
    for (int slot = 0; slot < 4; ++slot) {
      jh[cell][slot] = col + 1 < k ? inst.graph.edge_weight_or_zero(
                                         nid(cell, 1, slot), nid(cell + 1, 1, slot))
                                   : 0;
      jv[cell][slot] = row + 1 < k ? inst.graph.edge_weight_or_zero(
                                         nid(cell, 0, slot), nid(cell + k, 0, slot))
                                   : 0;
    }
  }

  std::vector<long long> cur(state_count, inf_cost), nxt(state_count);
  std::vector<std::uint8_t> parent(static_cast<std::size_t>(cells) * state_count);
  cur[0] = 0;

  std::array<long long, 256> cellc{}, vcost{}, hcost{};
  std::uint64_t relaxations = 0;

  for (int cell = 0; cell < cells; ++cell) {
    const int row = cell / k, col = cell % k;

    for (unsigned l = 0; l < 16; ++l)
      for (unsigned r = 0; r < 16; ++r) {
        long long c = 0;
        for (int slot = 0; slot < 4; ++slot)
          c += hw[cell][slot] * spin_of(l, slot) + hw[cell][4 + slot] * spin_of(r, slot);
        for (int ls = 0; ls < 4; ++ls)
          for (int rs = 0; rs < 4; ++rs)
            c += jin[cell][ls * 4 + rs] * spin_of(l, ls) * spin_of(r, rs);
        cellc[l * 16 + r] = c;
      }
    // vcost[pl*16+l]: coupling with the left partition of the cell above;
    // hcost[pr*16+r]: coupling with the right partition of the cell on the
    // left.  Both vanish on the grid boundary.
    for (unsigned a = 0; a < 16; ++a)
      for (unsigned b = 0; b < 16; ++b) {
        long long v = 0, h = 0;
        for (int slot = 0; slot < 4; ++slot) {
          if (row > 0) v += jv[cell - k][slot] * spin_of(a, slot) * spin_of(b, slot);
          if (col > 0) h += jh[cell - 1][slot] * spin_of(a, slot) * spin_of(b, slot);
        }
        vcost[a * 16 + b] = v;
        hcost[a * 16 + b] = h;
      }

    std::fill(nxt.begin(), nxt.end(), inf_cost);
    std::uint8_t* par = parent.data() + static_cast<std::size_t>(cell) * state_count;
    std::uint64_t live = 0;
    for (std::size_t s = 0; s < state_count; ++s) {
      const long long c0 = cur[s];
      if (c0 >= inf_cost) continue;
      ++live;
      const unsigned pl = static_cast<unsigned>(s & 15u);
      const unsigned pr = static_cast<unsigned>(s >> r_shift);
      const std::size_t mid = (s >> 4) & mid_mask;
      const auto pbyte = static_cast<std::uint8_t>(pl | (pr << 4));
      const long long* vrow = &vcost[pl * 16];
      const long long* hrow = &hcost[pr * 16];
      for (unsigned l = 0; l < 16; ++l) {
        const long long cl = c0 + vrow[l];
        const std::size_t ns_base = mid | (static_cast<std::size_t>(l) << top_shift);
        const long long* crow = &cellc[l * 16];
        for (unsigned r = 0; r < 16; ++r) {
          const long long cand = cl + hrow[r] + crow[r];
          const std::size_t ns = ns_base | (static_cast<std::size_t>(r) << r_shift);
          if (cand < nxt[ns]) {
            nxt[ns] = cand;
            par[ns] = pbyte;
          }
        }
      }
    }
    relaxations += live * 256;
    cur.swap(nxt);
  }

  std::size_t best_state = 0;
  long long best = inf_cost;
  for (std::size_t s = 0; s < state_count; ++s)
    if (cur[s] < best) {
      best = cur[s];
      best_state = s;
    }

  // Walk parents back to cell 0, peeling this cell's config off the state.
  std::vector<std::uint8_t> lnib(cells), rnib(cells);
  std::size_t st = best_state;
  for (int cell = cells - 1; cell >= 0; --cell) {
    lnib[cell] = static_cast<std::uint8_t>((st >> top_shift) & 15u);
    rnib[cell] = static_cast<std::uint8_t>((st >> r_shift) & 15u);
    const std::uint8_t pb = parent[static_cast<std::size_t>(cell) * state_count + st];
    st = (pb & 15u) | ((st & mid_mask) << 4) |
         (static_cast<std::size_t>(pb >> 4) << r_shift);
  }
  assert(st == 0);

  SpinAssignment a;
  a.values.resize(t.node_count());
  for (std::size_t i = 0; i < t.node_count(); ++i) {
    const NodeCoords c = chimera_node_coords(k, t.nodes()[i]);
    const int cell = c.row * k + c.col;
    const unsigned nib = c.part == Partition::left ? lnib[cell] : rnib[cell];
    a.values[i] = static_cast<std::int8_t>(spin_of(nib, c.slot));
  }
  assert(eval_ising(inst, a) == best);

  SolveResult res;
  res.best_value = best;
  res.best_assignment = std::move(a);
  res.proven_optimal = true;
  res.iterations = relaxations;
  res.elapsed = std::chrono::steady_clock::now() - start;
  return res;
}

}  // namespace

SolveResult solve_chimera_dp(const IsingInstance& inst, int max_k) {
  return solve_spin_dp(inst, max_k);
}

SolveResult solve_chimera_dp(const QuboInstance& inst, int max_k) {
  return detail::solve_qubo_via_spin(
      inst, [max_k](const IsingInstance& i) { return solve_spin_dp(i, max_k); });
}

}  // namespace chimeraq
