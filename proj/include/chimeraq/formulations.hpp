#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chimeraq/instances.hpp"

namespace chimeraq {

// Variable of an LP model: a binary x variable per node, or a continuous
// z variable per edge (the linearization of x_i * x_j).
struct VarId {
  enum class Kind : int { x = 0, z = 1 };
  Kind kind = Kind::x;
  NodeId i = 0;
  NodeId j = 0;  // z only, i < j

  std::string name() const;  // "x<i>" or "z_<i>_<j>"
  auto operator<=>(const VarId&) const = default;
};

VarId x_var(NodeId i);
VarId z_var(NodeId i, NodeId j);

struct LinTerm {
  long long coeff = 0;
  VarId var;
  bool operator==(const LinTerm&) const = default;
};

enum class Sense { le, ge };

struct MilpRow {
  std::string name;
  std::vector<LinTerm> terms;
  Sense sense = Sense::le;
  long long rhs = 0;
  bool operator==(const MilpRow&) const = default;
};

enum class MilpMode { full, reduced };

// Linearized formulation: minimize sum Q_ij z_ij + sum Q_ii x_i + offset
// with the McCormick rows forcing z_ij = x_i x_j at binary points. z
// variables exist only for connectivity-graph edges; in reduced mode only
// for edges with nonzero weight, keeping just the two rows that bind at the
// optimum for the weight's sign.
struct MilpModel {
  std::vector<NodeId> x_vars;        // node order
  std::vector<Edge> z_vars;          // canonical edge order
  std::vector<long long> x_obj;      // parallel to x_vars
  std::vector<long long> z_obj;      // parallel to z_vars
  long long offset = 0;
  std::vector<MilpRow> rows;
  bool operator==(const MilpModel&) const = default;
};

enum class MiqpRepair { none, diag_dominant };

// Direct quadratic formulation: minimize x^T (Qbar + D) x - sum_i D_ii x_i
// + offset, where Qbar is the symmetrized coefficient matrix. With the
// diag_dominant repair, D makes every row of Qbar + D diagonally dominant
// with a nonnegative diagonal, hence the form is positive semidefinite;
// the objective at binary points is unchanged because x_i^2 = x_i.
struct MiqpModel {
  std::vector<NodeId> x_vars;
  std::vector<Edge> quad_edges;            // canonical edge order
  std::vector<long long> quad_edge_coeff;  // pair coefficient Q_ij
  std::vector<long long> quad_diag;        // Q_ii + D_ii
  std::vector<long long> linear;           // -D_ii
  std::optional<std::vector<long long>> shift;  // D, present when repaired
  long long offset = 0;
  bool operator==(const MiqpModel&) const = default;
};

MilpModel build_milp(const QuboInstance& inst, MilpMode mode);
MiqpModel build_miqp(const QuboInstance& inst, MiqpRepair repair);

// Objective value of an MILP model at a binary point, with each z variable
// set to the value an LP solver would choose: the endpoint of its feasible
// interval (from the model's own rows plus the [0,1] bound) that minimizes
// its objective term.
long long milp_objective_with_implied_z(const MilpModel& m, const BinaryAssignment& x);

// Exact minimum of the MILP objective over all binary x (z implied).
struct MilpOptimum {
  long long value = 0;
  BinaryAssignment assignment;
};
MilpOptimum milp_min_brute_force(const MilpModel& m, int cap = 20);

// Objective value of an MIQP model at a binary point (exact integers).
long long miqp_objective_at(const MiqpModel& m, const BinaryAssignment& x);

// x^T (Qbar + D) x at a fractional point; used for PSD spot checks.
double miqp_quadratic_form(const MiqpModel& m, std::span<const double> x);

}  // namespace chimeraq
