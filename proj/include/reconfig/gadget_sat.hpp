#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "reconfig/graph.hpp"
#include "reconfig/sp.hpp"

namespace reconfig {

struct Literal {
  int var = 0;  // 1-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;  // sorted, duplicate-free

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  int num_clauses() const { return static_cast<int>(clauses.size()); }
};

/// Throws std::invalid_argument unless variable indices are in 1..n, no
/// clause is empty, and no clause contains both polarities of a variable.
void validate_formula(const CnfFormula& formula);

bool clause_satisfied_by(const Clause& clause, int var, int value);
bool satisfies(const CnfFormula& formula, const std::vector<bool>& assignment);

/// DIMACS CNF reader ("p cnf <n> <m>", 'c' comments, 0-terminated clauses).
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);
CnfFormula load_dimacs_file(const std::string& path);

/// Per-vertex coordinates of the reduction graph; -1 where undefined
/// (s and t carry only a depth, the begin/end chains carry no v-state).
struct SatVertexAttrs {
  int level = -1;
  int vstate = -1;
  int cstate = -1;
  int depth = -1;
};

/// The generated hardness instance: a depth-layered undirected graph in
/// which p_b reconfigures to p_e within budget = 2m(n+2) moves iff the
/// formula is satisfiable. Every (s,t)-path crosses one vertex per depth,
/// so all of them are shortest.
struct SatInstance {
  Graph g;
  int s = 0;
  int t = 0;
  SpState p_b;  // the begin chain
  SpState p_e;  // the end chain
  long long budget = 0;
  int n = 0;  // variables
  int m = 0;  // clauses
  CnfFormula formula;
  std::vector<SatVertexAttrs> attrs;
  std::set<std::pair<int, int>> formula_edges;  // normalized (min,max)

  int gadget_id(int var, int vstate, int cstate, int depth) const;
  int beg_id(int depth) const;
  int end_id(int depth) const;
};

SatInstance gen_sat(const CnfFormula& formula);

/// One structural-rule violation found by validate_facts.
struct FactViolation {
  int fact = 0;  // 1..5, or 0 for an edge not joining consecutive depths
  int u = 0;
  int v = 0;
  std::string detail;
};

/// Checks the five structural rules every generated edge must obey (level
/// drop of at most one, c-state propagation on odd edges, constant v-state
/// inside a gadget). Edges touching s or t carry no coordinates and are
/// skipped. Empty result = instance is well-formed.
std::vector<FactViolation> validate_facts(const SatInstance& inst);

/// Sum of level + c-state over the interior vertices of a path. 0 on p_b,
/// 2m(n+2) on p_e; any single switch raises it by at most one, which is
/// what pins the budget as a lower bound.
long long potential(const SatInstance& inst, const SpState& p);

/// The explicit budget-length reconfiguration sequence for a satisfying
/// assignment: walk p_b into the gadgets of x_1, flip freshly satisfied
/// clause pairs via formula edges, step level by level to x_n, then walk
/// onto the end chain. Throws std::invalid_argument (naming a clause) when
/// the assignment does not satisfy the formula.
SpSequence sat_witness(const SatInstance& inst,
                       const std::vector<bool>& assignment);

/// True iff the generated instance admits a reconfiguration sequence of
/// length at most 2m(n+2), which holds iff the formula is satisfiable.
/// Exact BFS; intended for desk-scale formulas.
bool minspr_decide(const CnfFormula& formula);

}  // namespace reconfig
