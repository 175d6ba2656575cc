#include "reconfig/gadget_sat.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace reconfig {

void validate_formula(const CnfFormula& formula) {
  if (formula.num_vars < 0)
    throw std::invalid_argument("formula has negative variable count");
  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    const Clause& clause = formula.clauses[c];
    if (clause.empty())
      throw std::invalid_argument("clause " + std::to_string(c + 1) +
                                  " is empty");
    for (const Literal& lit : clause) {
      if (lit.var < 1 || lit.var > formula.num_vars)
        throw std::invalid_argument("clause " + std::to_string(c + 1) +
                                    " uses variable " +
                                    std::to_string(lit.var) +
                                    " outside 1.." +
                                    std::to_string(formula.num_vars));
    }
    for (std::size_t i = 0; i + 1 < clause.size(); ++i) {
      if (clause[i].var == clause[i + 1].var)
        throw std::invalid_argument("clause " + std::to_string(c + 1) +
                                    " contains both polarities of x" +
                                    std::to_string(clause[i].var));
    }
  }
}

bool clause_satisfied_by(const Clause& clause, int var, int value) {
  for (const Literal& lit : clause) {
    if (lit.var == var && lit.positive == (value != 0)) return true;
  }
  return false;
}

bool satisfies(const CnfFormula& formula, const std::vector<bool>& assignment) {
  for (const Clause& clause : formula.clauses) {
    bool sat = false;
    for (const Literal& lit : clause) {
      if (assignment[lit.var - 1] == lit.positive) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

CnfFormula parse_dimacs(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == 'c') continue;
    std::istringstream header(line);
    std::string p, cnf;
    if (!(header >> p >> cnf >> n >> m) || p != "p" || cnf != "cnf" || n < 0 ||
        m < 0)
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'p cnf <vars> <clauses>'");
    break;
  }
  if (n < 0) throw ParseError("missing DIMACS header");

  CnfFormula formula;
  formula.num_vars = static_cast<int>(n);
  Clause current;
  long long lit;
  while (static_cast<long long>(formula.clauses.size()) < m && (in >> lit)) {
    if (lit == 0) {
      if (current.empty())
        throw ParseError("empty clause " +
                         std::to_string(formula.clauses.size() + 1));
      std::sort(current.begin(), current.end());
      current.erase(std::unique(current.begin(), current.end()),
                    current.end());
      formula.clauses.push_back(std::move(current));
      current.clear();
    } else {
      long long var = lit < 0 ? -lit : lit;
      if (var > n)
        throw ParseError("literal " + std::to_string(lit) +
                         " outside declared variable range");
      current.push_back({static_cast<int>(var), lit > 0});
    }
  }
  if (static_cast<long long>(formula.clauses.size()) != m)
    throw ParseError("expected " + std::to_string(m) + " clauses, got " +
                     std::to_string(formula.clauses.size()));
  validate_formula(formula);
  return formula;
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

CnfFormula load_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open CNF file: " + path);
  return parse_dimacs(in);
}

int SatInstance::gadget_id(int var, int vstate, int cstate, int depth) const {
  return (((var - 1) * 2 + vstate) * 2 + cstate) * (2 * m) + (depth - 1);
}

int SatInstance::beg_id(int depth) const { return 8 * n * m + (depth - 1); }

int SatInstance::end_id(int depth) const {
  return 8 * n * m + 2 * m + (depth - 1);
}

SatInstance gen_sat(const CnfFormula& formula) {
  validate_formula(formula);
  if (formula.num_vars < 1 || formula.clauses.empty())
    throw std::invalid_argument(
        "gen_sat: formula needs at least one variable and one clause");

  SatInstance inst;
  inst.n = formula.num_vars;
  inst.m = formula.num_clauses();
  inst.formula = formula;
  const int n = inst.n;
  const int m = inst.m;
  const int depth_count = 2 * m;
  inst.s = 8 * n * m + 4 * m;
  inst.t = inst.s + 1;
  inst.budget = 2LL * m * (n + 2);
  inst.g = Graph(8 * n * m + 4 * m + 2, /*directed=*/false);
  inst.attrs.assign(inst.g.vertex_count(), {});
  Graph& g = inst.g;

  auto v = [&](int i, int vs, int cs, int j) {
    return inst.gadget_id(i, vs, cs, j);
  };

  for (int i = 1; i <= n; ++i) {
    for (int vs = 0; vs <= 1; ++vs) {
      for (int cs = 0; cs <= 1; ++cs) {
        for (int j = 1; j <= depth_count; ++j) {
          int id = v(i, vs, cs, j);
          inst.attrs[id] = {i, vs, cs, j};
          g.set_label(id, "v[" + std::to_string(i) + "][" +
                              std::to_string(vs) + "][" + std::to_string(cs) +
                              "][" + std::to_string(j) + "]");
        }
      }
    }
  }
  for (int j = 1; j <= depth_count; ++j) {
    inst.attrs[inst.beg_id(j)] = {0, -1, 0, j};
    g.set_label(inst.beg_id(j), "beg[" + std::to_string(j) + "]");
    inst.attrs[inst.end_id(j)] = {n + 1, -1, 1, j};
    g.set_label(inst.end_id(j), "end[" + std::to_string(j) + "]");
  }
  inst.attrs[inst.s] = {-1, -1, -1, 0};
  inst.attrs[inst.t] = {-1, -1, -1, depth_count + 1};
  g.set_label(inst.s, "s");
  g.set_label(inst.t, "t");

  // Gadget-internal edges: depth chains per c-state, c-state crossings
  // after each even depth, and formula edges where x_i = vs satisfies C_j.
  for (int i = 1; i <= n; ++i) {
    for (int vs = 0; vs <= 1; ++vs) {
      for (int cs = 0; cs <= 1; ++cs) {
        for (int j = 1; j <= depth_count - 1; ++j)
          g.add_edge(v(i, vs, cs, j), v(i, vs, cs, j + 1));
      }
      for (int j = 1; j <= m - 1; ++j) {
        g.add_edge(v(i, vs, 0, 2 * j), v(i, vs, 1, 2 * j + 1));
        g.add_edge(v(i, vs, 1, 2 * j), v(i, vs, 0, 2 * j + 1));
      }
      for (int j = 1; j <= m; ++j) {
        if (clause_satisfied_by(formula.clauses[j - 1], i, vs)) {
          int a = v(i, vs, 1, 2 * j - 1);
          int b = v(i, vs, 0, 2 * j);
          g.add_edge(a, b);
          inst.formula_edges.insert({std::min(a, b), std::max(a, b)});
        }
      }
    }
  }

  // Connections between the gadgets of x_{i+1} and x_i: straight edges keep
  // the c-state, diagonal edges after even depths flip it.
  for (int i = 1; i <= n - 1; ++i) {
    for (int vs_hi = 0; vs_hi <= 1; ++vs_hi) {
      for (int vs_lo = 0; vs_lo <= 1; ++vs_lo) {
        for (int cs = 0; cs <= 1; ++cs) {
          for (int d = 1; d <= depth_count - 1; ++d)
            g.add_edge(v(i + 1, vs_hi, cs, d), v(i, vs_lo, cs, d + 1));
          for (int j = 1; j <= m - 1; ++j)
            g.add_edge(v(i + 1, vs_hi, cs, 2 * j),
                       v(i, vs_lo, 1 - cs, 2 * j + 1));
        }
      }
    }
  }

  // Begin and end chains plus their connections into the outermost gadgets.
  for (int j = 1; j <= depth_count - 1; ++j) {
    g.add_edge(inst.beg_id(j), inst.beg_id(j + 1));
    g.add_edge(inst.end_id(j), inst.end_id(j + 1));
    for (int vs = 0; vs <= 1; ++vs) {
      g.add_edge(v(1, vs, 0, j), inst.beg_id(j + 1));
      g.add_edge(inst.end_id(j), v(n, vs, 1, j + 1));
    }
  }

  // s reaches every depth-1 vertex; every depth-2m vertex reaches t.
  for (int id = 0; id < g.vertex_count(); ++id) {
    if (id == inst.s || id == inst.t) continue;
    if (inst.attrs[id].depth == 1) g.add_edge(inst.s, id);
    if (inst.attrs[id].depth == depth_count) g.add_edge(id, inst.t);
  }

  inst.p_b.push_back(inst.s);
  for (int j = 1; j <= depth_count; ++j) inst.p_b.push_back(inst.beg_id(j));
  inst.p_b.push_back(inst.t);
  inst.p_e.push_back(inst.s);
  for (int j = 1; j <= depth_count; ++j) inst.p_e.push_back(inst.end_id(j));
  inst.p_e.push_back(inst.t);

  return inst;
}

std::vector<FactViolation> validate_facts(const SatInstance& inst) {
  std::vector<FactViolation> out;
  auto flag = [&](int fact, int u, int v, const std::string& detail) {
    out.push_back({fact, u, v, detail});
  };
  for (const auto& [eu, ev] : inst.g.edges()) {
    if (eu == inst.s || eu == inst.t || ev == inst.s || ev == inst.t) continue;
    const SatVertexAttrs& au = inst.attrs[eu];
    const SatVertexAttrs& av = inst.attrs[ev];
    // Orient by increasing depth.
    int a = eu, b = ev;
    if (au.depth > av.depth) std::swap(a, b);
    const SatVertexAttrs& aa = inst.attrs[a];
    const SatVertexAttrs& ab = inst.attrs[b];
    if (ab.depth != aa.depth + 1) {
      flag(0, a, b, "edge does not join consecutive depths");
      continue;
    }
    const bool intra = aa.level == ab.level;
    const bool odd = aa.depth % 2 == 1;
    const bool formula =
        inst.formula_edges.count({std::min(a, b), std::max(a, b)}) > 0;
    if (!(ab.level <= aa.level && aa.level <= ab.level + 1))
      flag(1, a, b,
           "level " + std::to_string(aa.level) + " -> " +
               std::to_string(ab.level));
    if (intra && odd && aa.cstate == 0 && ab.cstate != 0)
      flag(2, a, b, "intra-level odd edge raises c-state from 0");
    if (!intra && odd && aa.cstate != ab.cstate)
      flag(3, a, b, "inter-level odd edge changes c-state");
    if (odd && !formula && aa.cstate != ab.cstate)
      flag(4, a, b, "non-formula odd edge changes c-state");
    if (intra && aa.vstate != ab.vstate)
      flag(5, a, b, "intra-level edge changes v-state");
  }
  return out;
}

long long potential(const SatInstance& inst, const SpState& p) {
  if (p.size() < 2)
    throw std::invalid_argument("potential: path too short");
  long long total = 0;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    const SatVertexAttrs& a = inst.attrs.at(p[i]);
    if (a.level < 0 || a.cstate < 0)
      throw std::invalid_argument("potential: interior vertex " +
                                  std::to_string(p[i]) +
                                  " has no level/c-state");
    total += a.level + a.cstate;
  }
  return total;
}

SpSequence sat_witness(const SatInstance& inst,
                       const std::vector<bool>& assignment) {
  const int n = inst.n;
  const int m = inst.m;
  if (static_cast<int>(assignment.size()) != n)
    throw std::invalid_argument("sat_witness: assignment has " +
                                std::to_string(assignment.size()) +
                                " values, formula has " + std::to_string(n) +
                                " variables");
  // first_sat[j] = least i such that theta_1..theta_i satisfies C_{j+1}.
  std::vector<int> first_sat(m, n + 1);
  for (int j = 0; j < m; ++j) {
    for (int i = 1; i <= n; ++i) {
      if (clause_satisfied_by(inst.formula.clauses[j], i,
                              assignment[i - 1] ? 1 : 0)) {
        first_sat[j] = i;
        break;
      }
    }
    if (first_sat[j] > n)
      throw std::invalid_argument("sat_witness: assignment leaves clause " +
                                  std::to_string(j + 1) + " unsatisfied");
  }
  auto sat_after = [&](int i, int j) { return first_sat[j - 1] <= i; };
  auto theta = [&](int i) { return assignment[i - 1] ? 1 : 0; };

  std::vector<SpMove> moves;
  auto switch_to = [&](int pos, int to) { moves.push_back({pos, -1, to}); };

  // p_b -> p(1,0): walk onto the x_1 gadget, all c-states 0.
  for (int j = 1; j <= 2 * m; ++j)
    switch_to(j, inst.gadget_id(1, theta(1), 0, j));
  for (int i = 1; i <= n; ++i) {
    // p(i,i-1) -> p(i,i): flip the clause pairs x_i newly satisfies.
    for (int jc = 1; jc <= m; ++jc) {
      if (sat_after(i, jc) && !sat_after(i - 1, jc)) {
        switch_to(2 * jc - 1, inst.gadget_id(i, theta(i), 1, 2 * jc - 1));
        switch_to(2 * jc, inst.gadget_id(i, theta(i), 1, 2 * jc));
      }
    }
    if (i < n) {
      // p(i,i) -> p(i+1,i): shift the whole path one level up.
      for (int j = 1; j <= 2 * m; ++j) {
        int cs = sat_after(i, (j + 1) / 2) ? 1 : 0;
        switch_to(j, inst.gadget_id(i + 1, theta(i + 1), cs, j));
      }
    }
  }
  // p(n,n) -> p_e: walk onto the end chain.
  for (int j = 1; j <= 2 * m; ++j) switch_to(j, inst.end_id(j));

  SpSequence seq;
  seq.states.push_back(inst.p_b);
  SpState current = inst.p_b;
  for (SpMove& mv : moves) {
    mv.old_vertex = current[mv.position];
    if (!inst.g.has_edge(current[mv.position - 1], mv.new_vertex) ||
        !inst.g.has_edge(mv.new_vertex, current[mv.position + 1]))
      throw std::logic_error("sat_witness: switch breaks path adjacency");
    current[mv.position] = mv.new_vertex;
    seq.states.push_back(current);
  }
  if (current != inst.p_e)
    throw std::logic_error("sat_witness: sequence does not end at p_e");
  if (static_cast<long long>(moves.size()) != inst.budget)
    throw std::logic_error("sat_witness: sequence length differs from budget");
  seq.moves = std::move(moves);
  return seq;
}

bool minspr_decide(const CnfFormula& formula) {
  const SatInstance inst = gen_sat(formula);
  const SpSearchResult result =
      sp_bfs(inst.g, inst.s, inst.t, inst.p_b, inst.p_e, inst.budget);
  return result.status == SearchStatus::Found;
}

}  // namespace reconfig
