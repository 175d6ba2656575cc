#include "reconfig/gadget_exp.hpp"

#include <algorithm>
#include <string>

namespace reconfig {

int ExpInstance::id(ExpRole role, int level, int index) const {
  const int base = 1 + 13 * (k - level);
  return role == ExpRole::X ? base + (index - 1) : base + 7 + (index - 1);
}

ExpInstance gen_exp(int k) {
  if (k < 1) throw std::invalid_argument("gen_exp: k must be >= 1");

  ExpInstance inst;
  inst.k = k;
  inst.s = 0;
  inst.t = 13 * k + 1;
  inst.g = Graph(13 * k + 2, /*directed=*/false);
  Graph& g = inst.g;

  auto x = [&](int level, int i) { return inst.id(ExpRole::X, level, i); };
  auto y = [&](int level, int i) { return inst.id(ExpRole::Y, level, i); };

  g.set_label(inst.s, "s");
  g.set_label(inst.t, "t");
  for (int level = k; level >= 1; --level) {
    for (int i = 1; i <= 7; ++i)
      g.set_label(x(level, i),
                  "x[" + std::to_string(level) + "][" + std::to_string(i) + "]");
    for (int i = 1; i <= 6; ++i)
      g.set_label(y(level, i),
                  "y[" + std::to_string(level) + "][" + std::to_string(i) + "]");
  }

  for (int i = 1; i <= 7; ++i) g.add_edge(inst.s, x(k, i));
  for (int level = k; level >= 1; --level) {
    for (int i = 1; i <= 6; ++i) {
      g.add_edge(x(level, i), y(level, i));
      g.add_edge(x(level, i + 1), y(level, i));
    }
    if (level > 1) {
      // y[l][1,3,5] join the whole next x-layer; y[l][2,4,6] pin single
      // columns, forcing the zig-zag that doubles the distance per level.
      for (int i : {1, 3, 5}) {
        for (int j = 1; j <= 7; ++j) g.add_edge(y(level, i), x(level - 1, j));
      }
      g.add_edge(y(level, 2), x(level - 1, 1));
      g.add_edge(y(level, 4), x(level - 1, 7));
      g.add_edge(y(level, 6), x(level - 1, 1));
    } else {
      for (int i = 1; i <= 6; ++i) g.add_edge(y(1, i), inst.t);
    }
  }

  inst.p_b.push_back(inst.s);
  for (int level = k; level >= 1; --level) {
    inst.p_b.push_back(x(level, 1));
    inst.p_b.push_back(y(level, 1));
  }
  inst.p_b.push_back(inst.t);

  inst.p_e.push_back(inst.s);
  inst.p_e.push_back(x(k, 7));
  inst.p_e.push_back(y(k, 6));
  for (int level = k - 1; level >= 1; --level) {
    inst.p_e.push_back(x(level, 1));
    inst.p_e.push_back(y(level, 1));
  }
  inst.p_e.push_back(inst.t);

  return inst;
}

namespace {

// A switch step, recorded as annotations so the recursive sequence can be
// reversed as a move list and re-validated against actual states.
std::vector<SpMove> level_moves(const ExpInstance& inst, int level) {
  auto x = [&](int i) { return inst.id(ExpRole::X, level, i); };
  auto y = [&](int i) { return inst.id(ExpRole::Y, level, i); };
  const int pos_x = 2 * (inst.k - level) + 1;
  const int pos_y = pos_x + 1;
  auto mx = [&](int from, int to) { return SpMove{pos_x, x(from), x(to)}; };
  auto my = [&](int from, int to) { return SpMove{pos_y, y(from), y(to)}; };

  std::vector<SpMove> moves;
  if (level == 1) {
    // Base case: the 11-move index-increasing slide x2,y2,x3,...,y6,x7.
    for (int i = 1; i <= 6; ++i) {
      moves.push_back(mx(i, i + 1));
      moves.push_back(my(i, i + 1));
    }
    moves.pop_back();  // ends on x[1][7]; y stays at index 6
    return moves;
  }

  std::vector<SpMove> inner = level_moves(inst, level - 1);
  std::vector<SpMove> inner_rev(inner.rbegin(), inner.rend());
  for (SpMove& m : inner_rev) std::swap(m.old_vertex, m.new_vertex);

  moves.push_back(mx(1, 2));
  moves.push_back(my(1, 2));
  moves.push_back(mx(2, 3));
  moves.push_back(my(2, 3));
  moves.insert(moves.end(), inner.begin(), inner.end());
  moves.push_back(mx(3, 4));
  moves.push_back(my(3, 4));
  moves.push_back(mx(4, 5));
  moves.push_back(my(4, 5));
  moves.insert(moves.end(), inner_rev.begin(), inner_rev.end());
  moves.push_back(mx(5, 6));
  moves.push_back(my(5, 6));
  moves.push_back(mx(6, 7));
  return moves;
}

}  // namespace

SpSequence exp_witness(const ExpInstance& inst) {
  const std::vector<SpMove> moves = level_moves(inst, inst.k);

  SpSequence seq;
  seq.states.push_back(inst.p_b);
  SpState current = inst.p_b;
  for (const SpMove& m : moves) {
    if (current[m.position] != m.old_vertex)
      throw std::logic_error("exp_witness: move does not match state");
    if (!inst.g.has_edge(current[m.position - 1], m.new_vertex) ||
        !inst.g.has_edge(m.new_vertex, current[m.position + 1]))
      throw std::logic_error("exp_witness: switch breaks path adjacency");
    current[m.position] = m.new_vertex;
    seq.states.push_back(current);
  }
  if (current != inst.p_e)
    throw std::logic_error("exp_witness: sequence does not end at p_e");
  seq.moves = moves;
  return seq;
}

}  // namespace reconfig
