#pragma once

#include "reconfig/graph.hpp"
#include "reconfig/sp.hpp"

namespace reconfig {

enum class ExpRole { X, Y };

/// A generated exponential-diameter instance: a graph of 13k+2 vertices in
/// which the reconfiguration distance between the two endpoint paths grows
/// as Theta(2^k). Level l contributes seven x-vertices and six y-vertices;
/// vertex ids run s, x[k][1..7], y[k][1..6], x[k-1][1..7], ..., t.
struct ExpInstance {
  Graph g;
  int k = 1;
  int s = 0;
  int t = 0;
  SpState p_b;  // all-index-1 spine
  SpState p_e;  // enters via x[k][7], y[k][6], then the index-1 spine

  int id(ExpRole role, int level, int index) const;
};

/// Builds the level-k instance. Throws std::invalid_argument for k < 1.
ExpInstance gen_exp(int k);

/// The constructive reconfiguration sequence p_b -> p_e of length exactly
/// 11(2^k - 1): four switches walking the top level to index 3, the level
/// k-1 sequence, four more switches to index 5, the level k-1 sequence
/// reversed, then three closing switches. Every intermediate state is
/// checked to be a valid shortest path.
SpSequence exp_witness(const ExpInstance& inst);

}  // namespace reconfig
