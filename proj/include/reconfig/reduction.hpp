#pragma once

#include <vector>

#include "reconfig/graph.hpp"
#include "reconfig/sp.hpp"
#include "reconfig/token.hpp"

namespace reconfig {

/// The shortest-path-to-independent-set reduction: g_prime is built from the
/// shortest-path layering by turning every layer into a clique and
/// complementing the edges between consecutive layers. Shortest (s,t)-paths
/// then correspond bijectively to independent sets of size k+1.
///
/// g_prime keeps the ids of the source graph whenever every vertex lies on
/// some shortest (s,t)-path (identity maps); otherwise the surviving
/// vertices are packed densely and the maps translate.
struct ReductionOutput {
  Graph g_prime;
  LayerDecomposition layers;
  std::vector<int> to_prime;  // source id -> g_prime id, -1 when absent
  std::vector<int> to_orig;   // g_prime id -> source id
};

/// Throws std::invalid_argument when t is unreachable from s or the source
/// graph is directed.
ReductionOutput build_gprime(const Graph& g, int s, int t);

/// The vertex set of a shortest path, as g_prime ids. Invalid paths throw.
TokenSet path_to_set(const ReductionOutput& r, const SpState& p);

/// The unique layer-ordered path of a size-(k+1) independent set of
/// g_prime. Non-independent or wrongly sized input throws.
SpState set_to_path(const ReductionOutput& r, const TokenSet& ts);

/// Maps a shortest-path reconfiguration sequence onto the token models:
/// states become vertex sets, switches become moves inside one layer (legal
/// slides, hence also jumps); TAR doubles the length via tj_to_tar.
TokenSequence map_sp_to_is(const ReductionOutput& r, const SpSequence& seq,
                           Model target);

/// Inverse direction; TAR input is first collapsed with tar_to_tj.
SpSequence map_is_to_sp(const ReductionOutput& r, const TokenSequence& seq);

}  // namespace reconfig
