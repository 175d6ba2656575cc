#pragma once

#include <string>
#include <vector>

#include "reconfig/graph.hpp"
#include "reconfig/token.hpp"

namespace reconfig {

/// Subgraph induced by the symmetric difference of two equal-size
/// independent sets; bipartite with parts a_side and b_side. Adjacency is
/// stored by side index.
struct PiranGraph {
  std::vector<int> a_side;  // A \ B, sorted original ids
  std::vector<int> b_side;  // B \ A, sorted original ids
  std::vector<std::vector<int>> a_adj;  // a index -> b indices
  std::vector<std::vector<int>> b_adj;  // b index -> a indices
  int edge_count = 0;

  /// A bipartite graph is even-hole-free exactly when it is a forest.
  bool acyclic() const;
};

/// Builds the Piran graph. Throws std::invalid_argument when the sets are
/// not independent or differ in size.
PiranGraph piran(const Graph& g, const TokenSet& a, const TokenSet& b);

/// Raised when tj_solve_ehf finds a cycle in the Piran graph.
struct NotEvenHoleFreeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shortest TJ sequence from a to b when the Piran graph is a forest:
/// repeatedly take the lowest-id b-side vertex with at most one remaining
/// a-side neighbor and jump that neighbor (or the lowest-id leftover token)
/// onto it. Length is exactly |A \ B|. Throws NotEvenHoleFreeError when the
/// Piran graph contains a cycle.
TokenSequence tj_solve_ehf(const Graph& g, const TokenSet& a,
                           const TokenSet& b);

/// Connected components of the complement graph restricted to the given
/// vertices, computed without materializing the complement. Components are
/// sorted internally and ordered by smallest member.
std::vector<std::vector<int>> co_components(const Graph& g,
                                            const std::vector<int>& vertices);

/// Whether g is a cograph: every induced subgraph with >= 2 vertices is
/// disconnected or co-disconnected, checked by recursive decomposition.
bool is_cograph(const Graph& g);

/// Raised when ts_solve_p4free is handed a graph with an induced P4.
struct NotCographError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shortest TS sequence on a cograph by component / co-component recursion:
/// split counts must match per component, a lone token follows a shortest
/// vertex path, larger sets must share a co-component. Verifies the cograph
/// property and throws NotCographError otherwise.
TokenSearchResult ts_solve_p4free(const Graph& g, const TokenSet& a,
                                  const TokenSet& b);

}  // namespace reconfig
