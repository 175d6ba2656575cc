#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "reconfig/graph.hpp"

namespace reconfig {

/// A node of the shortest-path reconfiguration graph: a shortest (s,t)-path
/// as an explicit vertex sequence.
using SpState = std::vector<int>;

struct SpMove {
  int position = 0;  // index into the state where the switch happens
  int old_vertex = 0;
  int new_vertex = 0;
};

/// A reconfiguration sequence of shortest paths; consecutive states differ,
/// as sequences, in exactly one vertex. moves.size() == states.size() - 1.
struct SpSequence {
  std::vector<SpState> states;
  std::vector<SpMove> moves;

  int length() const { return static_cast<int>(moves.size()); }
};

enum class SearchStatus { Found, NotReconfigurable, BudgetExceeded };

struct SpSearchResult {
  SearchStatus status = SearchStatus::NotReconfigurable;
  SpSequence seq;  // populated when status == Found
};

/// True iff p is a shortest (s,t)-path in g. Malformed input yields false
/// with a diagnostic in *why when given.
bool sp_is_valid(const Graph& g, int s, int t, const SpState& p,
                 std::string* why = nullptr);
/// Same check against a precomputed layering (avoids repeated BFS).
bool sp_is_valid(const Graph& g, const LayerDecomposition& layers,
                 const SpState& p, std::string* why = nullptr);

/// All shortest (s,t)-paths differing from p in exactly one position.
/// Deterministic order: ascending position, then ascending replacement id.
std::vector<SpState> sp_neighbors(const Graph& g,
                                  const LayerDecomposition& layers,
                                  const SpState& p);

/// Shortest reconfiguration sequence from p_from to p_to by BFS over the
/// implicit state space. max_len truncates the search depth and
/// distinguishes a provably exhausted component (NotReconfigurable) from a
/// pruned one (BudgetExceeded). Invalid endpoints throw.
SpSearchResult sp_bfs(const Graph& g, int s, int t, const SpState& p_from,
                      const SpState& p_to,
                      std::optional<long long> max_len = std::nullopt);

/// All shortest (s,t)-paths by DFS over the layered DAG, in lexicographic
/// order. Throws ResourceLimitError when more than cap paths exist.
std::vector<SpState> sp_enumerate(const Graph& g, int s, int t,
                                  std::size_t cap = 1u << 20);

/// Full validity sweep over a sequence: every state a shortest (s,t)-path,
/// consecutive states differing in exactly one position.
bool validate_sp_sequence(const Graph& g, const SpSequence& seq,
                          std::string* why = nullptr);

/// Recomputes per-step move annotations from the state list. Throws
/// std::invalid_argument when consecutive states do not differ in exactly
/// one position.
std::vector<SpMove> derive_sp_moves(const std::vector<SpState>& states);

// --- file formats ---

/// SP sequence file: header "sp-sequence <length>", one state per line.
std::string serialize_sp_sequence(const SpSequence& seq);
SpSequence parse_sp_sequence(std::istream& in);
SpSequence load_sp_sequence_file(const std::string& path);
void save_sp_sequence_file(const SpSequence& seq, const std::string& path);

/// Paths file: header "sp-paths <count>", one path per line.
std::string serialize_sp_paths(const std::vector<SpState>& paths);
std::vector<SpState> parse_sp_paths(std::istream& in);
std::vector<SpState> load_sp_paths_file(const std::string& path);

}  // namespace reconfig
