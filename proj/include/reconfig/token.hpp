#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "reconfig/graph.hpp"
#include "reconfig/sp.hpp"  // SearchStatus

namespace reconfig {

/// An independent set of vertices, kept sorted ascending.
using TokenSet = std::vector<int>;

enum class Model { TS, TJ, TAR };

std::string model_name(Model m);
std::optional<Model> model_from_name(const std::string& name);

/// One step of a token sequence. Slides and jumps set both fields; TAR
/// additions leave removed = -1 and removals leave added = -1.
struct TokenMove {
  int removed = -1;
  int added = -1;
};

/// A reconfiguration sequence of independent sets. For TAR, tar_k is the
/// threshold: every state has size >= tar_k - 1. moves.size() ==
/// states.size() - 1.
struct TokenSequence {
  Model model = Model::TS;
  int tar_k = 0;  // meaningful only for TAR
  std::vector<TokenSet> states;
  std::vector<TokenMove> moves;

  int length() const { return static_cast<int>(moves.size()); }
};

struct TokenSearchResult {
  SearchStatus status = SearchStatus::NotReconfigurable;
  TokenSequence seq;  // populated when status == Found
};

bool is_independent(const Graph& g, const TokenSet& a);

/// All token sets one move away from a under the given model, sorted
/// lexicographically. For TAR, k is the threshold (size floor k-1).
std::vector<TokenSet> is_neighbors(const Graph& g, const TokenSet& a,
                                   Model model, int k = 0);

/// Shortest reconfiguration sequence by BFS over the implicit state space.
/// TS/TJ endpoints of different sizes are trivially NotReconfigurable; TAR
/// endpoints must both have size >= k. Non-independent input throws.
TokenSearchResult is_bfs(const Graph& g, const TokenSet& from,
                         const TokenSet& to, Model model, int k = 0,
                         std::optional<long long> max_len = std::nullopt);

/// Expands every jump into a removal followed by an addition. Output is a
/// TAR sequence with threshold |endpoint| and exactly twice the length.
TokenSequence tj_to_tar(const TokenSequence& tj);

/// Collapses a TAR path between two size-k sets into a TJ sequence by
/// repeated compression (dropping A_i..A_{i+2} repeats) and peak folding
/// (leftmost peak first), then keeping the even-position states. Shortest
/// TAR inputs of length r yield TJ outputs of length r/2.
TokenSequence tar_to_tj(const TokenSequence& tar);

/// Validity sweep: states independent, sizes legal for the model, each step
/// a single slide / jump / addition / removal.
bool validate_token_sequence(const Graph& g, const TokenSequence& seq,
                             std::string* why = nullptr);

/// Recomputes move annotations from the state list; throws
/// std::invalid_argument when a step is not a single-move transition under
/// the model.
std::vector<TokenMove> derive_token_moves(const std::vector<TokenSet>& states,
                                          Model model);

// --- file format ---

/// IS sequence file: header "is-sequence <model> <k?> <length>" (k present
/// only for tar), one token set per line; an empty set is a blank line.
std::string serialize_token_sequence(const TokenSequence& seq);
TokenSequence parse_token_sequence(std::istream& in);
TokenSequence load_token_sequence_file(const std::string& path);
void save_token_sequence_file(const TokenSequence& seq,
                              const std::string& path);

}  // namespace reconfig
