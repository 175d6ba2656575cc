#include "reconfig/sp.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "reconfig/hash.hpp"

namespace reconfig {

namespace {

bool fail(std::string* why, const std::string& reason) {
  if (why) *why = reason;
  return false;
}

bool check_path_shape(const Graph& g, int s, int t, int k, const SpState& p,
                      std::string* why) {
  if (p.empty()) return fail(why, "empty path");
  for (int v : p) {
    if (v < 0 || v >= g.vertex_count())
      return fail(why, "vertex id " + std::to_string(v) + " out of range");
  }
  if (p.front() != s)
    return fail(why, "path does not start at " + std::to_string(s));
  if (p.back() != t)
    return fail(why, "path does not end at " + std::to_string(t));
  if (static_cast<int>(p.size()) != k + 1)
    return fail(why, "path has " + std::to_string(p.size() - 1) +
                         " edges, shortest distance is " + std::to_string(k));
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!g.has_edge(p[i], p[i + 1]))
      return fail(why, "missing edge " + std::to_string(p[i]) + "-" +
                           std::to_string(p[i + 1]));
  }
  return true;
}

}  // namespace

bool sp_is_valid(const Graph& g, int s, int t, const SpState& p,
                 std::string* why) {
  if (s < 0 || s >= g.vertex_count() || t < 0 || t >= g.vertex_count())
    return fail(why, "endpoint out of range");
  const std::vector<int> dist = bfs_dist(g, s);
  if (dist[t] < 0) return fail(why, "t unreachable from s");
  return check_path_shape(g, s, t, dist[t], p, why);
}

bool sp_is_valid(const Graph& g, const LayerDecomposition& layers,
                 const SpState& p, std::string* why) {
  if (!check_path_shape(g, layers.s, layers.t, layers.k, p, why)) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (layers.layer_of[p[i]] != static_cast<int>(i))
      return fail(why, "vertex " + std::to_string(p[i]) +
                           " is not in layer " + std::to_string(i));
  }
  return true;
}

std::vector<SpState> sp_neighbors(const Graph& g,
                                  const LayerDecomposition& layers,
                                  const SpState& p) {
  std::vector<SpState> result;
  const int k = layers.k;
  for (int i = 1; i < k; ++i) {
    for (int cand : layers.layers[i]) {
      if (cand == p[i]) continue;
      if (!g.has_edge(p[i - 1], cand)) continue;
      if (!g.has_edge(cand, p[i + 1])) continue;
      SpState q = p;
      q[i] = cand;
      result.push_back(std::move(q));
    }
  }
  return result;
}

SpSearchResult sp_bfs(const Graph& g, int s, int t, const SpState& p_from,
                      const SpState& p_to, std::optional<long long> max_len) {
  const LayerDecomposition layers = layer_decompose(g, s, t);
  std::string why;
  if (!sp_is_valid(g, layers, p_from, &why))
    throw std::invalid_argument("sp_bfs: invalid start state: " + why);
  if (!sp_is_valid(g, layers, p_to, &why))
    throw std::invalid_argument("sp_bfs: invalid target state: " + why);

  std::unordered_map<SpState, int, VecIntHash> index_of;
  std::vector<SpState> states;
  std::vector<int> parent;
  std::vector<long long> depth;

  auto intern = [&](const SpState& state, int par, long long d) {
    auto [it, inserted] = index_of.emplace(state, states.size());
    if (inserted) {
      states.push_back(state);
      parent.push_back(par);
      depth.push_back(d);
    }
    return std::pair(it->second, inserted);
  };

  auto reconstruct = [&](int idx) {
    SpSequence seq;
    std::vector<int> chain;
    for (int cur = idx; cur >= 0; cur = parent[cur]) chain.push_back(cur);
    std::reverse(chain.begin(), chain.end());
    for (int cur : chain) seq.states.push_back(states[cur]);
    seq.moves = derive_sp_moves(seq.states);
    return SpSearchResult{SearchStatus::Found, std::move(seq)};
  };

  auto [start, ignored] = intern(p_from, -1, 0);
  if (p_from == p_to) return reconstruct(start);

  std::queue<int> frontier;
  frontier.push(start);
  bool truncated = false;
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop();
    const long long d = depth[cur];
    const bool at_cap = max_len && d >= *max_len;
    for (const SpState& next : sp_neighbors(g, layers, states[cur])) {
      if (at_cap) {
        // Only probe: an unvisited neighbor past the cap means the search
        // was pruned rather than exhausted.
        if (!index_of.count(next)) truncated = true;
        continue;
      }
      auto [idx, inserted] = intern(next, cur, d + 1);
      if (!inserted) continue;
      if (states[idx] == p_to) return reconstruct(idx);
      frontier.push(idx);
    }
  }
  return SpSearchResult{truncated ? SearchStatus::BudgetExceeded
                                  : SearchStatus::NotReconfigurable,
                        {}};
}

std::vector<SpState> sp_enumerate(const Graph& g, int s, int t,
                                  std::size_t cap) {
  const LayerDecomposition layers = layer_decompose(g, s, t);
  std::vector<SpState> result;
  SpState current{s};
  // Iterative DFS; adjacency lists are sorted, so output is lexicographic.
  struct Frame {
    std::vector<int> candidates;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  auto candidates_from = [&](int u, int layer) {
    Frame f;
    for (int v : g.neighbors(u)) {
      if (layers.layer_of[v] == layer + 1) f.candidates.push_back(v);
    }
    return f;
  };
  stack.push_back(candidates_from(s, 0));
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == top.candidates.size()) {
      stack.pop_back();
      current.pop_back();
      continue;
    }
    int v = top.candidates[top.next++];
    current.push_back(v);
    if (static_cast<int>(current.size()) == layers.k + 1) {
      if (result.size() >= cap)
        throw ResourceLimitError("sp_enumerate: more than " +
                                 std::to_string(cap) + " shortest paths");
      result.push_back(current);
      current.pop_back();
    } else {
      stack.push_back(candidates_from(v, static_cast<int>(current.size()) - 1));
    }
  }
  return result;
}

std::vector<SpMove> derive_sp_moves(const std::vector<SpState>& states) {
  std::vector<SpMove> moves;
  for (std::size_t i = 0; i + 1 < states.size(); ++i) {
    const SpState& a = states[i];
    const SpState& b = states[i + 1];
    if (a.size() != b.size())
      throw std::invalid_argument("states differ in length at step " +
                                  std::to_string(i));
    int pos = -1;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] != b[j]) {
        if (pos >= 0)
          throw std::invalid_argument("states differ in more than one "
                                      "position at step " +
                                      std::to_string(i));
        pos = static_cast<int>(j);
      }
    }
    if (pos < 0)
      throw std::invalid_argument("consecutive states equal at step " +
                                  std::to_string(i));
    moves.push_back({pos, a[pos], b[pos]});
  }
  return moves;
}

bool validate_sp_sequence(const Graph& g, const SpSequence& seq,
                          std::string* why) {
  if (seq.states.empty()) return fail(why, "sequence has no states");
  const SpState& first = seq.states.front();
  if (first.empty()) return fail(why, "empty state");
  int s = first.front(), t = first.back();
  LayerDecomposition layers;
  try {
    layers = layer_decompose(g, s, t);
  } catch (const std::exception& e) {
    return fail(why, e.what());
  }
  for (std::size_t i = 0; i < seq.states.size(); ++i) {
    std::string inner;
    if (!sp_is_valid(g, layers, seq.states[i], &inner))
      return fail(why, "state " + std::to_string(i) + ": " + inner);
  }
  try {
    std::vector<SpMove> moves = derive_sp_moves(seq.states);
    if (!seq.moves.empty() && seq.moves.size() != moves.size())
      return fail(why, "move list length mismatch");
  } catch (const std::exception& e) {
    return fail(why, e.what());
  }
  return true;
}

std::string serialize_sp_sequence(const SpSequence& seq) {
  std::ostringstream out;
  out << "sp-sequence " << seq.length() << "\n";
  for (const SpState& state : seq.states) {
    for (std::size_t i = 0; i < state.size(); ++i) {
      if (i) out << " ";
      out << state[i];
    }
    out << "\n";
  }
  return out.str();
}

namespace {

bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    return true;
  }
  return false;
}

std::vector<int> parse_id_line(const std::string& line, int line_no) {
  std::istringstream ids(line);
  std::vector<int> out;
  long long v;
  while (ids >> v) out.push_back(static_cast<int>(v));
  if (!ids.eof())
    throw ParseError("line " + std::to_string(line_no) +
                     ": malformed id list: '" + line + "'");
  return out;
}

}  // namespace

SpSequence parse_sp_sequence(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no))
    throw ParseError("empty sp-sequence file");
  std::istringstream header(line);
  std::string kw;
  long long length = -1;
  if (!(header >> kw >> length) || kw != "sp-sequence" || length < 0)
    throw ParseError("line " + std::to_string(line_no) +
                     ": expected 'sp-sequence <length>'");
  SpSequence seq;
  for (long long i = 0; i <= length; ++i) {
    if (!next_content_line(in, line, line_no))
      throw ParseError("sp-sequence: expected " + std::to_string(length + 1) +
                       " states, got " + std::to_string(i));
    seq.states.push_back(parse_id_line(line, line_no));
  }
  seq.moves = derive_sp_moves(seq.states);
  return seq;
}

SpSequence load_sp_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open sequence file: " + path);
  return parse_sp_sequence(in);
}

void save_sp_sequence_file(const SpSequence& seq, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write sequence file: " + path);
  out << serialize_sp_sequence(seq);
}

std::string serialize_sp_paths(const std::vector<SpState>& paths) {
  std::ostringstream out;
  out << "sp-paths " << paths.size() << "\n";
  for (const SpState& p : paths) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out << " ";
      out << p[i];
    }
    out << "\n";
  }
  return out.str();
}

std::vector<SpState> parse_sp_paths(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no))
    throw ParseError("empty sp-paths file");
  std::istringstream header(line);
  std::string kw;
  long long count = -1;
  if (!(header >> kw >> count) || kw != "sp-paths" || count < 0)
    throw ParseError("line " + std::to_string(line_no) +
                     ": expected 'sp-paths <count>'");
  std::vector<SpState> paths;
  for (long long i = 0; i < count; ++i) {
    if (!next_content_line(in, line, line_no))
      throw ParseError("sp-paths: expected " + std::to_string(count) +
                       " paths, got " + std::to_string(i));
    paths.push_back(parse_id_line(line, line_no));
  }
  return paths;
}

std::vector<SpState> load_sp_paths_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open paths file: " + path);
  return parse_sp_paths(in);
}

}  // namespace reconfig
