#include "reconfig/token.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "reconfig/hash.hpp"

namespace reconfig {

std::string model_name(Model m) {
  switch (m) {
    case Model::TS: return "ts";
    case Model::TJ: return "tj";
    case Model::TAR: return "tar";
  }
  return "?";
}

std::optional<Model> model_from_name(const std::string& name) {
  if (name == "ts") return Model::TS;
  if (name == "tj") return Model::TJ;
  if (name == "tar") return Model::TAR;
  return std::nullopt;
}

bool is_independent(const Graph& g, const TokenSet& a) {
  std::vector<char> in_set(g.vertex_count(), 0);
  for (int v : a) {
    if (v < 0 || v >= g.vertex_count()) return false;
    if (in_set[v]) return false;  // duplicate
    in_set[v] = 1;
  }
  for (int v : a) {
    for (int u : g.neighbors(v)) {
      if (in_set[u]) return false;
    }
  }
  return true;
}

namespace {

TokenSet canonical(TokenSet a) {
  std::sort(a.begin(), a.end());
  return a;
}

bool contains(const TokenSet& a, int v) {
  return std::binary_search(a.begin(), a.end(), v);
}

TokenSet with_swap(const TokenSet& a, int out, int in) {
  TokenSet b;
  b.reserve(a.size());
  for (int v : a) {
    if (v != out) b.push_back(v);
  }
  b.insert(std::upper_bound(b.begin(), b.end(), in), in);
  return b;
}

// Whether a \ {skip} U {v} stays independent: v must have no neighbor in
// a other than skip.
bool placeable(const Graph& g, const TokenSet& a, int v, int skip) {
  for (int u : g.neighbors(v)) {
    if (u != skip && contains(a, u)) return false;
  }
  return true;
}

}  // namespace

std::vector<TokenSet> is_neighbors(const Graph& g, const TokenSet& a,
                                   Model model, int k) {
  if (!is_independent(g, a))
    throw std::invalid_argument("is_neighbors: input set is not independent");
  std::vector<TokenSet> result;
  switch (model) {
    case Model::TS:
      for (int u : a) {
        for (int v : g.neighbors(u)) {
          if (contains(a, v)) continue;
          if (placeable(g, a, v, u)) result.push_back(with_swap(a, u, v));
        }
      }
      break;
    case Model::TJ:
      for (int u : a) {
        for (int v = 0; v < g.vertex_count(); ++v) {
          if (contains(a, v)) continue;
          if (placeable(g, a, v, u)) result.push_back(with_swap(a, u, v));
        }
      }
      break;
    case Model::TAR: {
      if (static_cast<int>(a.size()) < k - 1)
        throw std::invalid_argument("is_neighbors: TAR set below size floor");
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (contains(a, v)) continue;
        if (placeable(g, a, v, -1)) {
          TokenSet b = a;
          b.insert(std::upper_bound(b.begin(), b.end(), v), v);
          result.push_back(std::move(b));
        }
      }
      if (static_cast<int>(a.size()) - 1 >= k - 1) {
        for (int u : a) {
          TokenSet b;
          b.reserve(a.size() - 1);
          for (int v : a) {
            if (v != u) b.push_back(v);
          }
          result.push_back(std::move(b));
        }
      }
      break;
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<TokenMove> derive_token_moves(const std::vector<TokenSet>& states,
                                          Model model) {
  std::vector<TokenMove> moves;
  for (std::size_t i = 0; i + 1 < states.size(); ++i) {
    const TokenSet& a = states[i];
    const TokenSet& b = states[i + 1];
    std::vector<int> removed, added;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(removed));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                        std::back_inserter(added));
    if (model == Model::TAR) {
      if (removed.size() + added.size() != 1)
        throw std::invalid_argument(
            "step " + std::to_string(i) +
            " is not a single token addition or removal");
      moves.push_back({removed.empty() ? -1 : removed[0],
                       added.empty() ? -1 : added[0]});
    } else {
      if (removed.size() != 1 || added.size() != 1)
        throw std::invalid_argument("step " + std::to_string(i) +
                                    " is not a single token move");
      moves.push_back({removed[0], added[0]});
    }
  }
  return moves;
}

TokenSearchResult is_bfs(const Graph& g, const TokenSet& from,
                         const TokenSet& to, Model model, int k,
                         std::optional<long long> max_len) {
  TokenSet a = canonical(from);
  TokenSet b = canonical(to);
  if (!is_independent(g, a))
    throw std::invalid_argument("is_bfs: start set is not independent");
  if (!is_independent(g, b))
    throw std::invalid_argument("is_bfs: target set is not independent");
  if (model == Model::TAR) {
    if (static_cast<int>(a.size()) < k || static_cast<int>(b.size()) < k)
      throw std::invalid_argument("is_bfs: TAR endpoints must have size >= k");
  } else if (a.size() != b.size()) {
    return {SearchStatus::NotReconfigurable, {}};
  }

  std::unordered_map<TokenSet, int, VecIntHash> index_of;
  std::vector<TokenSet> states;
  std::vector<int> parent;
  std::vector<long long> depth;

  auto intern = [&](const TokenSet& state, int par, long long d) {
    auto [it, inserted] = index_of.emplace(state, states.size());
    if (inserted) {
      states.push_back(state);
      parent.push_back(par);
      depth.push_back(d);
    }
    return std::pair(it->second, inserted);
  };

  auto reconstruct = [&](int idx) {
    TokenSequence seq;
    seq.model = model;
    seq.tar_k = (model == Model::TAR) ? k : 0;
    std::vector<int> chain;
    for (int cur = idx; cur >= 0; cur = parent[cur]) chain.push_back(cur);
    std::reverse(chain.begin(), chain.end());
    for (int cur : chain) seq.states.push_back(states[cur]);
    seq.moves = derive_token_moves(seq.states, model);
    return TokenSearchResult{SearchStatus::Found, std::move(seq)};
  };

  auto [start, ignored] = intern(a, -1, 0);
  if (a == b) return reconstruct(start);

  std::queue<int> frontier;
  frontier.push(start);
  bool truncated = false;
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop();
    const long long d = depth[cur];
    const bool at_cap = max_len && d >= *max_len;
    for (const TokenSet& next : is_neighbors(g, states[cur], model, k)) {
      if (at_cap) {
        if (!index_of.count(next)) truncated = true;
        continue;
      }
      auto [idx, inserted] = intern(next, cur, d + 1);
      if (!inserted) continue;
      if (states[idx] == b) return reconstruct(idx);
      frontier.push(idx);
    }
  }
  return {truncated ? SearchStatus::BudgetExceeded
                    : SearchStatus::NotReconfigurable,
          {}};
}

TokenSequence tj_to_tar(const TokenSequence& tj) {
  if (tj.model != Model::TJ)
    throw std::invalid_argument("tj_to_tar: input is not a TJ sequence");
  if (tj.states.empty())
    throw std::invalid_argument("tj_to_tar: sequence has no states");
  const std::size_t size = tj.states.front().size();
  for (const TokenSet& state : tj.states) {
    if (state.size() != size)
      throw std::invalid_argument("tj_to_tar: states differ in size");
  }
  std::vector<TokenMove> jumps = derive_token_moves(tj.states, Model::TJ);

  TokenSequence tar;
  tar.model = Model::TAR;
  tar.tar_k = static_cast<int>(size);
  tar.states.push_back(tj.states.front());
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    TokenSet mid;
    const TokenSet& prev = tj.states[i];
    for (int v : prev) {
      if (v != jumps[i].removed) mid.push_back(v);
    }
    tar.states.push_back(std::move(mid));
    tar.states.push_back(tj.states[i + 1]);
  }
  tar.moves = derive_token_moves(tar.states, Model::TAR);
  return tar;
}

namespace {

// Drops A_{i+1}, A_{i+2} whenever A_i == A_{i+2}, leftmost first.
void compress(std::vector<TokenSet>& states) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 2 < states.size(); ++i) {
      if (states[i] == states[i + 2]) {
        states.erase(states.begin() + i + 1, states.begin() + i + 3);
        changed = true;
        break;
      }
    }
  }
}

}  // namespace

TokenSequence tar_to_tj(const TokenSequence& tar) {
  if (tar.model != Model::TAR)
    throw std::invalid_argument("tar_to_tj: input is not a TAR path");
  if (tar.states.empty())
    throw std::invalid_argument("tar_to_tj: path has no states");
  const int k = tar.tar_k;
  if (static_cast<int>(tar.states.front().size()) != k ||
      static_cast<int>(tar.states.back().size()) != k)
    throw std::invalid_argument("tar_to_tj: endpoint sizes differ from k");
  for (const TokenSet& state : tar.states) {
    if (static_cast<int>(state.size()) < k - 1)
      throw std::invalid_argument("tar_to_tj: state below the size floor");
  }
  derive_token_moves(tar.states, Model::TAR);  // shape check

  std::vector<TokenSet> states = tar.states;
  compress(states);
  while (true) {
    // Leftmost peak: |A_p| = |A_{p-1}|+1 = |A_{p+1}|+1 >= k+1.
    std::size_t peak = 0;
    for (std::size_t p = 1; p + 1 < states.size(); ++p) {
      if (states[p].size() == states[p - 1].size() + 1 &&
          states[p].size() == states[p + 1].size() + 1 &&
          static_cast<int>(states[p].size()) >= k + 1) {
        peak = p;
        break;
      }
    }
    if (peak == 0) break;
    std::vector<int> add_diff, rem_diff;
    std::set_difference(states[peak].begin(), states[peak].end(),
                        states[peak - 1].begin(), states[peak - 1].end(),
                        std::back_inserter(add_diff));
    std::set_difference(states[peak].begin(), states[peak].end(),
                        states[peak + 1].begin(), states[peak + 1].end(),
                        std::back_inserter(rem_diff));
    if (add_diff.size() != 1 || rem_diff.size() != 1 ||
        add_diff[0] == rem_diff[0])
      throw std::logic_error("tar_to_tj: malformed peak");
    TokenSet folded;
    for (int v : states[peak]) {
      if (v != add_diff[0] && v != rem_diff[0]) folded.push_back(v);
    }
    states[peak] = std::move(folded);
    compress(states);
  }

  // A compressed, peak-free path alternates sizes k, k-1, k, ..., k.
  if (states.size() % 2 == 0)
    throw std::logic_error("tar_to_tj: folded path has even state count");
  for (std::size_t i = 0; i < states.size(); ++i) {
    const int expect = (i % 2 == 0) ? k : k - 1;
    if (static_cast<int>(states[i].size()) != expect)
      throw std::logic_error("tar_to_tj: folded path is not alternating");
  }

  TokenSequence tj;
  tj.model = Model::TJ;
  for (std::size_t i = 0; i < states.size(); i += 2)
    tj.states.push_back(states[i]);
  tj.moves = derive_token_moves(tj.states, Model::TJ);
  return tj;
}

bool validate_token_sequence(const Graph& g, const TokenSequence& seq,
                             std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (seq.states.empty()) return fail("sequence has no states");
  for (std::size_t i = 0; i < seq.states.size(); ++i) {
    const TokenSet& state = seq.states[i];
    if (!std::is_sorted(state.begin(), state.end()))
      return fail("state " + std::to_string(i) + " is not sorted");
    if (!is_independent(g, state))
      return fail("state " + std::to_string(i) + " is not independent");
    if (seq.model == Model::TAR &&
        static_cast<int>(state.size()) < seq.tar_k - 1)
      return fail("state " + std::to_string(i) + " below TAR size floor");
  }
  std::vector<TokenMove> moves;
  try {
    moves = derive_token_moves(seq.states, seq.model);
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  if (seq.model == Model::TS) {
    for (std::size_t i = 0; i < moves.size(); ++i) {
      if (!g.has_edge(moves[i].removed, moves[i].added))
        return fail("step " + std::to_string(i) +
                    " slides along a non-edge");
    }
  }
  if (!seq.moves.empty() && seq.moves.size() != moves.size())
    return fail("move list length mismatch");
  return true;
}

std::string serialize_token_sequence(const TokenSequence& seq) {
  std::ostringstream out;
  out << "is-sequence " << model_name(seq.model);
  if (seq.model == Model::TAR) out << " " << seq.tar_k;
  out << " " << seq.length() << "\n";
  for (const TokenSet& state : seq.states) {
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

}  // namespace

TokenSequence parse_token_sequence(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no))
    throw ParseError("empty is-sequence file");
  std::istringstream header(line);
  std::string kw, name;
  if (!(header >> kw >> name) || kw != "is-sequence")
    throw ParseError("line " + std::to_string(line_no) +
                     ": expected 'is-sequence <model> <k?> <length>'");
  auto model = model_from_name(name);
  if (!model)
    throw ParseError("line " + std::to_string(line_no) + ": unknown model '" +
                     name + "'");
  TokenSequence seq;
  seq.model = *model;
  long long length = -1;
  if (seq.model == Model::TAR) {
    long long k = -1;
    if (!(header >> k >> length) || k < 0 || length < 0)
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'is-sequence tar <k> <length>'");
    seq.tar_k = static_cast<int>(k);
  } else {
    if (!(header >> length) || length < 0)
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'is-sequence " + name + " <length>'");
  }
  // States may legitimately be empty sets, so read raw lines from here on.
  for (long long i = 0; i <= length; ++i) {
    if (!std::getline(in, line))
      throw ParseError("is-sequence: expected " + std::to_string(length + 1) +
                       " states, got " + std::to_string(i));
    ++line_no;
    std::istringstream ids(line);
    TokenSet state;
    long long v;
    while (ids >> v) state.push_back(static_cast<int>(v));
    if (!ids.eof())
      throw ParseError("line " + std::to_string(line_no) +
                       ": malformed token set: '" + line + "'");
    std::sort(state.begin(), state.end());
    seq.states.push_back(std::move(state));
  }
  seq.moves = derive_token_moves(seq.states, seq.model);
  return seq;
}

TokenSequence load_token_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open sequence file: " + path);
  return parse_token_sequence(in);
}

void save_token_sequence_file(const TokenSequence& seq,
                              const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write sequence file: " + path);
  out << serialize_token_sequence(seq);
}

}  // namespace reconfig
