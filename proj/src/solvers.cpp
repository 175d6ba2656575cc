#include "reconfig/solvers.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <set>

namespace reconfig {

namespace {

int side_index(const std::vector<int>& side, int v) {
  auto it = std::lower_bound(side.begin(), side.end(), v);
  return (it != side.end() && *it == v) ? static_cast<int>(it - side.begin())
                                        : -1;
}

std::vector<int> sorted_difference(const TokenSet& a, const TokenSet& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
};

}  // namespace

bool PiranGraph::acyclic() const {
  DisjointSets sets(static_cast<int>(a_side.size() + b_side.size()));
  const int offset = static_cast<int>(a_side.size());
  for (std::size_t ai = 0; ai < a_adj.size(); ++ai) {
    for (int bi : a_adj[ai]) {
      if (!sets.unite(static_cast<int>(ai), offset + bi)) return false;
    }
  }
  return true;
}

PiranGraph piran(const Graph& g, const TokenSet& a, const TokenSet& b) {
  if (!is_independent(g, a) || !is_independent(g, b))
    throw std::invalid_argument("piran: input sets must be independent");
  if (a.size() != b.size())
    throw std::invalid_argument("piran: sets differ in size (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  PiranGraph pg;
  pg.a_side = sorted_difference(a, b);
  pg.b_side = sorted_difference(b, a);
  pg.a_adj.resize(pg.a_side.size());
  pg.b_adj.resize(pg.b_side.size());
  for (std::size_t ai = 0; ai < pg.a_side.size(); ++ai) {
    for (int v : g.neighbors(pg.a_side[ai])) {
      int bi = side_index(pg.b_side, v);
      if (bi >= 0) {
        pg.a_adj[ai].push_back(bi);
        pg.b_adj[bi].push_back(static_cast<int>(ai));
        ++pg.edge_count;
      }
    }
  }
  return pg;
}

TokenSequence tj_solve_ehf(const Graph& g, const TokenSet& a,
                           const TokenSet& b) {
  PiranGraph pg = piran(g, a, b);
  if (!pg.acyclic())
    throw NotEvenHoleFreeError(
        "Piran graph contains a cycle; the instance is not even-hole-free");

  const int side = static_cast<int>(pg.a_side.size());
  std::vector<char> alive_a(side, 1), alive_b(side, 1);
  std::vector<int> deg_b(side);
  std::set<int> ready;     // b indices with at most one live a-neighbor
  std::set<int> live_a;    // a indices, for the arbitrary-token case
  for (int bi = 0; bi < side; ++bi) {
    deg_b[bi] = static_cast<int>(pg.b_adj[bi].size());
    if (deg_b[bi] <= 1) ready.insert(bi);
  }
  for (int ai = 0; ai < side; ++ai) live_a.insert(ai);

  TokenSequence seq;
  seq.model = Model::TJ;
  seq.states.push_back(a);
  TokenSet current = a;
  for (int done = 0; done < side; ++done) {
    if (ready.empty())
      throw std::logic_error(
          "tj_solve_ehf: no b-side vertex with degree <= 1 left");
    const int bi = *ready.begin();
    ready.erase(ready.begin());
    alive_b[bi] = 0;
    int wi = -1;
    for (int ai : pg.b_adj[bi]) {
      if (alive_a[ai]) {
        wi = ai;
        break;
      }
    }
    if (wi < 0) wi = *live_a.begin();  // no live neighbor: lowest-id token
    alive_a[wi] = 0;
    live_a.erase(wi);
    for (int nb : pg.a_adj[wi]) {
      if (alive_b[nb] && nb != bi) {
        if (--deg_b[nb] <= 1) ready.insert(nb);
      }
    }

    const int from = pg.a_side[wi];
    const int to = pg.b_side[bi];
    current.erase(std::find(current.begin(), current.end(), from));
    current.insert(std::upper_bound(current.begin(), current.end(), to), to);
    seq.states.push_back(current);
    seq.moves.push_back({from, to});
  }
  return seq;
}

namespace {

std::vector<std::vector<int>> components_within(const Graph& g,
                                                const std::vector<int>& verts) {
  std::vector<char> in_set(g.vertex_count(), 0), seen(g.vertex_count(), 0);
  for (int v : verts) in_set[v] = 1;
  std::vector<std::vector<int>> comps;
  for (int seed : verts) {
    if (seen[seed]) continue;
    std::vector<int> comp;
    std::queue<int> queue;
    seen[seed] = 1;
    queue.push(seed);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      comp.push_back(u);
      for (int v : g.neighbors(u)) {
        if (in_set[v] && !seen[v]) {
          seen[v] = 1;
          queue.push(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

std::vector<std::vector<int>> co_components(const Graph& g,
                                            const std::vector<int>& vertices) {
  std::set<int> unvisited(vertices.begin(), vertices.end());
  std::vector<std::vector<int>> comps;
  while (!unvisited.empty()) {
    int seed = *unvisited.begin();
    unvisited.erase(unvisited.begin());
    std::vector<int> comp{seed};
    std::queue<int> queue;
    queue.push(seed);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      // Complement-neighbors of u: unvisited vertices not adjacent to u.
      std::vector<int> grabbed;
      for (int w : unvisited) {
        if (!g.has_edge(u, w)) grabbed.push_back(w);
      }
      for (int w : grabbed) {
        unvisited.erase(w);
        comp.push_back(w);
        queue.push(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace {

bool cograph_rec(const Graph& g, const std::vector<int>& verts) {
  if (verts.size() <= 1) return true;
  auto comps = components_within(g, verts);
  if (comps.size() > 1) {
    for (const auto& comp : comps) {
      if (!cograph_rec(g, comp)) return false;
    }
    return true;
  }
  auto cocomps = co_components(g, verts);
  if (cocomps.size() > 1) {
    for (const auto& comp : cocomps) {
      if (!cograph_rec(g, comp)) return false;
    }
    return true;
  }
  return false;  // connected and co-connected: contains an induced P4
}

// Shortest single-token slide walk within an induced connected subgraph.
std::vector<TokenMove> token_walk(const Graph& g, const std::vector<int>& verts,
                                  int from, int to) {
  std::vector<char> in_set(g.vertex_count(), 0);
  for (int v : verts) in_set[v] = 1;
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> queue;
  dist[to] = 0;
  queue.push(to);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (int v : g.neighbors(u)) {
      if (in_set[v] && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push(v);
      }
    }
  }
  if (dist[from] < 0)
    throw std::logic_error("token_walk: endpoints not connected");
  std::vector<TokenMove> moves;
  int cur = from;
  while (cur != to) {
    int next = -1;
    for (int v : g.neighbors(cur)) {  // ascending: lowest-id tie-break
      if (in_set[v] && dist[v] == dist[cur] - 1) {
        next = v;
        break;
      }
    }
    moves.push_back({cur, next});
    cur = next;
  }
  return moves;
}

std::optional<std::vector<TokenMove>> ts_rec(const Graph& g,
                                             const std::vector<int>& verts,
                                             const TokenSet& a,
                                             const TokenSet& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (a == b) return std::vector<TokenMove>{};

  auto comps = components_within(g, verts);
  if (comps.size() > 1) {
    std::vector<TokenMove> merged;
    for (const auto& comp : comps) {
      TokenSet a_i, b_i;
      std::set_intersection(a.begin(), a.end(), comp.begin(), comp.end(),
                            std::back_inserter(a_i));
      std::set_intersection(b.begin(), b.end(), comp.begin(), comp.end(),
                            std::back_inserter(b_i));
      if (a_i.size() != b_i.size()) return std::nullopt;
      auto part = ts_rec(g, comp, a_i, b_i);
      if (!part) return std::nullopt;
      merged.insert(merged.end(), part->begin(), part->end());
    }
    return merged;
  }

  if (a.size() == 1) return token_walk(g, verts, a[0], b[0]);

  auto cocomps = co_components(g, verts);
  if (cocomps.size() == 1)
    throw std::logic_error("ts_rec: connected and co-connected subgraph");
  // Tokens of an independent set never span two co-components: vertices in
  // different co-components are adjacent.
  auto locate = [&](int v) -> int {
    for (std::size_t i = 0; i < cocomps.size(); ++i) {
      if (std::binary_search(cocomps[i].begin(), cocomps[i].end(), v))
        return static_cast<int>(i);
    }
    return -1;
  };
  int ca = locate(a[0]);
  int cb = locate(b[0]);
  if (ca != cb) return std::nullopt;
  return ts_rec(g, cocomps[ca], a, b);
}

}  // namespace

bool is_cograph(const Graph& g) {
  std::vector<int> all(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
  return cograph_rec(g, all);
}

TokenSearchResult ts_solve_p4free(const Graph& g, const TokenSet& a,
                                  const TokenSet& b) {
  if (!is_independent(g, a) || !is_independent(g, b))
    throw std::invalid_argument("ts_solve_p4free: sets must be independent");
  if (!is_cograph(g))
    throw NotCographError("graph contains an induced P4 (not a cograph)");

  std::vector<int> all(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
  auto moves = ts_rec(g, all, a, b);
  if (!moves) return {SearchStatus::NotReconfigurable, {}};

  TokenSequence seq;
  seq.model = Model::TS;
  seq.states.push_back(a);
  TokenSet current = a;
  for (const TokenMove& mv : *moves) {
    current.erase(std::find(current.begin(), current.end(), mv.removed));
    current.insert(std::upper_bound(current.begin(), current.end(), mv.added),
                   mv.added);
    seq.states.push_back(current);
  }
  seq.moves = std::move(*moves);
  return {SearchStatus::Found, std::move(seq)};
}

}  // namespace reconfig
