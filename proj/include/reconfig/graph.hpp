#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reconfig {

/// Finite simple graph over dense vertex ids 0..n-1. Undirected graphs store
/// each edge once logically; neighbor queries are symmetric. Adjacency lists
/// are kept sorted. Build with add_edge, then treat as immutable.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, bool directed = false);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }
  bool directed() const { return directed_; }

  /// Inserts an edge. Throws std::invalid_argument on self-loops, parallel
  /// edges, or ids out of range.
  void add_edge(int u, int v);

  bool has_edge(int u, int v) const;

  /// Out-neighbors if directed, all neighbors otherwise. Sorted ascending.
  std::span<const int> neighbors(int v) const;
  /// In-neighbors if directed, same as neighbors() otherwise.
  std::span<const int> in_neighbors(int v) const;

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  void set_label(int v, std::string label);
  const std::map<int, std::string>& labels() const { return labels_; }

  /// Canonical edge list: undirected pairs normalized to u < v, sorted
  /// lexicographically; directed pairs sorted as-is.
  std::vector<std::pair<int, int>> edges() const;

 private:
  void check_vertex(int v) const;

  bool directed_ = false;
  int edge_count_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> radj_;  // maintained only when directed
  std::map<int, std::string> labels_;
};

/// Error raised by the file-format parsers; the message names the line.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration or search exceeds its explicit resource cap.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses the text graph format:
///   graph undirected|directed
///   <n> <m>
///   m lines "<u> <v>"
///   optional lines "label <v> <text>"
/// '#' starts a comment line.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
Graph load_graph_file(const std::string& path);

/// Canonical serialization: edges sorted lexicographically, labels sorted by
/// vertex id. Stable input for golden-file comparisons.
std::string serialize_graph(const Graph& g);
void save_graph_file(const Graph& g, const std::string& path);

/// Vertex-set file: one line of space-separated ids (blank line = empty set).
std::vector<int> parse_vertex_set(std::istream& in, const Graph& g);
std::vector<int> load_vertex_set_file(const std::string& path, const Graph& g);
std::string serialize_vertex_set(const std::vector<int>& set);

/// Unweighted shortest-path distances from src; -1 marks unreachable
/// vertices. Directed graphs are traversed along edge direction.
std::vector<int> bfs_dist(const Graph& g, int src);
/// Distances to dst along reversed edges (distance from v to dst).
std::vector<int> bfs_dist_to(const Graph& g, int dst);

/// Shortest-path layering between s and t: D_i holds the vertices at
/// distance i from s and k-i from t, so exactly the vertices on some
/// shortest (s,t)-path. g1 is the subgraph on the same vertex ids keeping
/// only edges between consecutive layers.
struct LayerDecomposition {
  int s = 0;
  int t = 0;
  int k = 0;
  std::vector<std::vector<int>> layers;  // D_0..D_k, each sorted
  std::vector<int> layer_of;             // -1 when off every shortest path
  Graph g1;
};

/// Throws std::invalid_argument when t is unreachable from s.
LayerDecomposition layer_decompose(const Graph& g, int s, int t);

/// DOT export; each highlight set gets a distinct fill style.
std::string export_dot(const Graph& g,
                       const std::vector<std::vector<int>>& highlights = {});

}  // namespace reconfig
