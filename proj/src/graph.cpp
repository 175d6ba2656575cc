#include "reconfig/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>

namespace reconfig {

Graph::Graph(int n, bool directed) : directed_(directed) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  adj_.resize(n);
  if (directed_) radj_.resize(n);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count())
    throw std::invalid_argument("vertex id " + std::to_string(v) +
                                " out of range [0," +
                                std::to_string(vertex_count()) + ")");
}

static void sorted_insert(std::vector<int>& list, int v) {
  list.insert(std::upper_bound(list.begin(), list.end(), v), v);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v)
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v))
    throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" +
                                std::to_string(v));
  sorted_insert(adj_[u], v);
  if (directed_) {
    sorted_insert(radj_[v], u);
  } else {
    sorted_insert(adj_[v], u);
  }
  ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::span<const int> Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::span<const int> Graph::in_neighbors(int v) const {
  check_vertex(v);
  return directed_ ? std::span<const int>(radj_[v])
                   : std::span<const int>(adj_[v]);
}

void Graph::set_label(int v, std::string label) {
  check_vertex(v);
  labels_[v] = std::move(label);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> result;
  result.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : adj_[u]) {
      if (directed_ || u < v) result.emplace_back(u, v);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

namespace {

// Reads the next content line, skipping blanks and '#' comments.
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

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;

  if (!next_content_line(in, line, line_no))
    throw ParseError("empty input: missing graph header");
  std::istringstream header(line);
  std::string kw, kind;
  header >> kw >> kind;
  if (kw != "graph" || (kind != "undirected" && kind != "directed"))
    parse_fail(line_no, "expected 'graph undirected' or 'graph directed'");
  bool directed = (kind == "directed");

  if (!next_content_line(in, line, line_no))
    parse_fail(line_no, "missing '<n> <m>' line");
  long long n = -1, m = -1;
  {
    std::istringstream counts(line);
    std::string extra;
    if (!(counts >> n >> m) || (counts >> extra) || n < 0 || m < 0)
      parse_fail(line_no, "malformed '<n> <m>' line: '" + line + "'");
  }

  Graph g(static_cast<int>(n), directed);
  for (long long e = 0; e < m; ++e) {
    if (!next_content_line(in, line, line_no))
      parse_fail(line_no, "expected " + std::to_string(m) + " edges, got " +
                              std::to_string(e));
    std::istringstream edge(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(edge >> u >> v) || (edge >> extra))
      parse_fail(line_no, "malformed edge line: '" + line + "'");
    if (u < 0 || u >= n || v < 0 || v >= n)
      parse_fail(line_no, "vertex id out of range on edge line: '" + line + "'");
    if (u == v) parse_fail(line_no, "self-loop at vertex " + std::to_string(u));
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
      parse_fail(line_no, "duplicate edge " + std::to_string(u) + "-" +
                              std::to_string(v));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }

  while (next_content_line(in, line, line_no)) {
    std::istringstream lab(line);
    std::string kw2;
    long long v = -1;
    if (!(lab >> kw2 >> v) || kw2 != "label")
      parse_fail(line_no, "unexpected line after edges: '" + line + "'");
    if (v < 0 || v >= n)
      parse_fail(line_no, "label vertex id out of range: '" + line + "'");
    std::string text;
    std::getline(lab, text);
    std::size_t start = text.find_first_not_of(" \t");
    text = (start == std::string::npos) ? std::string() : text.substr(start);
    while (!text.empty() && (text.back() == '\r' || text.back() == ' '))
      text.pop_back();
    if (text.empty()) parse_fail(line_no, "empty label text");
    g.set_label(static_cast<int>(v), text);
  }
  return g;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file: " + path);
  return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph " << (g.directed() ? "directed" : "undirected") << "\n";
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  for (const auto& [v, text] : g.labels()) out << "label " << v << " " << text << "\n";
  return out.str();
}

void save_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  out << serialize_graph(g);
}

std::vector<int> parse_vertex_set(std::istream& in, const Graph& g) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no)) line.clear();  // empty set
  std::istringstream ids(line);
  std::vector<int> set;
  long long v;
  while (ids >> v) {
    if (v < 0 || v >= g.vertex_count())
      throw ParseError("vertex id " + std::to_string(v) +
                       " out of range in vertex-set file");
    set.push_back(static_cast<int>(v));
  }
  std::sort(set.begin(), set.end());
  if (std::adjacent_find(set.begin(), set.end()) != set.end())
    throw ParseError("duplicate vertex id in vertex-set file");
  return set;
}

std::vector<int> load_vertex_set_file(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open vertex-set file: " + path);
  return parse_vertex_set(in, g);
}

std::string serialize_vertex_set(const std::vector<int>& set) {
  std::ostringstream out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out << " ";
    out << set[i];
  }
  out << "\n";
  return out.str();
}

namespace {

std::vector<int> bfs_from(const Graph& g, int src, bool reverse) {
  std::vector<int> dist(g.vertex_count(), -1);
  dist[src] = 0;
  std::queue<int> queue;
  queue.push(src);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    auto next = reverse ? g.in_neighbors(u) : g.neighbors(u);
    for (int v : next) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push(v);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<int> bfs_dist(const Graph& g, int src) {
  if (src < 0 || src >= g.vertex_count())
    throw std::invalid_argument("bfs_dist: source out of range");
  return bfs_from(g, src, false);
}

std::vector<int> bfs_dist_to(const Graph& g, int dst) {
  if (dst < 0 || dst >= g.vertex_count())
    throw std::invalid_argument("bfs_dist_to: target out of range");
  return bfs_from(g, dst, true);
}

LayerDecomposition layer_decompose(const Graph& g, int s, int t) {
  const std::vector<int> from_s = bfs_dist(g, s);
  if (from_s[t] < 0)
    throw std::invalid_argument("no path from " + std::to_string(s) + " to " +
                                std::to_string(t));
  const std::vector<int> to_t = bfs_dist_to(g, t);

  LayerDecomposition out;
  out.s = s;
  out.t = t;
  out.k = from_s[t];
  out.layers.assign(out.k + 1, {});
  out.layer_of.assign(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    int i = from_s[v];
    if (i < 0 || i > out.k) continue;
    if (to_t[v] == out.k - i) {
      out.layer_of[v] = i;
      out.layers[i].push_back(v);  // ascending: v loop is ascending
    }
  }

  out.g1 = Graph(g.vertex_count(), g.directed());
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (out.layer_of[u] < 0) continue;
    for (int v : g.neighbors(u)) {
      if (out.layer_of[v] == out.layer_of[u] + 1) out.g1.add_edge(u, v);
    }
  }
  return out;
}

std::string export_dot(const Graph& g,
                       const std::vector<std::vector<int>>& highlights) {
  static const char* kPalette[] = {"lightblue",  "lightgreen", "lightsalmon",
                                   "lightyellow", "plum",       "lightcyan"};
  constexpr int kPaletteSize = 6;

  std::vector<int> highlight_of(g.vertex_count(), -1);
  for (std::size_t h = 0; h < highlights.size(); ++h) {
    for (int v : highlights[h]) {
      if (v >= 0 && v < g.vertex_count() && highlight_of[v] < 0)
        highlight_of[v] = static_cast<int>(h);
    }
  }

  auto quoted = [](const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    out += '"';
    return out;
  };

  std::ostringstream out;
  out << (g.directed() ? "digraph" : "graph") << " g {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    std::vector<std::string> attrs;
    auto it = g.labels().find(v);
    if (it != g.labels().end()) attrs.push_back("label=" + quoted(it->second));
    if (highlight_of[v] >= 0) {
      attrs.push_back("style=filled");
      attrs.push_back(std::string("fillcolor=") +
                      kPalette[highlight_of[v] % kPaletteSize]);
    }
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) {
        if (i) out << ", ";
        out << attrs[i];
      }
      out << "]";
    }
    out << ";\n";
  }
  const char* arrow = g.directed() ? " -> " : " -- ";
  for (const auto& [u, v] : g.edges()) out << "  " << u << arrow << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace reconfig
