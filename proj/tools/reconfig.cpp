// Command-line surface for the reconfiguration toolkit: gadget generators,
// exact solvers, model converters, the shortest-path-to-independent-set
// reduction, DOT export, sequence validation, and explicit state-graph
// dumps for tiny instances.
//
// Exit codes: 0 solved/yes/valid, 1 not reconfigurable/no/invalid,
// 2 usage or format error, 3 search budget exceeded (with --strict-budget).

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "reconfig/gadget_exp.hpp"
#include "reconfig/gadget_sat.hpp"
#include "reconfig/graph.hpp"
#include "reconfig/reduction.hpp"
#include "reconfig/solvers.hpp"
#include "reconfig/sp.hpp"
#include "reconfig/token.hpp"

using json = nlohmann::ordered_json;
using namespace reconfig;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

void emit(const std::optional<std::string>& path, const std::string& text) {
  if (path) {
    write_text_file(*path, text);
  } else {
    std::cout << text;
  }
}

std::string stem_of(const std::string& path) {
  std::size_t slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = name.find_last_of('.');
  return dot == std::string::npos ? name : name.substr(0, dot);
}

json path_to_json(const SpState& p) { return json(p); }

// ---------- gen exp ----------

struct GenExpArgs {
  int k = 1;
  std::string graph_out, paths_out, meta_out;
};

int run_gen_exp(const GenExpArgs& args) {
  ExpInstance inst = gen_exp(args.k);
  std::string prefix = "exp_k" + std::to_string(args.k);
  std::string graph_path =
      args.graph_out.empty() ? prefix + ".graph" : args.graph_out;
  std::string paths_path =
      args.paths_out.empty() ? prefix + ".paths" : args.paths_out;
  std::string meta_path =
      args.meta_out.empty() ? prefix + ".json" : args.meta_out;

  save_graph_file(inst.g, graph_path);
  write_text_file(paths_path, serialize_sp_paths({inst.p_b, inst.p_e}));

  json meta;
  meta["kind"] = "exp";
  meta["k"] = inst.k;
  meta["vertices"] = inst.g.vertex_count();
  meta["edges"] = inst.g.edge_count();
  meta["s"] = inst.s;
  meta["t"] = inst.t;
  meta["p_b"] = path_to_json(inst.p_b);
  meta["p_e"] = path_to_json(inst.p_e);
  meta["witness_length"] = 11 * ((1LL << inst.k) - 1);
  write_text_file(meta_path, meta.dump(2) + "\n");

  std::cout << "exp k=" << inst.k << " vertices=" << inst.g.vertex_count()
            << " edges=" << inst.g.edge_count() << "\n";
  return kExitYes;
}

// ---------- gen sat ----------

struct GenSatArgs {
  std::string cnf;
  std::string graph_out, meta_out;
};

int run_gen_sat(const GenSatArgs& args) {
  CnfFormula formula = load_dimacs_file(args.cnf);
  SatInstance inst = gen_sat(formula);
  std::string prefix = stem_of(args.cnf) + "_sat";
  std::string graph_path =
      args.graph_out.empty() ? prefix + ".graph" : args.graph_out;
  std::string meta_path =
      args.meta_out.empty() ? prefix + ".json" : args.meta_out;

  save_graph_file(inst.g, graph_path);

  json meta;
  meta["kind"] = "sat";
  meta["n"] = inst.n;
  meta["m"] = inst.m;
  meta["vertices"] = inst.g.vertex_count();
  meta["edges"] = inst.g.edge_count();
  meta["s"] = inst.s;
  meta["t"] = inst.t;
  meta["budget"] = inst.budget;
  meta["p_b"] = path_to_json(inst.p_b);
  meta["p_e"] = path_to_json(inst.p_e);
  json attrs = json::array();
  for (int v = 0; v < inst.g.vertex_count(); ++v) {
    const SatVertexAttrs& a = inst.attrs[v];
    attrs.push_back({{"id", v},
                     {"level", a.level},
                     {"vstate", a.vstate},
                     {"cstate", a.cstate},
                     {"depth", a.depth}});
  }
  meta["attrs"] = std::move(attrs);
  write_text_file(meta_path, meta.dump(2) + "\n");

  std::cout << "sat n=" << inst.n << " m=" << inst.m
            << " vertices=" << inst.g.vertex_count()
            << " budget=" << inst.budget << "\n";
  return kExitYes;
}

// ---------- solve sp ----------

struct SolveSpArgs {
  std::string graph, paths, meta;
  long long max_len = -2;  // -2 = unset, -1 = explicit unbounded
  bool strict_budget = false;
  std::string out;
};

int run_solve_sp(const SolveSpArgs& args) {
  Graph g = load_graph_file(args.graph);
  SpState from, to;
  std::optional<long long> budget;
  if (!args.meta.empty()) {
    std::ifstream in(args.meta);
    if (!in) throw std::runtime_error("cannot open meta file: " + args.meta);
    json meta = json::parse(in);
    from = meta.at("p_b").get<SpState>();
    to = meta.at("p_e").get<SpState>();
    if (meta.contains("budget")) budget = meta["budget"].get<long long>();
  } else if (!args.paths.empty()) {
    auto paths = load_sp_paths_file(args.paths);
    if (paths.size() < 2)
      throw std::invalid_argument("paths file must contain two paths");
    from = paths[0];
    to = paths[1];
  } else {
    throw std::invalid_argument("solve sp needs --paths or --meta");
  }
  if (from.empty() || to.empty() || from.front() != to.front() ||
      from.back() != to.back())
    throw std::invalid_argument("endpoint paths disagree on s/t");

  std::optional<long long> max_len;
  if (args.max_len >= 0) {
    max_len = args.max_len;
  } else if (args.max_len == -2 && budget) {
    max_len = *budget;  // SAT instances default to their own budget
  }

  auto res = sp_bfs(g, from.front(), from.back(), from, to, max_len);
  switch (res.status) {
    case SearchStatus::Found:
      std::cout << "distance " << res.seq.length() << "\n";
      if (!args.out.empty()) save_sp_sequence_file(res.seq, args.out);
      return kExitYes;
    case SearchStatus::NotReconfigurable:
      std::cout << "not reconfigurable\n";
      return kExitNo;
    case SearchStatus::BudgetExceeded:
      std::cout << "budget exceeded\n";
      return args.strict_budget ? kExitBudget : kExitNo;
  }
  return kExitUsage;
}

// ---------- solve is ----------

struct SolveIsArgs {
  std::string graph, from, to;
  std::string model = "ts";
  std::string algo = "auto";
  int k = -1;
  long long max_len = -1;
  bool strict_budget = false;
  std::string out;
};

int run_solve_is(const SolveIsArgs& args) {
  Graph g = load_graph_file(args.graph);
  TokenSet from = load_vertex_set_file(args.from, g);
  TokenSet to = load_vertex_set_file(args.to, g);
  auto model = model_from_name(args.model);
  if (!model) throw std::invalid_argument("unknown model: " + args.model);
  if (*model == Model::TAR && args.k < 0)
    throw std::invalid_argument("model tar requires --k");
  if (!is_independent(g, from) || !is_independent(g, to))
    throw std::invalid_argument("input sets must be independent");

  std::string algo = args.algo;
  if (algo == "auto") {
    if (*model == Model::TJ && from.size() == to.size() &&
        piran(g, from, to).acyclic()) {
      algo = "ehf";
    } else if (*model == Model::TS && is_cograph(g)) {
      algo = "cograph";
    } else {
      algo = "bfs";
    }
  }
  std::cout << "algo " << algo << "\n";

  TokenSearchResult res;
  if (algo == "ehf") {
    if (*model != Model::TJ)
      throw std::invalid_argument("--algo ehf applies to the tj model only");
    res = {SearchStatus::Found, tj_solve_ehf(g, from, to)};
  } else if (algo == "cograph") {
    if (*model != Model::TS)
      throw std::invalid_argument(
          "--algo cograph applies to the ts model only");
    res = ts_solve_p4free(g, from, to);
  } else if (algo == "bfs") {
    std::optional<long long> max_len;
    if (args.max_len >= 0) max_len = args.max_len;
    res = is_bfs(g, from, to, *model, args.k < 0 ? 0 : args.k, max_len);
  } else {
    throw std::invalid_argument("unknown --algo: " + args.algo);
  }

  switch (res.status) {
    case SearchStatus::Found:
      std::cout << "distance " << res.seq.length() << "\n";
      if (!args.out.empty()) save_token_sequence_file(res.seq, args.out);
      return kExitYes;
    case SearchStatus::NotReconfigurable:
      std::cout << "not reconfigurable\n";
      return kExitNo;
    case SearchStatus::BudgetExceeded:
      std::cout << "budget exceeded\n";
      return args.strict_budget ? kExitBudget : kExitNo;
  }
  return kExitUsage;
}

// ---------- convert ----------

struct ConvertArgs {
  std::string in, out, graph;
};

int run_convert(const ConvertArgs& args, bool to_tj) {
  TokenSequence seq = load_token_sequence_file(args.in);
  if (!args.graph.empty()) {
    Graph g = load_graph_file(args.graph);
    std::string why;
    if (!validate_token_sequence(g, seq, &why))
      throw std::invalid_argument("input sequence invalid: " + why);
  }
  TokenSequence converted = to_tj ? tar_to_tj(seq) : tj_to_tar(seq);
  if (!args.graph.empty()) {
    Graph g = load_graph_file(args.graph);
    std::string why;
    if (!validate_token_sequence(g, converted, &why))
      throw std::runtime_error("converted sequence invalid: " + why);
  }
  std::cout << "length " << converted.length() << "\n";
  if (!args.out.empty()) {
    save_token_sequence_file(converted, args.out);
  } else {
    std::cout << serialize_token_sequence(converted);
  }
  return kExitYes;
}

// ---------- reduce sp-to-is ----------

struct ReduceArgs {
  std::string graph;
  int s = 0, t = 0;
  std::string graph_out, meta_out;
};

int run_reduce(const ReduceArgs& args) {
  Graph g = load_graph_file(args.graph);
  ReductionOutput r = build_gprime(g, args.s, args.t);
  std::string prefix = stem_of(args.graph) + "_gprime";
  std::string graph_path =
      args.graph_out.empty() ? prefix + ".graph" : args.graph_out;
  std::string meta_path =
      args.meta_out.empty() ? prefix + ".json" : args.meta_out;
  save_graph_file(r.g_prime, graph_path);

  json meta;
  meta["kind"] = "gprime";
  meta["s"] = r.layers.s;
  meta["t"] = r.layers.t;
  meta["k"] = r.layers.k;
  meta["layers"] = json(r.layers.layers);
  meta["to_prime"] = json(r.to_prime);
  meta["to_orig"] = json(r.to_orig);
  write_text_file(meta_path, meta.dump(2) + "\n");

  std::cout << "gprime vertices=" << r.g_prime.vertex_count()
            << " edges=" << r.g_prime.edge_count() << " k=" << r.layers.k
            << "\n";
  return kExitYes;
}

// ---------- map-seq ----------

struct MapSeqArgs {
  std::string graph;
  int s = 0, t = 0;
  std::string in, to, out;
};

int run_map_seq(const MapSeqArgs& args) {
  Graph g = load_graph_file(args.graph);
  ReductionOutput r = build_gprime(g, args.s, args.t);

  std::ifstream in(args.in);
  if (!in) throw std::runtime_error("cannot open sequence file: " + args.in);
  std::string first;
  std::getline(in, first);
  in.seekg(0);

  std::string text;
  if (first.rfind("sp-sequence", 0) == 0) {
    auto target = model_from_name(args.to);
    if (!target)
      throw std::invalid_argument(
          "an sp sequence maps to --to ts, tj, or tar");
    SpSequence seq = parse_sp_sequence(in);
    TokenSequence mapped = map_sp_to_is(r, seq, *target);
    std::cout << "length " << mapped.length() << "\n";
    text = serialize_token_sequence(mapped);
  } else if (first.rfind("is-sequence", 0) == 0) {
    if (args.to != "sp")
      throw std::invalid_argument("an is sequence maps to --to sp");
    TokenSequence seq = parse_token_sequence(in);
    SpSequence mapped = map_is_to_sp(r, seq);
    std::cout << "length " << mapped.length() << "\n";
    text = serialize_sp_sequence(mapped);
  } else {
    throw ParseError("unrecognized sequence header: " + first);
  }
  if (!args.out.empty()) {
    write_text_file(args.out, text);
  } else {
    std::cout << text;
  }
  return kExitYes;
}

// ---------- export dot ----------

struct ExportDotArgs {
  std::string graph;
  std::vector<std::string> highlights;
  std::string out;
};

int run_export_dot(const ExportDotArgs& args) {
  Graph g = load_graph_file(args.graph);
  std::vector<std::vector<int>> sets;
  for (const std::string& path : args.highlights)
    sets.push_back(load_vertex_set_file(path, g));
  std::string dot = export_dot(g, sets);
  emit(args.out.empty() ? std::nullopt : std::optional(args.out), dot);
  return kExitYes;
}

// ---------- validate ----------

struct ValidateArgs {
  std::string graph, seq;
};

int run_validate(const ValidateArgs& args) {
  Graph g = load_graph_file(args.graph);
  std::ifstream in(args.seq);
  if (!in) throw std::runtime_error("cannot open sequence file: " + args.seq);
  std::string first;
  std::getline(in, first);
  in.seekg(0);

  std::string why;
  bool ok;
  if (first.rfind("sp-sequence", 0) == 0) {
    SpSequence seq = parse_sp_sequence(in);
    ok = validate_sp_sequence(g, seq, &why);
  } else if (first.rfind("is-sequence", 0) == 0) {
    TokenSequence seq = parse_token_sequence(in);
    ok = validate_token_sequence(g, seq, &why);
  } else {
    throw ParseError("unrecognized sequence header: " + first);
  }
  if (ok) {
    std::cout << "valid\n";
    return kExitYes;
  }
  std::cout << "invalid: " << why << "\n";
  return kExitNo;
}

// ---------- oracle ----------

struct OracleArgs {
  std::string graph;
  std::string kind;
  int s = -1, t = -1;
  int size = -1;
  int k = -1;
  std::size_t cap = 100000;
  bool random = false;
  int rand_n = 8;
  double rand_p = 0.3;
  unsigned seed = 1;
  std::string graph_out;
  std::string out;
};

void enumerate_independent_sets(const Graph& g, int min_size, int max_size,
                                std::size_t cap,
                                std::vector<TokenSet>& out) {
  TokenSet current;
  auto rec = [&](auto&& self, int next) -> void {
    const int size = static_cast<int>(current.size());
    if (size >= min_size && size <= max_size) {
      if (out.size() >= cap)
        throw ResourceLimitError("oracle: more than " + std::to_string(cap) +
                                 " states");
      out.push_back(current);
    }
    if (size == max_size) return;
    for (int v = next; v < g.vertex_count(); ++v) {
      bool free = true;
      for (int u : g.neighbors(v)) {
        if (std::binary_search(current.begin(), current.end(), u)) {
          free = false;
          break;
        }
      }
      if (!free) continue;
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
}

int run_oracle(const OracleArgs& args) {
  Graph g;
  if (args.random) {
    if (args.graph_out.empty())
      throw std::invalid_argument("--random requires --graph-out");
    std::mt19937 rng(args.seed);
    g = Graph(args.rand_n, false);
    const unsigned threshold =
        static_cast<unsigned>(args.rand_p * 1000000.0);
    for (int u = 0; u < args.rand_n; ++u) {
      for (int v = u + 1; v < args.rand_n; ++v) {
        if (rng() % 1000000 < threshold) g.add_edge(u, v);
      }
    }
    save_graph_file(g, args.graph_out);
  } else {
    if (args.graph.empty())
      throw std::invalid_argument("oracle needs --graph or --random");
    g = load_graph_file(args.graph);
  }

  std::ostringstream dump;
  std::vector<std::pair<int, int>> edges;

  if (args.kind == "sp") {
    if (args.s < 0 || args.t < 0)
      throw std::invalid_argument("oracle sp requires --s and --t");
    auto states = sp_enumerate(g, args.s, args.t, args.cap);
    for (std::size_t i = 0; i < states.size(); ++i) {
      for (std::size_t j = i + 1; j < states.size(); ++j) {
        int diff = 0;
        for (std::size_t p = 0; p < states[i].size(); ++p)
          diff += states[i][p] != states[j][p];
        if (diff == 1) edges.emplace_back(i, j);
      }
    }
    dump << "oracle sp " << states.size() << " " << edges.size() << "\n";
    for (std::size_t i = 0; i < states.size(); ++i) {
      dump << "state " << i;
      for (int v : states[i]) dump << " " << v;
      dump << "\n";
    }
  } else {
    auto model = model_from_name(args.kind);
    if (!model) throw std::invalid_argument("unknown kind: " + args.kind);
    std::vector<TokenSet> states;
    if (*model == Model::TAR) {
      if (args.k < 0) throw std::invalid_argument("oracle tar requires --k");
      enumerate_independent_sets(g, std::max(0, args.k - 1),
                                 g.vertex_count(), args.cap, states);
    } else {
      if (args.size < 0)
        throw std::invalid_argument("oracle " + args.kind +
                                    " requires --size");
      enumerate_independent_sets(g, args.size, args.size, args.cap, states);
    }
    auto adjacent = [&](const TokenSet& a, const TokenSet& b) {
      std::vector<int> rem, add;
      std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(rem));
      std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                          std::back_inserter(add));
      switch (*model) {
        case Model::TS:
          return rem.size() == 1 && add.size() == 1 &&
                 g.has_edge(rem[0], add[0]);
        case Model::TJ:
          return rem.size() == 1 && add.size() == 1;
        case Model::TAR:
          return rem.size() + add.size() == 1;
      }
      return false;
    };
    for (std::size_t i = 0; i < states.size(); ++i) {
      for (std::size_t j = i + 1; j < states.size(); ++j) {
        if (adjacent(states[i], states[j])) edges.emplace_back(i, j);
      }
    }
    dump << "oracle " << args.kind << " " << states.size() << " "
         << edges.size() << "\n";
    for (std::size_t i = 0; i < states.size(); ++i) {
      dump << "state " << i;
      for (int v : states[i]) dump << " " << v;
      dump << "\n";
    }
  }
  for (const auto& [i, j] : edges) dump << "edge " << i << " " << j << "\n";
  emit(args.out.empty() ? std::nullopt : std::optional(args.out), dump.str());
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial reconfiguration toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate gadget instances");
  gen->require_subcommand(1);
  GenExpArgs exp_args;
  auto* gen_exp_cmd =
      gen->add_subcommand("exp", "exponential-diameter family");
  gen_exp_cmd->add_option("--k", exp_args.k, "recursion depth (>= 1)")
      ->required();
  gen_exp_cmd->add_option("--graph-out", exp_args.graph_out, "graph file");
  gen_exp_cmd->add_option("--paths-out", exp_args.paths_out,
                          "endpoint paths file");
  gen_exp_cmd->add_option("--meta-out", exp_args.meta_out, "JSON sidecar");

  GenSatArgs sat_args;
  auto* gen_sat_cmd = gen->add_subcommand("sat", "Min-SPR hardness instance");
  gen_sat_cmd->add_option("--cnf", sat_args.cnf, "DIMACS CNF input")
      ->required();
  gen_sat_cmd->add_option("--graph-out", sat_args.graph_out, "graph file");
  gen_sat_cmd->add_option("--meta-out", sat_args.meta_out, "JSON sidecar");

  // solve
  auto* solve = app.add_subcommand("solve", "exact solvers");
  solve->require_subcommand(1);
  SolveSpArgs ssp;
  auto* solve_sp_cmd =
      solve->add_subcommand("sp", "shortest-path reconfiguration BFS");
  solve_sp_cmd->add_option("--graph", ssp.graph, "graph file")->required();
  solve_sp_cmd->add_option("--paths", ssp.paths,
                           "paths file (first two = endpoints)");
  solve_sp_cmd->add_option("--meta", ssp.meta,
                           "instance sidecar with p_b/p_e (and budget)");
  solve_sp_cmd->add_option("--max-len", ssp.max_len,
                           "search depth cap (-1 = unbounded)");
  solve_sp_cmd->add_flag("--strict-budget", ssp.strict_budget,
                         "exit 3 instead of 1 when the cap pruned the search");
  solve_sp_cmd->add_option("--out", ssp.out, "write the sequence here");

  SolveIsArgs sis;
  auto* solve_is_cmd =
      solve->add_subcommand("is", "independent-set reconfiguration");
  solve_is_cmd->add_option("--graph", sis.graph, "graph file")->required();
  solve_is_cmd->add_option("--from", sis.from, "vertex-set file")->required();
  solve_is_cmd->add_option("--to", sis.to, "vertex-set file")->required();
  solve_is_cmd->add_option("--model", sis.model, "ts | tj | tar")->required();
  solve_is_cmd->add_option("--k", sis.k, "TAR threshold");
  solve_is_cmd->add_option("--algo", sis.algo, "auto | bfs | ehf | cograph");
  solve_is_cmd->add_option("--max-len", sis.max_len,
                           "BFS depth cap (-1 = unbounded)");
  solve_is_cmd->add_flag("--strict-budget", sis.strict_budget,
                         "exit 3 instead of 1 when the cap pruned the search");
  solve_is_cmd->add_option("--out", sis.out, "write the sequence here");

  // convert
  auto* convert = app.add_subcommand("convert", "TAR <-> TJ sequence maps");
  convert->require_subcommand(1);
  ConvertArgs cv_tj, cv_tar;
  auto* conv_tj = convert->add_subcommand("tar-to-tj", "collapse a TAR path");
  conv_tj->add_option("--in", cv_tj.in, "TAR sequence file")->required();
  conv_tj->add_option("--out", cv_tj.out, "output file (default stdout)");
  conv_tj->add_option("--graph", cv_tj.graph, "validate against this graph");
  auto* conv_tar = convert->add_subcommand("tj-to-tar", "expand a TJ path");
  conv_tar->add_option("--in", cv_tar.in, "TJ sequence file")->required();
  conv_tar->add_option("--out", cv_tar.out, "output file (default stdout)");
  conv_tar->add_option("--graph", cv_tar.graph, "validate against this graph");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "instance reductions");
  reduce->require_subcommand(1);
  ReduceArgs red;
  auto* reduce_cmd = reduce->add_subcommand(
      "sp-to-is", "layer cliques + complemented rungs (G')");
  reduce_cmd->add_option("--graph", red.graph, "graph file")->required();
  reduce_cmd->add_option("--s", red.s, "source vertex")->required();
  reduce_cmd->add_option("--t", red.t, "target vertex")->required();
  reduce_cmd->add_option("--graph-out", red.graph_out, "G' graph file");
  reduce_cmd->add_option("--meta-out", red.meta_out, "layer table sidecar");

  // map-seq
  MapSeqArgs mapseq;
  auto* map_cmd =
      app.add_subcommand("map-seq", "map sequences across the reduction");
  map_cmd->add_option("--graph", mapseq.graph, "source graph file")
      ->required();
  map_cmd->add_option("--s", mapseq.s, "source vertex")->required();
  map_cmd->add_option("--t", mapseq.t, "target vertex")->required();
  map_cmd->add_option("--in", mapseq.in, "sequence file")->required();
  map_cmd->add_option("--to", mapseq.to, "target model: sp | ts | tj | tar")
      ->required();
  map_cmd->add_option("--out", mapseq.out, "output file (default stdout)");

  // export
  auto* exp_cmd = app.add_subcommand("export", "exporters");
  exp_cmd->require_subcommand(1);
  ExportDotArgs dot;
  auto* dot_cmd = exp_cmd->add_subcommand("dot", "Graphviz DOT text");
  dot_cmd->add_option("--graph", dot.graph, "graph file")->required();
  dot_cmd->add_option("--highlight", dot.highlights,
                      "vertex-set file(s) to style");
  dot_cmd->add_option("--out", dot.out, "output file (default stdout)");

  // validate
  ValidateArgs val;
  auto* val_cmd = app.add_subcommand("validate", "re-check a sequence file");
  val_cmd->add_option("--graph", val.graph, "graph file")->required();
  val_cmd->add_option("--seq", val.seq, "sequence file")->required();

  // oracle
  OracleArgs orc;
  auto* orc_cmd = app.add_subcommand(
      "oracle", "dump the explicit reconfiguration graph (tiny instances)");
  orc_cmd->add_option("--graph", orc.graph, "graph file");
  orc_cmd->add_option("--kind", orc.kind, "sp | ts | tj | tar")->required();
  orc_cmd->add_option("--s", orc.s, "source vertex (sp)");
  orc_cmd->add_option("--t", orc.t, "target vertex (sp)");
  orc_cmd->add_option("--size", orc.size, "token count (ts/tj)");
  orc_cmd->add_option("--k", orc.k, "TAR threshold");
  orc_cmd->add_option("--cap", orc.cap, "state-count cap");
  orc_cmd->add_flag("--random", orc.random, "generate a seeded random graph");
  orc_cmd->add_option("--n", orc.rand_n, "random graph size");
  orc_cmd->add_option("--p", orc.rand_p, "random edge probability");
  orc_cmd->add_option("--seed", orc.seed, "random seed");
  orc_cmd->add_option("--graph-out", orc.graph_out,
                      "where to save the random graph");
  orc_cmd->add_option("--out", orc.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen_exp_cmd->parsed()) return run_gen_exp(exp_args);
    if (gen_sat_cmd->parsed()) return run_gen_sat(sat_args);
    if (solve_sp_cmd->parsed()) return run_solve_sp(ssp);
    if (solve_is_cmd->parsed()) return run_solve_is(sis);
    if (conv_tj->parsed()) return run_convert(cv_tj, /*to_tj=*/true);
    if (conv_tar->parsed()) return run_convert(cv_tar, /*to_tj=*/false);
    if (reduce_cmd->parsed()) return run_reduce(red);
    if (map_cmd->parsed()) return run_map_seq(mapseq);
    if (dot_cmd->parsed()) return run_export_dot(dot);
    if (val_cmd->parsed()) return run_validate(val);
    if (orc_cmd->parsed()) return run_oracle(orc);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
