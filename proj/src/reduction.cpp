#include "reconfig/reduction.hpp"

#include <algorithm>

namespace reconfig {

ReductionOutput build_gprime(const Graph& g, int s, int t) {
  if (g.directed())
    throw std::invalid_argument("build_gprime: source graph must be undirected");

  ReductionOutput out;
  out.layers = layer_decompose(g, s, t);

  out.to_prime.assign(g.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (out.layers.layer_of[v] >= 0) {
      out.to_prime[v] = next++;
      out.to_orig.push_back(v);
    }
  }

  out.g_prime = Graph(next, /*directed=*/false);
  const auto& layers = out.layers.layers;
  for (const auto& layer : layers) {
    for (std::size_t i = 0; i < layer.size(); ++i) {
      for (std::size_t j = i + 1; j < layer.size(); ++j)
        out.g_prime.add_edge(out.to_prime[layer[i]], out.to_prime[layer[j]]);
    }
  }
  for (std::size_t d = 0; d + 1 < layers.size(); ++d) {
    for (int u : layers[d]) {
      for (int v : layers[d + 1]) {
        if (!g.has_edge(u, v))
          out.g_prime.add_edge(out.to_prime[u], out.to_prime[v]);
      }
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto it = g.labels().find(v);
    if (it != g.labels().end() && out.to_prime[v] >= 0)
      out.g_prime.set_label(out.to_prime[v], it->second);
  }
  return out;
}

TokenSet path_to_set(const ReductionOutput& r, const SpState& p) {
  std::string why;
  if (!sp_is_valid(r.layers.g1, r.layers, p, &why))
    throw std::invalid_argument("path_to_set: invalid shortest path: " + why);
  TokenSet ts;
  ts.reserve(p.size());
  for (int v : p) ts.push_back(r.to_prime[v]);
  std::sort(ts.begin(), ts.end());
  return ts;
}

SpState set_to_path(const ReductionOutput& r, const TokenSet& ts) {
  if (static_cast<int>(ts.size()) != r.layers.k + 1)
    throw std::invalid_argument("set_to_path: set has " +
                                std::to_string(ts.size()) +
                                " vertices, expected " +
                                std::to_string(r.layers.k + 1));
  if (!is_independent(r.g_prime, ts))
    throw std::invalid_argument("set_to_path: set is not independent");
  SpState path(r.layers.k + 1, -1);
  for (int v : ts) {
    const int orig = r.to_orig.at(v);
    const int layer = r.layers.layer_of[orig];
    // Layer cliques make one-vertex-per-layer automatic for independent sets.
    if (layer < 0 || path[layer] != -1)
      throw std::logic_error("set_to_path: set is not one-per-layer");
    path[layer] = orig;
  }
  return path;
}

TokenSequence map_sp_to_is(const ReductionOutput& r, const SpSequence& seq,
                           Model target) {
  std::string why;
  if (!validate_sp_sequence(r.layers.g1, seq, &why))
    throw std::invalid_argument("map_sp_to_is: invalid source sequence: " +
                                why);
  TokenSequence tokens;
  tokens.model = target == Model::TAR ? Model::TJ : target;
  for (const SpState& state : seq.states)
    tokens.states.push_back(path_to_set(r, state));
  tokens.moves = derive_token_moves(tokens.states, tokens.model);
  if (target == Model::TAR) return tj_to_tar(tokens);
  return tokens;
}

SpSequence map_is_to_sp(const ReductionOutput& r, const TokenSequence& seq) {
  std::string why;
  if (!validate_token_sequence(r.g_prime, seq, &why))
    throw std::invalid_argument("map_is_to_sp: invalid source sequence: " +
                                why);
  const TokenSequence* source = &seq;
  TokenSequence collapsed;
  if (seq.model == Model::TAR) {
    collapsed = tar_to_tj(seq);
    source = &collapsed;
  }
  SpSequence out;
  for (const TokenSet& state : source->states)
    out.states.push_back(set_to_path(r, state));
  out.moves = derive_sp_moves(out.states);
  return out;
}

}  // namespace reconfig
