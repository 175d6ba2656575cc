#include <sstream>

#include "doctest.h"
#include "reconfig/gadget_exp.hpp"
#include "reconfig/sp.hpp"
#include "test_util.hpp"

using namespace reconfig;

namespace {

Graph cycle4() {
  Graph g(4, false);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  return g;
}

}  // namespace

TEST_CASE("sp_is_valid on C_4") {
  Graph g = cycle4();
  CHECK(sp_is_valid(g, 0, 2, {0, 1, 2}));
  CHECK(sp_is_valid(g, 0, 2, {0, 3, 2}));
  std::string why;
  CHECK(!sp_is_valid(g, 0, 2, {0, 1, 2, 3}, &why));
  CHECK(!why.empty());
  CHECK(!sp_is_valid(g, 0, 2, {0, 2}, &why));
  CHECK(!sp_is_valid(g, 0, 2, {}, &why));
  CHECK(!sp_is_valid(g, 0, 2, {0, 9, 2}, &why));
}

TEST_CASE("sp_is_valid accepts the level-1 gadget endpoint") {
  ExpInstance inst = gen_exp(1);
  CHECK(sp_is_valid(inst.g, inst.s, inst.t, inst.p_b));
  CHECK(sp_is_valid(inst.g, inst.s, inst.t, inst.p_e));
}

TEST_CASE("sp_neighbors on C_4 and K_2") {
  Graph g = cycle4();
  auto ld = layer_decompose(g, 0, 2);
  auto nb = sp_neighbors(g, ld, {0, 1, 2});
  REQUIRE(nb.size() == 1);
  CHECK(nb[0] == SpState{0, 3, 2});

  Graph k2 = parse_graph("graph undirected\n2 1\n0 1\n");
  auto ld2 = layer_decompose(k2, 0, 1);
  CHECK(sp_neighbors(k2, ld2, {0, 1}).empty());
}

TEST_CASE("sp_neighbors matches brute-force Hamming-1 filtering") {
  // On the level-1 gadget and on random graphs: the neighbor set equals all
  // enumerated shortest paths at switch distance one.
  auto check_instance = [](const Graph& g, int s, int t) {
    auto ld = layer_decompose(g, s, t);
    auto all = testutil::brute_shortest_paths(g, s, t);
    for (const SpState& p : all) {
      std::vector<SpState> expected;
      for (const SpState& q : all) {
        if (testutil::sp_adjacent(p, q)) expected.push_back(q);
      }
      auto got = sp_neighbors(g, ld, p);
      std::sort(got.begin(), got.end());
      CHECK(got == expected);
      for (const SpState& q : got) CHECK(sp_is_valid(g, ld, q));
    }
  };

  ExpInstance inst = gen_exp(1);
  check_instance(inst.g, inst.s, inst.t);

  testutil::Rng rng(1311);
  int done = 0;
  while (done < 15) {
    Graph g = testutil::gnp(rng, testutil::rng_int(rng, 3, 9), 0.4);
    auto d = bfs_dist(g, 0);
    int t = -1;
    for (int v = 1; v < g.vertex_count(); ++v) {
      if (d[v] >= 2) t = v;
    }
    if (t < 0) continue;
    ++done;
    check_instance(g, 0, t);
  }
}

TEST_CASE("sp_neighbors symmetry property") {
  testutil::Rng rng(5150);
  int done = 0;
  while (done < 10) {
    Graph g = testutil::gnp(rng, 8, 0.4);
    auto d = bfs_dist(g, 0);
    int t = -1;
    for (int v = 1; v < 8; ++v) {
      if (d[v] >= 2) t = v;
    }
    if (t < 0) continue;
    ++done;
    auto ld = layer_decompose(g, 0, t);
    for (const SpState& p : sp_enumerate(g, 0, t)) {
      for (const SpState& q : sp_neighbors(g, ld, p)) {
        auto back = sp_neighbors(g, ld, q);
        CHECK(std::find(back.begin(), back.end(), p) != back.end());
      }
    }
  }
}

TEST_CASE("sp_enumerate on small graphs") {
  Graph g = cycle4();
  auto paths = sp_enumerate(g, 0, 2);
  REQUIRE(paths.size() == 2);
  CHECK(paths[0] == SpState{0, 1, 2});
  CHECK(paths[1] == SpState{0, 3, 2});

  Graph k2 = parse_graph("graph undirected\n2 1\n0 1\n");
  auto single = sp_enumerate(k2, 0, 1);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == SpState{0, 1});
}

TEST_CASE("sp_enumerate agrees with the DFS oracle and honors its cap") {
  testutil::Rng rng(8080);
  int done = 0;
  while (done < 20) {
    Graph g = testutil::gnp(rng, testutil::rng_int(rng, 3, 10), 0.45);
    auto d = bfs_dist(g, 0);
    int t = -1;
    for (int v = 1; v < g.vertex_count(); ++v) {
      if (d[v] >= 1) t = v;
    }
    if (t < 0) continue;
    ++done;
    auto got = sp_enumerate(g, 0, t);
    auto expected = testutil::brute_shortest_paths(g, 0, t);
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
    if (expected.size() > 1)
      CHECK_THROWS_AS(sp_enumerate(g, 0, t, expected.size() - 1),
                      ResourceLimitError);
  }
}

TEST_CASE("sp_bfs identity and single swap") {
  Graph g = cycle4();
  auto same = sp_bfs(g, 0, 2, {0, 1, 2}, {0, 1, 2});
  REQUIRE(same.status == SearchStatus::Found);
  CHECK(same.seq.length() == 0);
  CHECK(same.seq.states.size() == 1);

  auto one = sp_bfs(g, 0, 2, {0, 1, 2}, {0, 3, 2});
  REQUIRE(one.status == SearchStatus::Found);
  CHECK(one.seq.length() == 1);
  CHECK(validate_sp_sequence(g, one.seq));
}

TEST_CASE("sp_bfs rejects invalid endpoints") {
  Graph g = cycle4();
  CHECK_THROWS_AS(sp_bfs(g, 0, 2, {0, 2}, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(sp_bfs(g, 0, 2, {0, 1, 2}, {2, 1, 0}), std::invalid_argument);
}

TEST_CASE("sp_bfs matches the explicit reconfiguration-graph oracle") {
  testutil::Rng rng(6021);
  int done = 0;
  while (done < 40) {
    Graph g = testutil::gnp(rng, testutil::rng_int(rng, 4, 12), 0.35);
    auto d = bfs_dist(g, 0);
    int t = -1;
    for (int v = 1; v < g.vertex_count(); ++v) {
      if (d[v] >= 2) t = v;
    }
    if (t < 0) continue;
    auto all = testutil::brute_shortest_paths(g, 0, t);
    if (all.size() < 2) continue;
    ++done;
    const SpState& from = all[testutil::rng_int(rng, 0, (int)all.size() - 1)];
    const SpState& to = all[testutil::rng_int(rng, 0, (int)all.size() - 1)];
    int oracle = testutil::explicit_reconfig_distance(all, from, to,
                                                      testutil::sp_adjacent);
    auto got = sp_bfs(g, 0, t, from, to);
    if (oracle < 0) {
      CHECK(got.status == SearchStatus::NotReconfigurable);
    } else {
      REQUIRE(got.status == SearchStatus::Found);
      CHECK(got.seq.length() == oracle);
      CHECK(validate_sp_sequence(g, got.seq));
      // consecutive states differ in exactly one position
      for (std::size_t i = 0; i + 1 < got.seq.states.size(); ++i)
        CHECK(testutil::sp_adjacent(got.seq.states[i], got.seq.states[i + 1]));
    }
  }
}

TEST_CASE("sp_bfs budget semantics distinguish pruning from exhaustion") {
  ExpInstance inst = gen_exp(1);  // distance 11 between the endpoints
  auto full = sp_bfs(inst.g, inst.s, inst.t, inst.p_b, inst.p_e);
  REQUIRE(full.status == SearchStatus::Found);
  CHECK(full.seq.length() == 11);

  auto pruned = sp_bfs(inst.g, inst.s, inst.t, inst.p_b, inst.p_e, 10);
  CHECK(pruned.status == SearchStatus::BudgetExceeded);
  auto exact = sp_bfs(inst.g, inst.s, inst.t, inst.p_b, inst.p_e, 11);
  CHECK(exact.status == SearchStatus::Found);

  // disconnected component: a large-enough budget still proves exhaustion
  Graph g(6, false);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  g.add_edge(3, 2);
  g.add_edge(0, 4);
  g.add_edge(4, 5);
  g.add_edge(5, 2);  // (0,4,5,2) is longer, not a shortest path
  auto res = sp_bfs(g, 0, 2, {0, 1, 2}, {0, 3, 2}, 50);
  CHECK(res.status == SearchStatus::Found);
}

TEST_CASE("sp sequence and paths file round trips") {
  Graph g = cycle4();
  auto res = sp_bfs(g, 0, 2, {0, 1, 2}, {0, 3, 2});
  std::string text = serialize_sp_sequence(res.seq);
  CHECK(text.substr(0, 14) == "sp-sequence 1\n");
  std::istringstream in(text);
  SpSequence back = parse_sp_sequence(in);
  CHECK(back.states == res.seq.states);

  std::string paths = serialize_sp_paths({{0, 1, 2}, {0, 3, 2}});
  std::istringstream pin(paths);
  auto parsed = parse_sp_paths(pin);
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0] == SpState{0, 1, 2});

  std::istringstream bad("sp-sequence 2\n0 1 2\n0 3 2\n");
  CHECK_THROWS_AS(parse_sp_sequence(bad), ParseError);
}
