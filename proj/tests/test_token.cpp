#include <sstream>

#include "doctest.h"
#include "reconfig/token.hpp"
#include "test_util.hpp"

using namespace reconfig;

namespace {

Graph claw() {  // center 0, leaves 1,2,3
  Graph g(4, false);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  return g;
}

Graph path3() {  // 0 - 1 - 2
  Graph g(3, false);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

}  // namespace

TEST_CASE("is_independent") {
  Graph g = path3();
  CHECK(is_independent(g, {}));
  CHECK(is_independent(g, {0, 2}));
  CHECK(!is_independent(g, {0, 1}));
  CHECK(!is_independent(g, {0, 0}));
  CHECK(!is_independent(g, {5}));
}

TEST_CASE("is_neighbors on the claw") {
  Graph g = claw();
  TokenSet a{1, 2};
  CHECK(is_neighbors(g, a, Model::TS).empty());
  auto tj = is_neighbors(g, a, Model::TJ);
  CHECK(tj == std::vector<TokenSet>{{1, 3}, {2, 3}});
}

TEST_CASE("is_neighbors TAR on P_3") {
  Graph g = path3();
  auto nb = is_neighbors(g, {0}, Model::TAR, 1);
  CHECK(nb == std::vector<TokenSet>{{}, {0, 2}});
}

TEST_CASE("is_neighbors rejects dependent input") {
  Graph g = path3();
  CHECK_THROWS_AS(is_neighbors(g, {0, 1}, Model::TS), std::invalid_argument);
}

TEST_CASE("is_neighbors matches the definitional adjacency oracle") {
  testutil::Rng rng(3141);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = testutil::gnp(rng, testutil::rng_int(rng, 2, 8), 0.35);
    auto all = testutil::all_independent_sets(g);
    for (const TokenSet& a : all) {
      for (Model model : {Model::TS, Model::TJ}) {
        std::vector<TokenSet> expected;
        for (const TokenSet& b : all) {
          bool adj = model == Model::TS ? testutil::ts_adjacent(g, a, b)
                                        : testutil::tj_adjacent(a, b);
          if (adj) expected.push_back(b);
        }
        CHECK(is_neighbors(g, a, model) == expected);
      }
      const int k = static_cast<int>(a.size());
      std::vector<TokenSet> expected;
      for (const TokenSet& b : all) {
        if (static_cast<int>(b.size()) >= k - 1 && testutil::tar_adjacent(a, b))
          expected.push_back(b);
      }
      CHECK(is_neighbors(g, a, Model::TAR, k) == expected);
    }
  }
}

TEST_CASE("is_bfs basics on P_3 and the claw") {
  Graph g = path3();
  auto same = is_bfs(g, {0}, {0}, Model::TS);
  REQUIRE(same.status == SearchStatus::Found);
  CHECK(same.seq.length() == 0);

  auto ts = is_bfs(g, {0}, {2}, Model::TS);
  REQUIRE(ts.status == SearchStatus::Found);
  CHECK(ts.seq.length() == 2);
  auto tj = is_bfs(g, {0}, {2}, Model::TJ);
  REQUIRE(tj.status == SearchStatus::Found);
  CHECK(tj.seq.length() == 1);
  auto tar = is_bfs(g, {0}, {2}, Model::TAR, 1);
  REQUIRE(tar.status == SearchStatus::Found);
  CHECK(tar.seq.length() == 2);

  Graph cl = claw();
  CHECK(is_bfs(cl, {1, 2}, {1, 3}, Model::TS).status ==
        SearchStatus::NotReconfigurable);
  auto cl_tj = is_bfs(cl, {1, 2}, {1, 3}, Model::TJ);
  REQUIRE(cl_tj.status == SearchStatus::Found);
  CHECK(cl_tj.seq.length() == 1);

  CHECK(is_bfs(g, {0, 2}, {1}, Model::TS).status ==
        SearchStatus::NotReconfigurable);
  CHECK_THROWS_AS(is_bfs(g, {0, 1}, {0, 2}, Model::TS), std::invalid_argument);
  CHECK_THROWS_AS(is_bfs(g, {0}, {2}, Model::TAR, 2), std::invalid_argument);
}

TEST_CASE("is_bfs budget semantics") {
  Graph g = path3();
  auto pruned = is_bfs(g, {0}, {2}, Model::TS, 0, 1);
  CHECK(pruned.status == SearchStatus::BudgetExceeded);
  auto exact = is_bfs(g, {0}, {2}, Model::TS, 0, 2);
  REQUIRE(exact.status == SearchStatus::Found);
  CHECK(exact.seq.length() == 2);
  // exhausting the component under a generous cap is still a provable no
  Graph cl = claw();
  auto no = is_bfs(cl, {1, 2}, {1, 3}, Model::TS, 0, 100);
  CHECK(no.status == SearchStatus::NotReconfigurable);
}

TEST_CASE("is_bfs matches the explicit reconfiguration-graph oracle") {
  testutil::Rng rng(2718);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = testutil::gnp(rng, testutil::rng_int(rng, 3, 9), 0.3);
    int size = testutil::rng_int(rng, 1, 3);
    auto pair = testutil::random_equal_size_pair(rng, g, size);
    if (pair.empty()) continue;
    for (Model model : {Model::TS, Model::TJ, Model::TAR}) {
      int k = model == Model::TAR ? size : 0;
      int oracle = testutil::oracle_is_distance(g, pair[0], pair[1], model, k);
      auto got = is_bfs(g, pair[0], pair[1], model, k);
      if (oracle < 0) {
        CHECK(got.status == SearchStatus::NotReconfigurable);
      } else {
        REQUIRE(got.status == SearchStatus::Found);
        CHECK(got.seq.length() == oracle);
        std::string why;
        CHECK_MESSAGE(validate_token_sequence(g, got.seq, &why), why);
      }
    }
  }
}

TEST_CASE("TS reconfigurability implies TJ reconfigurability") {
  testutil::Rng rng(9009);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = testutil::gnp(rng, 7, 0.35);
    auto pair = testutil::random_equal_size_pair(rng, g, 2);
    if (pair.empty()) continue;
    auto ts = is_bfs(g, pair[0], pair[1], Model::TS);
    if (ts.status == SearchStatus::Found) {
      auto tj = is_bfs(g, pair[0], pair[1], Model::TJ);
      REQUIRE(tj.status == SearchStatus::Found);
      CHECK(tj.seq.length() <= ts.seq.length());
    }
  }
}

TEST_CASE("tj_to_tar expansion") {
  Graph g = path3();
  TokenSequence empty;
  empty.model = Model::TJ;
  empty.states = {{0}};
  auto tar0 = tj_to_tar(empty);
  CHECK(tar0.length() == 0);
  CHECK(tar0.tar_k == 1);

  auto tj = is_bfs(g, {0}, {2}, Model::TJ).seq;
  auto tar = tj_to_tar(tj);
  CHECK(tar.length() == 2);
  CHECK(tar.states == std::vector<TokenSet>{{0}, {}, {2}});
  std::string why;
  CHECK_MESSAGE(validate_token_sequence(g, tar, &why), why);
}

TEST_CASE("tar_to_tj on the P_3 detour") {
  Graph g = path3();
  TokenSequence tar;
  tar.model = Model::TAR;
  tar.tar_k = 1;
  tar.states = {{0}, {}, {2}};
  tar.moves = derive_token_moves(tar.states, Model::TAR);
  auto tj = tar_to_tj(tar);
  CHECK(tj.length() == 1);
  CHECK(tj.states == std::vector<TokenSet>{{0}, {2}});
  std::string why;
  CHECK_MESSAGE(validate_token_sequence(g, tj, &why), why);
}

TEST_CASE("tar_to_tj compresses removable detours") {
  // A_0 = A_2 repetition disappears before any folding.
  TokenSequence tar;
  tar.model = Model::TAR;
  tar.tar_k = 1;
  tar.states = {{0}, {}, {0}, {}, {2}};
  tar.moves = derive_token_moves(tar.states, Model::TAR);
  auto tj = tar_to_tj(tar);
  CHECK(tj.length() == 1);
  CHECK(tj.states.front() == TokenSet{0});
  CHECK(tj.states.back() == TokenSet{2});
}

TEST_CASE("tar_to_tj folds peaks above the threshold") {
  // The walk climbs to size-2 peaks twice; folding plus compression
  // collapses the whole detour into the single jump 0 -> 4.
  Graph g(5, false);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  TokenSequence tar;
  tar.model = Model::TAR;
  tar.tar_k = 1;
  tar.states = {{0}, {0, 2}, {2}, {2, 4}, {4}};
  tar.moves = derive_token_moves(tar.states, Model::TAR);
  std::string why;
  REQUIRE_MESSAGE(validate_token_sequence(g, tar, &why), why);
  auto tj = tar_to_tj(tar);
  CHECK(tj.length() == 1);
  CHECK(tj.states.front() == TokenSet{0});
  CHECK(tj.states.back() == TokenSet{4});
  CHECK_MESSAGE(validate_token_sequence(g, tj, &why), why);
}

TEST_CASE("tar_to_tj rejects bad endpoints") {
  TokenSequence tar;
  tar.model = Model::TAR;
  tar.tar_k = 2;
  tar.states = {{0}, {0, 2}};
  CHECK_THROWS_AS(tar_to_tj(tar), std::invalid_argument);
}

TEST_CASE("TAR distance is exactly twice TJ distance") {
  testutil::Rng rng(1618);
  int done = 0;
  while (done < 40) {
    Graph g = testutil::gnp(rng, testutil::rng_int(rng, 3, 8), 0.3);
    int size = testutil::rng_int(rng, 1, 3);
    auto pair = testutil::random_equal_size_pair(rng, g, size);
    if (pair.empty()) continue;
    ++done;
    auto tj = is_bfs(g, pair[0], pair[1], Model::TJ);
    auto tar = is_bfs(g, pair[0], pair[1], Model::TAR, size);
    if (tj.status == SearchStatus::Found) {
      REQUIRE(tar.status == SearchStatus::Found);
      CHECK(tar.seq.length() == 2 * tj.seq.length());

      auto expanded = tj_to_tar(tj.seq);
      CHECK(expanded.length() == 2 * tj.seq.length());
      std::string why;
      CHECK_MESSAGE(validate_token_sequence(g, expanded, &why), why);

      auto collapsed = tar_to_tj(tar.seq);
      CHECK(collapsed.length() == tar.seq.length() / 2);
      CHECK(collapsed.states.front() == pair[0]);
      CHECK(collapsed.states.back() == pair[1]);
      CHECK_MESSAGE(validate_token_sequence(g, collapsed, &why), why);
    } else {
      CHECK(tar.status == SearchStatus::NotReconfigurable);
    }
  }
}

TEST_CASE("tar_to_tj handles arbitrary valid TAR paths") {
  // Not only shortest ones: random walks in the TAR graph still collapse to
  // valid TJ sequences with the same endpoints.
  testutil::Rng rng(7711);
  int done = 0;
  while (done < 25) {
    Graph g = testutil::gnp(rng, 7, 0.3);
    int size = testutil::rng_int(rng, 1, 2);
    auto pair = testutil::random_equal_size_pair(rng, g, size);
    if (pair.empty()) continue;
    TokenSequence walk;
    walk.model = Model::TAR;
    walk.tar_k = size;
    walk.states.push_back(pair[0]);
    TokenSet cur = pair[0];
    for (int step = 0; step < 12; ++step) {
      auto nb = is_neighbors(g, cur, Model::TAR, size);
      if (nb.empty()) break;
      cur = nb[testutil::rng_int(rng, 0, (int)nb.size() - 1)];
      walk.states.push_back(cur);
    }
    if (static_cast<int>(cur.size()) != size) continue;
    ++done;
    walk.moves = derive_token_moves(walk.states, Model::TAR);
    auto tj = tar_to_tj(walk);
    CHECK(tj.states.front() == pair[0]);
    CHECK(tj.states.back() == cur);
    std::string why;
    CHECK_MESSAGE(validate_token_sequence(g, tj, &why), why);
    CHECK(2 * tj.length() <= walk.length());
  }
}

TEST_CASE("token sequence file round trip including empty sets") {
  Graph g = path3();
  auto tar = is_bfs(g, {0}, {2}, Model::TAR, 1).seq;
  std::string text = serialize_token_sequence(tar);
  CHECK(text.substr(0, 19) == "is-sequence tar 1 2");
  std::istringstream in(text);
  TokenSequence back = parse_token_sequence(in);
  CHECK(back.states == tar.states);
  CHECK(back.tar_k == 1);

  auto tj = is_bfs(g, {0}, {2}, Model::TJ).seq;
  std::string tj_text = serialize_token_sequence(tj);
  CHECK(tj_text.substr(0, 16) == "is-sequence tj 1");
  std::istringstream tin(tj_text);
  CHECK(parse_token_sequence(tin).states == tj.states);

  std::istringstream bad("is-sequence tar 1 3\n0\n\n2\n");
  CHECK_THROWS_AS(parse_token_sequence(bad), ParseError);
}
