#include "doctest.h"
#include "reconfig/gadget_exp.hpp"
#include "reconfig/sp.hpp"
#include "test_util.hpp"

using namespace reconfig;

TEST_CASE("gen_exp rejects bad k") {
  CHECK_THROWS_AS(gen_exp(0), std::invalid_argument);
  CHECK_THROWS_AS(gen_exp(-3), std::invalid_argument);
}

TEST_CASE("gen_exp counts: 15 vertices / 25 edges at level 1") {
  ExpInstance inst = gen_exp(1);
  CHECK(inst.g.vertex_count() == 15);
  CHECK(inst.g.edge_count() == 25);
  CHECK(inst.p_b == SpState{0, 1, 8, 14});
  CHECK(inst.p_e == SpState{0, 7, 13, 14});
  CHECK(inst.g.labels().at(inst.id(ExpRole::X, 1, 3)) == "x[1][3]");
}

TEST_CASE("gen_exp counts follow the recurrence V=13k+2, E(k)=E(k-1)+36") {
  int prev_edges = 0;
  for (int k = 1; k <= 5; ++k) {
    ExpInstance inst = gen_exp(k);
    CHECK(inst.g.vertex_count() == 13 * k + 2);
    if (k == 1) {
      CHECK(inst.g.edge_count() == 25);
    } else {
      CHECK(inst.g.edge_count() == prev_edges + 36);
    }
    prev_edges = inst.g.edge_count();
  }
  CHECK(gen_exp(2).g.vertex_count() == 28);
}

TEST_CASE("gen_exp level-1 layering matches the construction") {
  ExpInstance inst = gen_exp(1);
  auto ld = layer_decompose(inst.g, inst.s, inst.t);
  CHECK(ld.k == 3);
  CHECK(ld.layers[0] == std::vector<int>{0});
  CHECK(ld.layers[1] == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
  CHECK(ld.layers[2] == std::vector<int>{8, 9, 10, 11, 12, 13});
  CHECK(ld.layers[3] == std::vector<int>{14});
}

TEST_CASE("gen_exp endpoint paths are valid and hit the pinned columns") {
  for (int k = 1; k <= 4; ++k) {
    ExpInstance inst = gen_exp(k);
    CHECK(sp_is_valid(inst.g, inst.s, inst.t, inst.p_b));
    CHECK(sp_is_valid(inst.g, inst.s, inst.t, inst.p_e));
    CHECK(static_cast<int>(inst.p_b.size()) == 2 * k + 2);
    // p_b passes y[k][1], p_e passes y[k][6]
    CHECK(inst.p_b[2] == inst.id(ExpRole::Y, k, 1));
    CHECK(inst.p_e[2] == inst.id(ExpRole::Y, k, 6));
  }
}

TEST_CASE("exp_witness length is exactly 11(2^k - 1) and validates") {
  for (int k = 1; k <= 6; ++k) {
    ExpInstance inst = gen_exp(k);
    SpSequence seq = exp_witness(inst);
    CHECK(seq.length() == 11 * ((1 << k) - 1));
    CHECK(seq.states.front() == inst.p_b);
    CHECK(seq.states.back() == inst.p_e);
    std::string why;
    CHECK_MESSAGE(validate_sp_sequence(inst.g, seq, &why), why);
  }
}

TEST_CASE("exact distance at level 1 equals 11 and is bracketed at level 2") {
  ExpInstance one = gen_exp(1);
  auto d1 = sp_bfs(one.g, one.s, one.t, one.p_b, one.p_e);
  REQUIRE(d1.status == SearchStatus::Found);
  CHECK(d1.seq.length() == 11);

  ExpInstance two = gen_exp(2);
  auto d2 = sp_bfs(two.g, two.s, two.t, two.p_b, two.p_e);
  REQUIRE(d2.status == SearchStatus::Found);
  CHECK(d2.seq.length() >= 9 * 3);
  CHECK(d2.seq.length() <= 11 * 3);
}

TEST_CASE("level-1 distance matches the explicit oracle") {
  ExpInstance inst = gen_exp(1);
  auto all = testutil::brute_shortest_paths(inst.g, inst.s, inst.t);
  int oracle = testutil::explicit_reconfig_distance(all, inst.p_b, inst.p_e,
                                                    testutil::sp_adjacent);
  CHECK(oracle == 11);
}
