#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lpp/generators.hpp"
#include "lpp/lpp_core.hpp"
#include "lpp/oracle.hpp"
#include "test_util.hpp"

using lpp::binary_search_min_true;
using lpp::Graph;
using lpp::GraphClass;

TEST_CASE("threshold search, exact mode") {
  auto at_least_7 = [](int x) { return x >= 7; };
  CHECK(binary_search_min_true(0, 10, at_least_7).threshold == 7);
  CHECK_FALSE(binary_search_min_true(0, 10, at_least_7).interval.has_value());
  CHECK(binary_search_min_true(0, 10, [](int x) { return x >= 0; }).threshold == 0);
  CHECK(binary_search_min_true(3, 3, [](int x) { return x >= 3; }).threshold == 3);
}

TEST_CASE("threshold search, early stop") {
  const auto r = binary_search_min_true(0, 16, [](int x) { return x >= 7; }, 4);
  REQUIRE(r.interval.has_value());
  CHECK(r.interval->first == 4);
  CHECK(r.interval->second == 8);
  // threshold already at the lower bound: degenerate bracket
  const auto s = binary_search_min_true(2, 9, [](int x) { return x >= 2; }, 4);
  REQUIRE(s.interval.has_value());
  CHECK(s.interval->first == 2);
  CHECK(s.interval->second == 2);
}

TEST_CASE("threshold search error cases") {
  auto never = [](int) { return false; };
  CHECK_THROWS_AS(binary_search_min_true(0, 10, never), lpp::SearchError);
  auto always = [](int) { return true; };
  CHECK_THROWS_AS(binary_search_min_true(0, 10, always, 0), lpp::Error);
  CHECK_THROWS_AS(binary_search_min_true(5, 4, always), lpp::Error);
}

TEST_CASE("tree diameter on small fixtures") {
  CHECK(lpp::tree_diameter(lpp_test::path_graph(5)).length == 4);
  CHECK(lpp::tree_diameter(lpp_test::path_graph(2)).length == 1);
  CHECK(lpp::tree_diameter(lpp_test::path_graph(1)).length == 0);
  CHECK(lpp::tree_diameter(lpp_test::star_graph(9)).length == 2);
  CHECK(lpp::tree_diameter(lpp_test::path_graph(5)).graph_class == GraphClass::Tree);
  CHECK_THROWS_AS(lpp::tree_diameter(lpp_test::b2()), lpp::ClassError);
}

TEST_CASE("tree diameter interval mode") {
  // 17-vertex tree of diameter 7: a 1..8 path with leaves hung on 4 and 5
  std::vector<lpp::Edge> es;
  for (int v = 1; v < 8; ++v) es.push_back({v, v + 1});
  for (int leaf = 9; leaf <= 13; ++leaf) es.push_back({4, leaf});
  for (int leaf = 14; leaf <= 17; ++leaf) es.push_back({5, leaf});
  const Graph t = Graph::undirected(17, std::move(es));
  REQUIRE(lpp::tree_diameter(t).length == 7);
  const auto r = lpp::tree_diameter(t, 4);
  REQUIRE(r.interval.has_value());
  CHECK(r.interval->first == 4);
  CHECK(r.interval->second == 8);
}

TEST_CASE("dag longest length on small fixtures") {
  CHECK(lpp::dag_longest_length(lpp_test::dag_chain3()).length == 2);
  CHECK(lpp::dag_longest_length(lpp_test::dag_diamond()).length == 2);
  CHECK(lpp::dag_longest_length(Graph::directed(1, {})).length == 0);
  CHECK_THROWS_AS(lpp::dag_longest_length(lpp_test::path_graph(3)),
                  lpp::ClassError);
  CHECK_THROWS_AS(lpp::dag_longest_length(Graph::directed(2, {{1, 2}, {2, 1}})),
                  lpp::ClassError);
}

TEST_CASE("longest chain length") {
  CHECK(lpp::longest_chain_length(lpp_test::b2()) == 2);
  CHECK(lpp::longest_chain_length(lpp_test::complete_graph(4)) == 1);
  CHECK(lpp::longest_chain_length(
            lpp_test::cliques({{1, 2, 3}, {1, 4, 5}, {1, 6, 7}})) == 2);
  CHECK(lpp::longest_chain_length(
            lpp_test::cliques({{1, 2, 3}, {3, 4, 5}, {5, 6, 7}})) == 3);
  CHECK_THROWS_AS(lpp::longest_chain_length(lpp_test::path_graph(4)),
                  lpp::ClassError);
}

TEST_CASE("uniform block longest path") {
  CHECK(lpp::uniform_block_lp(lpp_test::b2()).length == 4);
  CHECK(lpp::uniform_block_lp(lpp_test::b2()).chain_length == 2);
  CHECK(lpp::uniform_block_lp(
            lpp_test::cliques({{1, 2, 3}, {3, 4, 5}, {5, 6, 7}})).length == 6);
  CHECK(lpp::uniform_block_lp(lpp_test::complete_graph(6)).length == 5);
  CHECK_THROWS_AS(
      lpp::uniform_block_lp(lpp_test::cliques({{1, 2, 3}, {3, 4, 5, 6}})),
      lpp::ClassError);
}

TEST_CASE("general block longest path") {
  CHECK(lpp::block_lp(lpp_test::cliques({{1, 2, 3}, {3, 4, 5, 6}})).length == 5);
  CHECK(lpp::block_lp(lpp_test::b2()).length == 4);
  CHECK(lpp::block_lp(lpp_test::cliques({{1, 2, 3}, {1, 4, 5}, {1, 6, 7}}))
            .length == 4);
  CHECK(lpp::block_lp(lpp_test::cliques({{1, 2, 3, 4}, {4, 5, 6, 7}})).length == 6);
  CHECK(lpp::block_lp(lpp_test::complete_graph(5)).length == 4);
  CHECK(lpp::block_lp(lpp_test::cliques({{1, 2, 3}, {3, 4, 5, 6}})).chain_length == 2);
  CHECK_THROWS_AS(lpp::block_lp(lpp_test::cycle_graph(5)), lpp::ClassError);
}

TEST_CASE("lengths match the oracle on random instances") {
  std::mt19937_64 eng(41);
  for (int round = 0; round < 25; ++round) {
    const Graph t = lpp::gen_tree(2 + static_cast<int>(eng() % 30), eng());
    CHECK(lpp::tree_diameter(t).length == lpp::oracle_longest(t).length);
    const Graph d = lpp::gen_dag(2 + static_cast<int>(eng() % 11), 0.4, eng());
    CHECK(lpp::dag_longest_length(d).length == lpp::oracle_longest(d).length);
    std::vector<int> orders(2 + eng() % 3);
    for (auto& o : orders) o = 3 + static_cast<int>(eng() % 3);
    const Graph b = lpp::gen_block_graph(orders, eng());
    CHECK(lpp::block_lp(b).length == lpp::oracle_longest(b).length);
  }
}

TEST_CASE("interval mode brackets the exact value") {
  std::mt19937_64 eng(43);
  for (int round = 0; round < 20; ++round) {
    const Graph t = lpp::gen_tree(3 + static_cast<int>(eng() % 40), eng());
    const int exact = lpp::tree_diameter(t).length;
    for (int eps : {2, 4, 8}) {
      const auto r = lpp::tree_diameter(t, eps);
      REQUIRE(r.interval.has_value());
      const auto [lo, hi] = *r.interval;
      CHECK(lo <= exact);
      CHECK(exact <= hi);
      CHECK(hi - lo <= eps);
    }
    const Graph d = lpp::gen_dag(3 + static_cast<int>(eng() % 11), 0.4, eng());
    const int dexact = lpp::dag_longest_length(d).length;
    const auto rd = lpp::dag_longest_length(d, 3);
    REQUIRE(rd.interval.has_value());
    CHECK(rd.interval->first <= dexact);
    CHECK(dexact <= rd.interval->second);
    CHECK(rd.interval->second - rd.interval->first <= 3);
  }
}

TEST_CASE("uniform interval mode stays within the requested width") {
  const Graph g = lpp_test::cliques({{1, 2, 3}, {3, 4, 5}, {5, 6, 7}});
  const int exact = lpp::uniform_block_lp(g).length;
  for (int eps : {2, 4, 6}) {
    const auto r = lpp::uniform_block_lp(g, eps);
    REQUIRE(r.interval.has_value());
    CHECK(r.interval->first <= exact);
    CHECK(exact <= r.interval->second);
    CHECK(r.interval->second - r.interval->first <= eps);
  }
}

TEST_CASE("stabilization thresholds are sharp") {
  std::mt19937_64 eng(47);
  for (int round = 0; round < 10; ++round) {
    const Graph t = lpp::gen_tree(2 + static_cast<int>(eng() % 20), eng());
    const lpp::BitMatrix a = lpp::adjacency_matrix(t);
    const int d = lpp::oracle_longest(t).length;
    for (int k = 1; k <= 2 * d; ++k) {
      const bool stable =
          lpp::bool_power(a, unsigned(k + 1)) == lpp::bool_power(a, unsigned(k - 1));
      REQUIRE(stable == (k >= d));
    }
  }
}
