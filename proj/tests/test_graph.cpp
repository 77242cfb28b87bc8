#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <queue>
#include <random>
#include <sstream>

#include "lpp/errors.hpp"
#include "lpp/generators.hpp"
#include "lpp/graph.hpp"
#include "test_util.hpp"

using lpp::Graph;
using lpp::GraphClass;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return lpp::parse_graph(in);
}

int parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    lpp::parse_graph(in);
  } catch (const lpp::ParseError& e) {
    return e.line;
  }
  return -1;
}

// Quadratic articulation-point finder: v is an articulation point iff
// deleting it disconnects the rest.
std::vector<int> articulation_by_deletion(const Graph& g) {
  const int n = g.order();
  std::vector<int> out;
  for (int skip = 1; skip <= n; ++skip) {
    if (n - 1 <= 1) continue;
    int start = skip == 1 ? 2 : 1;
    std::vector<char> vis(n + 1, 0);
    vis[skip] = 1;  // pretend deleted
    std::queue<int> q;
    q.push(start);
    vis[start] = 1;
    int seen = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : g.neighbors(v))
        if (!vis[w]) {
          vis[w] = 1;
          ++seen;
          q.push(w);
        }
    }
    if (seen != n - 1) out.push_back(skip);
  }
  return out;
}

// Random connected undirected graph: a random tree plus extra edges.
Graph random_connected(int n, int extra, std::mt19937_64& eng) {
  const Graph tree = lpp::gen_tree(n, eng());
  auto edges = tree.edges();
  std::set<lpp::Edge> have(edges.begin(), edges.end());
  for (int t = 0; t < extra; ++t) {
    const int u = 1 + static_cast<int>(eng() % n);
    const int v = 1 + static_cast<int>(eng() % n);
    if (u == v) continue;
    const lpp::Edge e{std::min(u, v), std::max(u, v)};
    if (have.insert(e).second) edges.push_back(e);
  }
  return Graph::undirected(n, std::move(edges));
}

}  // namespace

TEST_CASE("parse undirected path") {
  const Graph g = parse("p lpp u 3 2\ne 1 2\ne 2 3\n");
  CHECK(g.order() == 3);
  CHECK(g.size() == 2);
  CHECK_FALSE(g.is_directed());
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(1, 3));
}

TEST_CASE("parse directed chain") {
  const Graph g = parse("p lpp d 3 2\ne 1 2\ne 2 3\n");
  CHECK(g.is_directed());
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(2, 1));
  CHECK(g.in_neighbors(2) == std::vector<int>{1});
}

TEST_CASE("comments and blank lines are skipped") {
  const Graph g = parse("c hello\n\np lpp u 2 1\nc mid\ne 1 2\n");
  CHECK(g.order() == 2);
}

TEST_CASE("parse errors carry the offending line") {
  CHECK(parse_error_line("p lpp u 2 1\ne 1 1\n") == 2);        // self-loop
  CHECK(parse_error_line("p lpp u 3 2\ne 1 2\ne 2 1\n") == 3); // duplicate
  CHECK(parse_error_line("p lpp u 2 1\ne 1 5\n") == 2);        // out of range
  CHECK(parse_error_line("p lpp x 2 1\ne 1 2\n") == 1);        // bad header
  CHECK(parse_error_line("p lpp u 2 1\nz 1 2\n") == 2);        // bad line
  CHECK(parse_error_line("p lpp u 2 0\ne 1 2\n") == 2);        // extra edge
}

TEST_CASE("missing edges and disconnection are parse errors") {
  CHECK_THROWS_AS(parse("p lpp u 3 2\ne 1 2\n"), lpp::ParseError);
  CHECK_THROWS_AS(parse("p lpp u 4 2\ne 1 2\ne 3 4\n"), lpp::ParseError);
  CHECK_THROWS_AS(parse(""), lpp::ParseError);
}

TEST_CASE("writer round-trips byte for byte") {
  const std::string text = "p lpp u 5 6\ne 1 2\ne 1 3\ne 2 3\ne 3 4\ne 3 5\ne 4 5\n";
  std::ostringstream out;
  lpp::write_graph(out, parse(text));
  CHECK(out.str() == text);
}

TEST_CASE("writer sorts edges ascending") {
  const Graph g = Graph::undirected(3, {{3, 2}, {2, 1}});
  std::ostringstream out;
  lpp::write_graph(out, g);
  CHECK(out.str() == "p lpp u 3 2\ne 1 2\ne 2 3\n");
}

TEST_CASE("adjacency matrix orientation") {
  const lpp::BitMatrix u = lpp::adjacency_matrix(lpp_test::path_graph(3));
  CHECK(u.get(0, 1));
  CHECK(u.get(1, 0));
  const lpp::BitMatrix d = lpp::adjacency_matrix(lpp_test::dag_chain3());
  CHECK(d.get(0, 1));
  CHECK_FALSE(d.get(1, 0));
}

TEST_CASE("block decomposition of two triangles") {
  const auto bd = lpp::block_decomposition(lpp_test::b2());
  REQUIRE(bd.blocks.size() == 2);
  CHECK(bd.blocks[0] == std::vector<int>{1, 2, 3});
  CHECK(bd.blocks[1] == std::vector<int>{3, 4, 5});
  CHECK(bd.cut_vertices == std::vector<int>{3});
  CHECK(bd.block_graph_valid);
  CHECK(bd.omega == 3);
  CHECK(bd.uniform);
}

TEST_CASE("block decomposition of a path") {
  const auto bd = lpp::block_decomposition(lpp_test::path_graph(3));
  REQUIRE(bd.blocks.size() == 2);
  CHECK(bd.blocks[0] == std::vector<int>{1, 2});
  CHECK(bd.blocks[1] == std::vector<int>{2, 3});
  CHECK_FALSE(bd.block_graph_valid);
  CHECK(bd.cut_vertices == std::vector<int>{2});
}

TEST_CASE("block decomposition of a clique") {
  const auto bd = lpp::block_decomposition(lpp_test::complete_graph(4));
  REQUIRE(bd.blocks.size() == 1);
  CHECK(bd.blocks[0] == std::vector<int>{1, 2, 3, 4});
  CHECK(bd.cut_vertices.empty());
  CHECK(bd.block_graph_valid);
}

TEST_CASE("block decomposition rejects digraphs") {
  CHECK_THROWS_AS(lpp::block_decomposition(lpp_test::dag_chain3()),
                  lpp::ClassError);
}

TEST_CASE("classification table") {
  CHECK(lpp::classify(lpp_test::path_graph(5)) == GraphClass::Tree);
  CHECK(lpp::classify(lpp_test::path_graph(1)) == GraphClass::Tree);
  CHECK(lpp::classify(lpp_test::path_graph(2)) == GraphClass::Tree);
  CHECK(lpp::classify(lpp_test::b2()) == GraphClass::UniformBlockGraph);
  CHECK(lpp::classify(lpp_test::cliques({{1, 2, 3}, {3, 4, 5, 6}})) ==
        GraphClass::BlockGraph);
  CHECK(lpp::classify(lpp_test::complete_graph(3)) == GraphClass::CompleteGraph);
  CHECK(lpp::classify(lpp_test::complete_graph(7)) == GraphClass::CompleteGraph);
  CHECK(lpp::classify(lpp_test::cycle_graph(4)) == GraphClass::Other);
  CHECK(lpp::classify(lpp_test::dag_diamond()) == GraphClass::Dag);
  // directed 2-cycle
  CHECK(lpp::classify(Graph::directed(2, {{1, 2}, {2, 1}})) == GraphClass::Other);
  // two triangles joined by a bridge: the bridge is an order-2 block
  CHECK(lpp::classify(lpp_test::cliques({{1, 2, 3}, {4, 5, 6}, {3, 4}})) ==
        GraphClass::Other);
}

TEST_CASE("bfs distances") {
  const auto d = lpp::bfs_distances(lpp_test::path_graph(4), 2);
  CHECK(d.at(1) == 1);
  CHECK(d.at(2) == 0);
  CHECK(d.at(4) == 2);
  const auto dd = lpp::bfs_distances(lpp_test::dag_chain3(), 3);
  CHECK(dd.size() == 1);
  CHECK(dd.at(3) == 0);
  CHECK_THROWS_AS(lpp::bfs_distances(lpp_test::path_graph(4), 9), lpp::Error);
}

TEST_CASE("every edge lies in exactly one block") {
  std::mt19937_64 eng(23);
  for (int round = 0; round < 100; ++round) {
    const int n = 2 + static_cast<int>(eng() % 23);
    const Graph g = random_connected(n, static_cast<int>(eng() % 12), eng);
    const auto bd = lpp::block_decomposition(g);
    for (auto [u, v] : g.edges()) {
      int owners = 0;
      for (const auto& b : bd.blocks) {
        const bool has_u = std::binary_search(b.begin(), b.end(), u);
        const bool has_v = std::binary_search(b.begin(), b.end(), v);
        if (has_u && has_v) ++owners;
      }
      REQUIRE(owners == 1);
    }
  }
}

TEST_CASE("cut vertices match the deletion oracle") {
  std::mt19937_64 eng(29);
  for (int round = 0; round < 100; ++round) {
    const int n = 2 + static_cast<int>(eng() % 23);
    const Graph g = random_connected(n, static_cast<int>(eng() % 12), eng);
    REQUIRE(lpp::block_decomposition(g).cut_vertices ==
            articulation_by_deletion(g));
  }
}

TEST_CASE("trees decompose into n-1 edge blocks") {
  std::mt19937_64 eng(31);
  for (int round = 0; round < 50; ++round) {
    const int n = 1 + static_cast<int>(eng() % 32);
    const Graph g = lpp::gen_tree(n, eng());
    REQUIRE(lpp::classify(g) == GraphClass::Tree);
    const auto bd = lpp::block_decomposition(g);
    REQUIRE(static_cast<int>(bd.blocks.size()) == n - 1);
    for (const auto& b : bd.blocks) REQUIRE(b.size() == 2);
  }
}

TEST_CASE("adjacency matrix symmetry tracks direction") {
  std::mt19937_64 eng(37);
  for (int round = 0; round < 30; ++round) {
    const int n = 2 + static_cast<int>(eng() % 14);
    const Graph g = round % 2 ? random_connected(n, static_cast<int>(eng() % 8), eng)
                              : lpp::gen_dag(n, 0.4, eng());
    const lpp::BitMatrix a = lpp::adjacency_matrix(g);
    bool symmetric = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a.get(i, j) != a.get(j, i)) symmetric = false;
    if (g.is_directed())
      CHECK((!symmetric || g.size() == 0));
    else
      CHECK(symmetric);
  }
}
