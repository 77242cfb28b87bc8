#include "lpp/generators.hpp"

#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "lpp/errors.hpp"

namespace lpp {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n) + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

}  // namespace

Graph gen_tree(int n, std::uint64_t seed) {
  if (n < 1) throw Error("tree order must be positive");
  std::vector<Edge> edges;
  if (n == 2) {
    edges.push_back({1, 2});
  } else if (n > 2) {
    Rng rng(seed);
    std::vector<int> code(static_cast<std::size_t>(n) - 2);
    for (auto& c : code)
      c = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
    for (int c : code) ++degree[static_cast<std::size_t>(c)];
    std::set<int> leaves;
    for (int v = 1; v <= n; ++v)
      if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    for (int c : code) {
      const int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      edges.push_back({std::min(leaf, c), std::max(leaf, c)});
      if (--degree[static_cast<std::size_t>(c)] == 1) leaves.insert(c);
    }
    const int u = *leaves.begin();
    const int v = *std::next(leaves.begin());
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  return Graph::undirected(n, std::move(edges));
}

Graph gen_block_graph(const std::vector<int>& block_orders,
                      std::uint64_t seed) {
  if (block_orders.empty()) throw Error("at least one block is required");
  for (int m : block_orders)
    if (m < 3) throw Error("block order must be at least 3");
  Rng rng(seed);
  std::vector<Edge> edges;
  int next_id = 1;
  auto add_clique = [&](const std::vector<int>& verts) {
    for (std::size_t a = 0; a < verts.size(); ++a)
      for (std::size_t b = a + 1; b < verts.size(); ++b)
        edges.push_back({verts[a], verts[b]});
  };
  for (std::size_t b = 0; b < block_orders.size(); ++b) {
    std::vector<int> verts;
    if (b > 0)
      verts.push_back(
          1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(next_id - 1))));
    while (static_cast<int>(verts.size()) < block_orders[b])
      verts.push_back(next_id++);
    add_clique(verts);
  }
  return Graph::undirected(next_id - 1, std::move(edges));
}

Graph gen_dag(int n, double edge_prob, std::uint64_t seed) {
  if (n < 1) throw Error("dag order must be positive");
  if (edge_prob < 0.0 || edge_prob > 1.0)
    throw Error("edge probability must be in [0, 1]");
  Rng rng(seed);
  std::vector<int> topo(static_cast<std::size_t>(n));
  std::iota(topo.begin(), topo.end(), 1);
  for (std::size_t i = topo.size() - 1; i > 0; --i)
    std::swap(topo[i], topo[rng.below(i + 1)]);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < topo.size(); ++i)
    for (std::size_t j = i + 1; j < topo.size(); ++j)
      if (rng.unit() < edge_prob) edges.push_back({topo[i], topo[j]});
  Dsu dsu(n);
  for (auto [u, v] : edges) dsu.unite(u, v);
  for (std::size_t i = 0; i + 1 < topo.size(); ++i)
    if (dsu.unite(topo[i], topo[i + 1]))
      edges.push_back({topo[i], topo[i + 1]});
  return Graph::directed(n, std::move(edges));
}

}  // namespace lpp
