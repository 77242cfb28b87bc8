#ifndef LPP_GRAPH_HPP_
#define LPP_GRAPH_HPP_

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lpp/bitmat.hpp"
#include "lpp/errors.hpp"

namespace lpp {

using Edge = std::pair<int, int>;

// Simple finite graph over 1-based vertex ids. Undirected edges are stored
// with u < v; edge lists and adjacency lists are sorted ascending, so equal
// graphs serialize identically. Connectivity (weak connectivity for digraphs)
// is enforced at construction unless explicitly disabled.
class Graph {
 public:
  static Graph undirected(int n, std::vector<Edge> edges,
                          bool require_connected = true);
  static Graph directed(int n, std::vector<Edge> edges,
                        bool require_connected = true);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool is_directed() const { return directed_; }

  const std::vector<Edge>& edges() const { return edges_; }

  // Out-neighbors when directed, neighbors otherwise. Sorted ascending.
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  const std::vector<int>& in_neighbors(int v) const {
    return directed_ ? radj_[v] : adj_[v];
  }
  bool has_edge(int u, int v) const;

 private:
  Graph() = default;
  bool connected_ignoring_direction() const;

  int n_ = 0;
  bool directed_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> radj_;  // populated for digraphs only
};

enum class GraphClass {
  Tree,
  Dag,
  UniformBlockGraph,
  BlockGraph,
  CompleteGraph,
  Other,
};

std::string to_string(GraphClass c);

// Blocks are the maximal 2-connected subgraphs (single edges count);
// cut vertices are the vertices lying in more than one block.
struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // sorted by minimum vertex id
  std::vector<int> cut_vertices;         // ascending
  bool block_graph_valid = false;  // every block a clique of order >= 3
  int omega = 0;                   // largest block order, 0 when no blocks
  bool uniform = false;            // all block orders equal
};

// Text format:
//   c free-form comment
//   p lpp <u|d> <n> <m>
//   e <u> <v>          (exactly m lines)
// The writer emits LF line endings and edges sorted ascending, so
// parse-then-write is byte identity on its own output.
Graph parse_graph(std::istream& in, bool require_connected = true);
Graph parse_graph(const std::string& text, bool require_connected = true);
void write_graph(std::ostream& out, const Graph& g);
std::string write_graph(const Graph& g);

BitMatrix adjacency_matrix(const Graph& g);
BlockDecomposition block_decomposition(const Graph& g);
GraphClass classify(const Graph& g);

// Distances from source along out-edges; unreachable vertices are absent.
std::map<int, int> bfs_distances(const Graph& g, int source);

}  // namespace lpp

#endif  // LPP_GRAPH_HPP_
