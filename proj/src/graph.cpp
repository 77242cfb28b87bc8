#include "lpp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

#include "lpp/errors.hpp"

namespace lpp {

namespace {

bool parse_long(const std::string& tok, long& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

void check_edge(int n, int u, int v, int line_no) {
  if (u < 1 || u > n || v < 1 || v > n)
    throw ParseError("vertex id out of range", line_no);
  if (u == v) throw ParseError("self-loop", line_no);
}

bool induces_clique(const Graph& g, const std::vector<int>& verts) {
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      if (!g.has_edge(verts[a], verts[b])) return false;
  return true;
}

bool directed_acyclic(const Graph& g) {
  const int n = g.order();
  std::vector<int> indeg(n + 1, 0);
  for (auto [u, v] : g.edges()) ++indeg[v];
  std::queue<int> q;
  for (int v = 1; v <= n; ++v)
    if (indeg[v] == 0) q.push(v);
  int seen = 0;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    ++seen;
    for (int w : g.neighbors(v))
      if (--indeg[w] == 0) q.push(w);
  }
  return seen == n;
}

}  // namespace

Graph Graph::undirected(int n, std::vector<Edge> edges, bool require_connected) {
  if (n < 1) throw ParseError("vertex count must be at least 1");
  std::set<Edge> seen;
  for (auto& [u, v] : edges) {
    check_edge(n, u, v, 0);
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw ParseError("duplicate edge");
  }
  Graph g;
  g.n_ = n;
  g.directed_ = false;
  g.edges_.assign(seen.begin(), seen.end());
  g.adj_.assign(n + 1, {});
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());
  if (require_connected && !g.connected_ignoring_direction())
    throw ParseError("graph is not connected");
  return g;
}

Graph Graph::directed(int n, std::vector<Edge> edges, bool require_connected) {
  if (n < 1) throw ParseError("vertex count must be at least 1");
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    check_edge(n, u, v, 0);
    if (!seen.insert({u, v}).second) throw ParseError("duplicate edge");
  }
  Graph g;
  g.n_ = n;
  g.directed_ = true;
  g.edges_.assign(seen.begin(), seen.end());
  g.adj_.assign(n + 1, {});
  g.radj_.assign(n + 1, {});
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.radj_[v].push_back(u);
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());
  for (auto& a : g.radj_) std::sort(a.begin(), a.end());
  if (require_connected && !g.connected_ignoring_direction())
    throw ParseError("graph is not weakly connected");
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

bool Graph::connected_ignoring_direction() const {
  std::vector<char> vis(n_ + 1, 0);
  std::queue<int> q;
  q.push(1);
  vis[1] = 1;
  int seen = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    auto visit = [&](int w) {
      if (!vis[w]) {
        vis[w] = 1;
        ++seen;
        q.push(w);
      }
    };
    for (int w : adj_[v]) visit(w);
    if (directed_)
      for (int w : radj_[v]) visit(w);
  }
  return seen == n_;
}

Graph parse_graph(std::istream& in, bool require_connected) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  bool directed = false;
  long n = 0, m = 0;
  std::vector<Edge> edges;
  std::set<Edge> dedupe;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == 'c' && (line.size() == 1 || line[1] == ' ')) continue;
    const auto toks = split_tokens(line);
    if (!have_header) {
      if (toks.size() != 5 || toks[0] != "p" || toks[1] != "lpp" ||
          (toks[2] != "u" && toks[2] != "d"))
        throw ParseError("malformed header", line_no);
      if (!parse_long(toks[3], n) || !parse_long(toks[4], m) || n < 1 || m < 0)
        throw ParseError("malformed header", line_no);
      directed = toks[2] == "d";
      have_header = true;
      continue;
    }
    if (toks[0] != "e") throw ParseError("malformed line", line_no);
    if (toks.size() != 3) throw ParseError("malformed edge line", line_no);
    long u = 0, v = 0;
    if (!parse_long(toks[1], u) || !parse_long(toks[2], v))
      throw ParseError("malformed edge line", line_no);
    if (static_cast<long>(edges.size()) == m)
      throw ParseError("more edge lines than declared", line_no);
    check_edge(static_cast<int>(n), static_cast<int>(u), static_cast<int>(v),
               line_no);
    Edge key{static_cast<int>(u), static_cast<int>(v)};
    if (!directed && key.first > key.second) std::swap(key.first, key.second);
    if (!dedupe.insert(key).second) throw ParseError("duplicate edge", line_no);
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  if (!have_header) throw ParseError("missing header");
  if (static_cast<long>(edges.size()) < m)
    throw ParseError("expected " + std::to_string(m) + " edge lines, found " +
                     std::to_string(edges.size()));
  return directed ? Graph::directed(static_cast<int>(n), std::move(edges),
                                    require_connected)
                  : Graph::undirected(static_cast<int>(n), std::move(edges),
                                      require_connected);
}

Graph parse_graph(const std::string& text, bool require_connected) {
  std::istringstream in(text);
  return parse_graph(in, require_connected);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p lpp " << (g.is_directed() ? 'd' : 'u') << ' ' << g.order() << ' '
      << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

BitMatrix adjacency_matrix(const Graph& g) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  BitMatrix a(n);
  for (auto [u, v] : g.edges()) {
    a.set(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
    if (!g.is_directed())
      a.set(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(u - 1));
  }
  return a;
}

BlockDecomposition block_decomposition(const Graph& g) {
  if (g.is_directed())
    throw ClassError("block decomposition requires an undirected graph");
  const int n = g.order();
  std::vector<int> disc(n + 1, 0), low(n + 1, 0), parent(n + 1, 0);
  std::vector<char> cut(n + 1, 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<int>> blocks;
  int timer = 0;

  struct Frame {
    int v;
    std::size_t next;
  };

  auto pop_block = [&](int u, int w) {
    // pop edges down to and including the tree edge (u, w)
    std::set<int> verts;
    while (!edge_stack.empty()) {
      const Edge e = edge_stack.back();
      edge_stack.pop_back();
      verts.insert(e.first);
      verts.insert(e.second);
      if (e.first == u && e.second == w) break;
    }
    blocks.emplace_back(verts.begin(), verts.end());
  };

  for (int root = 1; root <= n; ++root) {
    if (disc[root]) continue;
    disc[root] = low[root] = ++timer;
    parent[root] = 0;
    int root_children = 0;
    std::vector<Frame> stack{{root, 0}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& adj = g.neighbors(f.v);
      if (f.next < adj.size()) {
        const int w = adj[f.next++];
        if (!disc[w]) {
          if (f.v == root) ++root_children;
          edge_stack.push_back({f.v, w});
          disc[w] = low[w] = ++timer;
          parent[w] = f.v;
          stack.push_back({w, 0});
        } else if (w != parent[f.v] && disc[w] < disc[f.v]) {
          edge_stack.push_back({f.v, w});
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const int w = f.v;
        stack.pop_back();
        if (stack.empty()) continue;
        const int u = stack.back().v;
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          if (u != root) cut[u] = 1;
          pop_block(u, w);
        }
      }
    }
    if (root_children >= 2) cut[root] = 1;
  }

  std::sort(blocks.begin(), blocks.end());
  BlockDecomposition bd;
  bd.blocks = std::move(blocks);
  for (int v = 1; v <= n; ++v)
    if (cut[v]) bd.cut_vertices.push_back(v);
  bd.block_graph_valid = !bd.blocks.empty();
  bd.uniform = !bd.blocks.empty();
  for (const auto& b : bd.blocks) {
    bd.omega = std::max(bd.omega, static_cast<int>(b.size()));
    if (b.size() < 3 || !induces_clique(g, b)) bd.block_graph_valid = false;
    if (b.size() != bd.blocks.front().size()) bd.uniform = false;
  }
  return bd;
}

GraphClass classify(const Graph& g) {
  // Connectivity is re-checked here because construction may have skipped it.
  {
    std::vector<char> vis(g.order() + 1, 0);
    std::queue<int> q;
    q.push(1);
    vis[1] = 1;
    int seen = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      auto visit = [&](int w) {
        if (!vis[w]) {
          vis[w] = 1;
          ++seen;
          q.push(w);
        }
      };
      for (int w : g.neighbors(v)) visit(w);
      if (g.is_directed())
        for (int w : g.in_neighbors(v)) visit(w);
    }
    if (seen != g.order()) return GraphClass::Other;
  }
  if (g.is_directed())
    return directed_acyclic(g) ? GraphClass::Dag : GraphClass::Other;
  const int n = g.order();
  if (g.size() == n - 1) return GraphClass::Tree;
  if (g.size() == n * (n - 1) / 2) return GraphClass::CompleteGraph;
  const BlockDecomposition bd = block_decomposition(g);
  if (bd.block_graph_valid && bd.blocks.size() >= 2)
    return bd.uniform ? GraphClass::UniformBlockGraph : GraphClass::BlockGraph;
  return GraphClass::Other;
}

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Tree:
      return "tree";
    case GraphClass::Dag:
      return "dag";
    case GraphClass::UniformBlockGraph:
      return "uniform-block-graph";
    case GraphClass::BlockGraph:
      return "block-graph";
    case GraphClass::CompleteGraph:
      return "complete-graph";
    case GraphClass::Other:
      return "other";
  }
  return "other";
}

std::map<int, int> bfs_distances(const Graph& g, int source) {
  if (source < 1 || source > g.order())
    throw Error("bfs source out of range");
  std::map<int, int> dist;
  dist[source] = 0;
  std::queue<int> q;
  q.push(source);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (!dist.count(w)) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

}  // namespace lpp
