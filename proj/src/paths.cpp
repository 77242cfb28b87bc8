#include "lpp/paths.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "lpp/errors.hpp"
#include "lpp/lpp_core.hpp"

namespace lpp {

namespace {

bool is_block_class(GraphClass c) {
  return c == GraphClass::BlockGraph || c == GraphClass::UniformBlockGraph;
}

bool block_like(GraphClass c) {
  return is_block_class(c) || c == GraphClass::CompleteGraph;
}

// beta(A^0 .. A^k) by successive products.
std::vector<BitMatrix> power_table(const BitMatrix& a, int k) {
  std::vector<BitMatrix> pw;
  pw.reserve(static_cast<std::size_t>(k) + 1);
  pw.push_back(BitMatrix::identity(a.dim()));
  for (int t = 1; t <= k; ++t) pw.push_back(bool_product(pw.back(), a));
  return pw;
}

// Entry of beta(A^t) with negative exponents reading as the zero matrix.
int power_entry(const std::vector<BitMatrix>& pw, int t, int i, int j) {
  if (t < 0) return 0;
  return pw[static_cast<std::size_t>(t)].get(unsigned(i), unsigned(j)) ? 1 : 0;
}

std::vector<int> shortest_route(const Graph& g, int from, int to) {
  // Plain BFS with parent links. Block graphs are geodetic, so the route
  // found is the unique shortest one.
  std::vector<int> parent(static_cast<std::size_t>(g.order()) + 1, 0);
  std::queue<int> q;
  q.push(from);
  parent[static_cast<std::size_t>(from)] = from;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    if (v == to) break;
    for (int w : g.neighbors(v)) {
      if (!parent[static_cast<std::size_t>(w)]) {
        parent[static_cast<std::size_t>(w)] = v;
        q.push(w);
      }
    }
  }
  std::vector<int> route;
  for (int v = to;; v = parent[static_cast<std::size_t>(v)]) {
    route.push_back(v);
    if (v == from) break;
  }
  std::reverse(route.begin(), route.end());
  return route;
}

// The unique block containing edge {u, v}: their common neighbors plus the
// endpoints. A common neighbor outside the block would close a cycle across
// two biconnected components, which cannot happen.
std::vector<int> edge_block(const Graph& g, int u, int v) {
  const auto& nu = g.neighbors(u);
  const auto& nv = g.neighbors(v);
  std::vector<int> block;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                        std::back_inserter(block));
  block.push_back(u);
  block.push_back(v);
  std::sort(block.begin(), block.end());
  return block;
}

Chain chain_for_pair(const Graph& g, int alpha, int beta) {
  const std::vector<int> route = shortest_route(g, alpha, beta);
  Chain chain;
  for (std::size_t i = 0; i + 1 < route.size(); ++i)
    chain.blocks.push_back(edge_block(g, route[i], route[i + 1]));
  chain.joints.assign(route.begin() + 1, route.end() - 1);
  return chain;
}

Chain canonical_chain(Chain c) {
  Chain rev;
  rev.blocks.assign(c.blocks.rbegin(), c.blocks.rend());
  rev.joints.assign(c.joints.rbegin(), c.joints.rend());
  return rev.blocks < c.blocks ? rev : c;
}

int chain_weight(const Chain& c) {
  int w = 0;
  for (const auto& b : c.blocks) w += static_cast<int>(b.size()) - 1;
  return w;
}

// One chain per unordered pair of leaf blocks. The shortest route between
// non-cut representatives crosses each block of the block path with exactly
// one edge (blocks are cliques), so the edge-to-block mapping recovers the
// whole chain. Every longest path lives on one of these: extending a chain
// through to leaf blocks only ever adds length.
std::vector<Chain> maximal_chains(const Graph& g) {
  const BlockDecomposition dec = block_decomposition(g);
  const std::set<int> cuts(dec.cut_vertices.begin(), dec.cut_vertices.end());
  std::vector<int> reps;  // least non-cut vertex of each leaf block
  for (const auto& blk : dec.blocks) {
    int shared = 0;
    for (int v : blk)
      if (cuts.count(v)) ++shared;
    if (shared > 1) continue;
    for (int v : blk) {
      if (!cuts.count(v)) {
        reps.push_back(v);
        break;
      }
    }
  }
  std::vector<Chain> out;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      out.push_back(chain_for_pair(g, reps[i], reps[j]));
  return out;
}

Chain whole_graph_chain(const Graph& g) {
  Chain whole;
  whole.blocks.emplace_back(static_cast<std::size_t>(g.order()));
  std::iota(whole.blocks.front().begin(), whole.blocks.front().end(), 1);
  return whole;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw CapacityError("longest-path count overflows 64 bits");
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw CapacityError("longest-path count overflows 64 bits");
  return out;
}

std::uint64_t factorial(std::size_t k) {
  std::uint64_t f = 1;
  for (std::size_t t = 2; t <= k; ++t) f = checked_mul(f, t);
  return f;
}

}  // namespace

std::set<std::pair<int, int>> exact_distance_pairs(const Graph& g,
                                                   GraphClass cls, int n) {
  if (n < 1) throw Error("path length must be at least 1");
  const GraphClass actual = classify(g);
  const bool both_block = block_like(cls) && block_like(actual);
  if (cls != actual && !both_block)
    throw ClassError("graph class mismatch: expected " + to_string(cls) +
                     ", got " + to_string(actual));
  const BitMatrix a = adjacency_matrix(g);
  const int order = g.order();
  std::set<std::pair<int, int>> out;
  if (cls == GraphClass::Dag) {
    const BitMatrix p = bool_power(a, unsigned(n));
    for (int i = 0; i < order; ++i)
      for (int j = 0; j < order; ++j)
        if (p.get(unsigned(i), unsigned(j))) out.insert({i + 1, j + 1});
    return out;
  }
  BitMatrix hi = bool_power(a, unsigned(n));
  BitMatrix lo;
  if (cls == GraphClass::Tree)
    lo = n >= 2 ? bool_power(a, unsigned(n - 2))
                : BitMatrix(static_cast<std::size_t>(order));
  else if (both_block)
    lo = bool_power(a, unsigned(n - 1));
  else
    throw ClassError("exact_distance_pairs supports trees, DAGs and block graphs");
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j)
      if (hi.get(unsigned(i), unsigned(j)) && !lo.get(unsigned(i), unsigned(j)))
        out.insert({i + 1, j + 1});
  return out;
}

Chain generate_longest_chain(const Graph& g) {
  const GraphClass c = classify(g);
  if (c == GraphClass::CompleteGraph) return whole_graph_chain(g);
  if (!is_block_class(c))
    throw ClassError("generate_longest_chain requires a block graph");
  // Heaviest chain wins; the block count and the block sequence break ties
  // so the choice is deterministic.
  Chain best;
  int best_w = -1;
  for (Chain& raw : maximal_chains(g)) {
    Chain ch = canonical_chain(std::move(raw));
    const int w = chain_weight(ch);
    const bool better =
        w > best_w ||
        (w == best_w && (ch.blocks.size() > best.blocks.size() ||
                         (ch.blocks.size() == best.blocks.size() &&
                          ch.blocks < best.blocks)));
    if (better) {
      best = std::move(ch);
      best_w = w;
    }
  }
  return best;
}

std::vector<Chain> generate_all_longest_chains(const Graph& g) {
  const GraphClass c = classify(g);
  if (c == GraphClass::CompleteGraph) return {whole_graph_chain(g)};
  if (!is_block_class(c))
    throw ClassError("generate_all_longest_chains requires a block graph");
  std::vector<Chain> all = maximal_chains(g);
  int best_w = 0;
  for (const Chain& ch : all) best_w = std::max(best_w, chain_weight(ch));
  std::map<std::vector<std::vector<int>>, Chain> uniq;
  for (Chain& raw : all) {
    if (chain_weight(raw) != best_w) continue;
    Chain ch = canonical_chain(std::move(raw));
    uniq.emplace(ch.blocks, std::move(ch));
  }
  std::vector<Chain> out;
  out.reserve(uniq.size());
  for (auto& [key, ch] : uniq) out.push_back(std::move(ch));
  return out;
}

PathSet tree_all_longest_paths(const Graph& g) {
  if (classify(g) != GraphClass::Tree)
    throw ClassError("tree_all_longest_paths requires a tree");
  const int d = tree_diameter(g).length;
  std::set<Path> found;
  if (d == 0) {
    found.insert({1});
  } else {
    const BitMatrix a = adjacency_matrix(g);
    const auto pw = power_table(a, d);
    // 1 iff the unique i..k path has length exactly t.
    auto at_exact = [&](int t, int i, int k) {
      return power_entry(pw, t, i, k) - power_entry(pw, t - 2, i, k) == 1;
    };
    const int order = g.order();
    for (int i = 1; i <= order; ++i) {
      for (int j = i + 1; j <= order; ++j) {
        if (!at_exact(d, i - 1, j - 1)) continue;
        // Walk backwards from j; each step has exactly one neighbor at the
        // right remaining distance from i.
        Path rev{j};
        int cur = j;
        for (int t = d; t >= 1; --t) {
          int pred = 0, hits = 0;
          for (int k : g.neighbors(cur)) {
            if (at_exact(t - 1, i - 1, k - 1)) {
              pred = k;
              ++hits;
            }
          }
          if (hits != 1)
            throw ConsistencyError(
                "tree path reconstruction expects a unique predecessor, saw " +
                std::to_string(hits));
          cur = pred;
          rev.push_back(cur);
        }
        found.insert(canonical_path(Path(rev.rbegin(), rev.rend()), false));
      }
    }
  }
  return PathSet{{found.begin(), found.end()}};
}

PathSet dag_all_longest_paths(const Graph& g) {
  if (classify(g) != GraphClass::Dag)
    throw ClassError("dag_all_longest_paths requires a directed acyclic graph");
  const int d = dag_longest_length(g).length;
  std::set<Path> found;
  if (d == 0) {
    found.insert({1});
  } else {
    const BitMatrix a = adjacency_matrix(g);
    const auto pw = power_table(a, d);
    const int order = g.order();
    for (int i = 1; i <= order; ++i) {
      for (int j = 1; j <= order; ++j) {
        if (i == j || !pw[static_cast<std::size_t>(d)].get(unsigned(i - 1), unsigned(j - 1)))
          continue;
        // Branching backward walk; any i->k prefix concatenated with the
        // fixed suffix stays vertex-disjoint in a DAG.
        Path rev{j};
        auto extend = [&](auto&& self, int cur, int t) -> void {
          if (t == 0) {
            found.insert(Path(rev.rbegin(), rev.rend()));
            return;
          }
          for (int k : g.in_neighbors(cur)) {
            if (power_entry(pw, t - 1, i - 1, k - 1) == 1) {
              rev.push_back(k);
              self(self, k, t - 1);
              rev.pop_back();
            }
          }
        };
        extend(extend, j, d);
      }
    }
  }
  return PathSet{{found.begin(), found.end()}};
}

PathSet block_all_longest_paths(const Graph& g, std::size_t cap) {
  const GraphClass c = classify(g);
  if (!is_block_class(c) && c != GraphClass::CompleteGraph)
    throw ClassError("block_all_longest_paths requires a block graph");
  const std::uint64_t expected = count_block_longest_paths(g);
  if (expected > cap)
    throw CapacityError("longest-path count " + std::to_string(expected) +
                        " exceeds cap " + std::to_string(cap));
  std::set<Path> found;
  if (c == GraphClass::CompleteGraph) {
    const int order = g.order();
    Path perm(static_cast<std::size_t>(order));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      if (order == 1 || perm.front() < perm.back()) found.insert(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    for (const Chain& chain : generate_all_longest_chains(g)) {
      const std::size_t len = chain.blocks.size();
      // Free vertices per block: everything but the joints the path must
      // pass through. End blocks keep one joint out, middle blocks two.
      std::vector<std::vector<int>> free_verts(len);
      for (std::size_t b = 0; b < len; ++b) {
        for (int v : chain.blocks[b]) {
          const bool entry = b > 0 && v == chain.joints[b - 1];
          const bool exit = b + 1 < len && v == chain.joints[b];
          if (!entry && !exit) free_verts[b].push_back(v);
        }
      }
      Path cur;
      auto emit = [&](auto&& self, std::size_t b) -> void {
        if (b == len) {
          found.insert(canonical_path(cur, false));
          return;
        }
        std::vector<int> f = free_verts[b];
        do {
          const std::size_t mark = cur.size();
          cur.insert(cur.end(), f.begin(), f.end());
          if (b + 1 < len) cur.push_back(chain.joints[b]);
          self(self, b + 1);
          cur.resize(mark);
        } while (std::next_permutation(f.begin(), f.end()));
      };
      emit(emit, 0);
    }
  }
  PathSet ps{{found.begin(), found.end()}};
  if (ps.count() != expected)
    throw ConsistencyError("enumerated " + std::to_string(ps.count()) +
                           " paths but closed form predicts " +
                           std::to_string(expected));
  return ps;
}

std::uint64_t count_block_longest_paths(const Graph& g) {
  const GraphClass c = classify(g);
  if (!is_block_class(c) && c != GraphClass::CompleteGraph)
    throw ClassError("count_block_longest_paths requires a block graph");
  if (c == GraphClass::CompleteGraph) {
    const std::size_t order = static_cast<std::size_t>(g.order());
    return order <= 2 ? 1 : factorial(order) / 2;
  }
  std::uint64_t total = 0;
  for (const Chain& chain : generate_all_longest_chains(g)) {
    // End blocks contribute (order - 1)! orderings, middle blocks
    // (order - 2)!: the forced joints eat one slot at each seam.
    std::uint64_t prod = factorial(chain.blocks.front().size() - 1);
    prod = checked_mul(prod, factorial(chain.blocks.back().size() - 1));
    for (std::size_t b = 1; b + 1 < chain.blocks.size(); ++b)
      prod = checked_mul(prod, factorial(chain.blocks[b].size() - 2));
    total = checked_add(total, prod);
  }
  return total;
}

}  // namespace lpp
