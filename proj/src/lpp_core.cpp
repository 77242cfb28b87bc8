#include "lpp/lpp_core.hpp"

#include "lpp/paths.hpp"

namespace lpp {

namespace {

bool is_block_class(GraphClass c) {
  return c == GraphClass::BlockGraph || c == GraphClass::UniformBlockGraph;
}

SearchResult chain_search(const Graph& g, int epsilon) {
  const BitMatrix a = adjacency_matrix(g);
  auto saturated = [&](int m) { return is_all_ones(bool_power(a, unsigned(m))); };
  return binary_search_min_true(1, g.size(), saturated, epsilon);
}

}  // namespace

LppResult tree_diameter(const Graph& g, int epsilon) {
  if (classify(g) != GraphClass::Tree)
    throw ClassError("tree_diameter requires a tree");
  LppResult res;
  res.graph_class = GraphClass::Tree;
  if (g.order() == 1) {
    if (epsilon > 1) res.interval = {{0, 0}};
    return res;
  }
  const BitMatrix a = adjacency_matrix(g);
  // The power sequence stabilizes (per parity) once the exponent passes the
  // diameter, so the first m with beta(A^{m+1}) = beta(A^{m-1}) is it.
  auto stable = [&](int m) {
    return bool_power(a, unsigned(m + 1)) == bool_power(a, unsigned(m - 1));
  };
  const SearchResult s = binary_search_min_true(1, g.size(), stable, epsilon);
  res.length = s.threshold;
  res.interval = s.interval;
  return res;
}

LppResult dag_longest_length(const Graph& g, int epsilon) {
  if (classify(g) != GraphClass::Dag)
    throw ClassError("dag_longest_length requires a directed acyclic graph");
  const BitMatrix a = adjacency_matrix(g);
  auto vanished = [&](int m) { return is_zero(bool_power(a, unsigned(m))); };
  // A is nilpotent with index (longest path) + 1; search for the index.
  const SearchResult s = binary_search_min_true(1, g.order(), vanished, epsilon);
  LppResult res;
  res.graph_class = GraphClass::Dag;
  res.length = s.threshold - 1;
  if (s.interval) {
    const auto [l, h] = *s.interval;
    // exact bracket (l, h]: the length lies in [l, h-1]; width-0 brackets
    // pin the threshold itself
    res.interval = l == h ? std::pair{l - 1, h - 1} : std::pair{l, h - 1};
    res.length = res.interval->second;
  }
  return res;
}

int longest_chain_length(const Graph& g) {
  const GraphClass c = classify(g);
  if (!is_block_class(c) && c != GraphClass::CompleteGraph)
    throw ClassError("longest_chain_length requires a block graph");
  if (c == GraphClass::CompleteGraph) return 1;
  return chain_search(g, 1).threshold;
}

LppResult uniform_block_lp(const Graph& g, int epsilon) {
  const GraphClass c = classify(g);
  if (c != GraphClass::UniformBlockGraph && c != GraphClass::CompleteGraph)
    throw ClassError("uniform_block_lp requires a uniform block graph");
  LppResult res;
  res.graph_class = c;
  if (c == GraphClass::CompleteGraph) {
    res.length = g.order() - 1;
    res.chain_length = 1;
    if (epsilon > 1) res.interval = {{res.length, res.length}};
    return res;
  }
  const int omega = block_decomposition(g).omega;
  // Scale the requested slack down to chain units so the reported bracket,
  // multiplied back by (omega - 1), still has width <= epsilon.
  const int chain_eps = std::max(1, epsilon / (omega - 1));
  const SearchResult s = chain_search(g, chain_eps);
  const bool exact = !s.interval || s.interval->first == s.interval->second;
  if (exact) {
    res.chain_length = s.threshold;
    res.length = s.threshold * (omega - 1);
    if (epsilon > 1) res.interval = {{res.length, res.length}};
  } else {
    const auto [l, h] = *s.interval;
    res.interval = {{l * (omega - 1), h * (omega - 1)}};
    res.length = res.interval->second;
  }
  return res;
}

LppResult block_lp(const Graph& g, int epsilon) {
  const GraphClass c = classify(g);
  if (!is_block_class(c) && c != GraphClass::CompleteGraph)
    throw ClassError("block_lp requires a block graph");
  LppResult res;
  res.graph_class = c;
  if (c == GraphClass::CompleteGraph) {
    res.length = g.order() - 1;
    res.chain_length = 1;
    if (epsilon > 1) res.interval = {{res.length, res.length}};
    return res;
  }
  const Chain chain = generate_longest_chain(g);
  const int chain_len = static_cast<int>(chain.blocks.size());
  int by_blocks = 0;
  for (const auto& b : chain.blocks)
    by_blocks += static_cast<int>(b.size()) - 1;

  // Independent route: anchored at a non-cut endpoint alpha of the chain's
  // first block, the entries of beta(A^t) - beta(A^{t-1}) flag the vertices
  // at distance exactly t (off-diagonal only), so summing them block by
  // block along the chain re-derives the path length. Both routes must
  // agree. The first block is a leaf block, so its only cut vertex is the
  // first joint.
  int alpha = 0;
  for (int v : chain.blocks.front()) {
    if (v != chain.joints.front()) {
      alpha = v;
      break;
    }
  }
  const BitMatrix a = adjacency_matrix(g);
  std::vector<BitMatrix> pw;
  pw.reserve(static_cast<std::size_t>(chain_len) + 1);
  pw.push_back(BitMatrix::identity(a.dim()));
  for (int t = 1; t <= chain_len; ++t) pw.push_back(bool_product(pw.back(), a));
  int by_powers = 0;
  for (int t = 1; t <= chain_len; ++t) {
    for (int v : chain.blocks[static_cast<std::size_t>(t) - 1]) {
      if (v == alpha) continue;
      by_powers += int(pw[unsigned(t)].get(unsigned(alpha - 1), unsigned(v - 1))) -
                   int(pw[unsigned(t) - 1].get(unsigned(alpha - 1), unsigned(v - 1)));
    }
  }
  if (by_powers != by_blocks)
    throw ConsistencyError(
        "block length routes disagree: chain sum " + std::to_string(by_blocks) +
        " vs power differences " + std::to_string(by_powers));

  res.length = by_blocks;
  res.chain_length = chain_len;
  if (epsilon > 1) res.interval = {{res.length, res.length}};
  return res;
}

}  // namespace lpp
