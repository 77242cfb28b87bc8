#ifndef LPP_PATHS_HPP_
#define LPP_PATHS_HPP_

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "lpp/graph.hpp"
#include "lpp/path_set.hpp"

namespace lpp {

// An ordered run of blocks; joints[i] is the unique cut vertex shared by
// blocks[i] and blocks[i + 1]. Non-consecutive blocks are disjoint. Block
// vertex lists are sorted ascending.
struct Chain {
  std::vector<std::vector<int>> blocks;
  std::vector<int> joints;

  friend bool operator==(const Chain&, const Chain&) = default;
};

// Vertex pairs joined by a path of length exactly n. Unordered (i < j) for
// trees and block graphs (complete graphs included), ordered for DAGs.
std::set<std::pair<int, int>> exact_distance_pairs(const Graph& g,
                                                   GraphClass cls, int n);

// A chain of maximum weight sum(|B| - 1), i.e. one carrying a longest path.
// Built leaf block to leaf block: the unique shortest route between non-cut
// representatives, each edge mapped to the block containing it. Note the
// heaviest chain need not have the most blocks once block orders differ.
// A complete graph yields the single-block chain.
Chain generate_longest_chain(const Graph& g);

// Every maximum-weight chain, deduplicated on the block sequence (a chain
// and its reversal count once), sorted by canonical block sequence.
std::vector<Chain> generate_all_longest_chains(const Graph& g);

PathSet tree_all_longest_paths(const Graph& g);
PathSet dag_all_longest_paths(const Graph& g);

// Enumerates every longest path by interleaving block-local permutations
// along each longest chain. Refuses (CapacityError) when the closed-form
// count exceeds cap.
PathSet block_all_longest_paths(const Graph& g, std::size_t cap = 1'000'000);

// Closed-form longest-path count; always equals the size of
// block_all_longest_paths(g) when the latter is allowed to run.
std::uint64_t count_block_longest_paths(const Graph& g);

}  // namespace lpp

#endif  // LPP_PATHS_HPP_
