#ifndef LPP_GENERATORS_HPP_
#define LPP_GENERATORS_HPP_

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "lpp/graph.hpp"

namespace lpp {

// Seeded mt19937_64 with bounded draws by rejection, so equal seeds produce
// identical graphs on any conforming platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Unbiased draw from [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() / bound * bound;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

  // [0, 1) with 53 random mantissa bits.
  double unit() { return double(eng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 eng_;
};

// Uniform random labeled tree (Prufer decode).
Graph gen_tree(int n, std::uint64_t seed);

// Random block graph: cliques of the given orders attached one by one at a
// uniformly chosen existing vertex. Orders must all be >= 3.
Graph gen_block_graph(const std::vector<int>& block_orders, std::uint64_t seed);

// Random DAG: shuffle a topological order, keep each forward pair with
// probability edge_prob in [0, 1], then repair weak connectivity along the
// order. edge_prob = 1 gives the transitive tournament; edge_prob = 0 leaves
// just the repairs, a directed path.
Graph gen_dag(int n, double edge_prob, std::uint64_t seed);

}  // namespace lpp

#endif  // LPP_GENERATORS_HPP_
