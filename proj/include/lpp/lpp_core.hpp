#ifndef LPP_LPP_CORE_HPP_
#define LPP_LPP_CORE_HPP_

#include <optional>
#include <utility>

#include "lpp/errors.hpp"
#include "lpp/graph.hpp"

namespace lpp {

// Outcome of a minimum-true-threshold search. With epsilon = 1 the search
// runs to the exact threshold; with epsilon > 1 it stops early and reports
// only a bracket of width <= epsilon that contains the threshold.
struct SearchResult {
  int threshold = 0;                            // exact iff interval is empty
  std::optional<std::pair<int, int>> interval;  // set iff epsilon > 1
};

// pred must be monotone over [lo, hi]: false below some threshold t and true
// from t on, with pred(hi) true (otherwise SearchError). About
// log2(hi - lo) probes.
template <typename Pred>
SearchResult binary_search_min_true(int lo, int hi, Pred&& pred,
                                    int epsilon = 1) {
  if (epsilon < 1) throw Error("epsilon must be at least 1");
  if (lo > hi) throw Error("empty search range");
  if (!pred(hi)) throw SearchError("predicate is false at the upper bound");
  SearchResult r;
  if (pred(lo)) {
    r.threshold = lo;
    if (epsilon > 1) r.interval = {{lo, lo}};
    return r;
  }
  // invariant: pred(lo) false, pred(hi) true
  while (hi - lo > epsilon) {
    const int mid = lo + (hi - lo) / 2;
    if (pred(mid))
      hi = mid;
    else
      lo = mid;
  }
  r.threshold = hi;
  if (epsilon > 1) r.interval = {{lo, hi}};
  return r;
}

// Longest-path answer for one graph. With epsilon > 1 the interval brackets
// the true length (width <= epsilon) and length holds its upper bound;
// chain_length is filled for block-graph classes when known exactly.
struct LppResult {
  GraphClass graph_class = GraphClass::Other;
  int length = 0;
  std::optional<int> chain_length;
  std::optional<std::pair<int, int>> interval;
};

LppResult tree_diameter(const Graph& g, int epsilon = 1);
LppResult dag_longest_length(const Graph& g, int epsilon = 1);
int longest_chain_length(const Graph& g);
LppResult uniform_block_lp(const Graph& g, int epsilon = 1);
LppResult block_lp(const Graph& g, int epsilon = 1);

}  // namespace lpp

#endif  // LPP_LPP_CORE_HPP_
