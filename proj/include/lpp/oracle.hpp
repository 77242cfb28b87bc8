#ifndef LPP_ORACLE_HPP_
#define LPP_ORACLE_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include "lpp/graph.hpp"
#include "lpp/path_set.hpp"

namespace lpp {

// Brute-force ground truth. Deliberately naive and kept independent of the
// bit-matrix machinery so a bug there cannot hide here.
struct OracleReport {
  int length = 0;
  PathSet paths;
};

// Exhaustive simple-path enumeration from every start vertex. Guards:
// order <= 64 for trees and DAGs, <= 20 otherwise (CapacityError beyond).
OracleReport oracle_longest(const Graph& g);

using WalkCount = boost::multiprecision::cpp_int;

// Number of walks of length k from i to j, by exact integer matrix power.
// k <= 64 (CapacityError beyond).
WalkCount walk_count(const Graph& g, int i, int j, unsigned k);

}  // namespace lpp

#endif  // LPP_ORACLE_HPP_
