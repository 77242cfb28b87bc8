#ifndef LPP_PATH_SET_HPP_
#define LPP_PATH_SET_HPP_

#include <algorithm>
#include <cstddef>
#include <vector>

namespace lpp {

// A path as its vertex sequence (1-based ids).
using Path = std::vector<int>;

// Undirected paths are reported as the lexicographically smaller of the
// sequence and its reverse; directed paths keep their orientation.
inline Path canonical_path(Path p, bool directed) {
  if (directed) return p;
  Path r(p.rbegin(), p.rend());
  return r < p ? r : p;
}

// Canonical paths in ascending lexicographic order, duplicate-free.
struct PathSet {
  std::vector<Path> paths;

  std::size_t count() const { return paths.size(); }
  friend bool operator==(const PathSet&, const PathSet&) = default;
};

}  // namespace lpp

#endif  // LPP_PATH_SET_HPP_
