#include "lpp/oracle.hpp"

#include <queue>
#include <set>

#include "lpp/errors.hpp"

namespace lpp {

namespace {

// Local acyclicity test; the oracle keeps its own machinery.
bool acyclic(const Graph& g) {
  const int n = g.order();
  std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
  for (auto [u, v] : g.edges()) ++indeg[static_cast<std::size_t>(v)];
  std::queue<int> q;
  for (int v = 1; v <= n; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) q.push(v);
  int seen = 0;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    ++seen;
    for (int w : g.neighbors(v))
      if (--indeg[static_cast<std::size_t>(w)] == 0) q.push(w);
  }
  return seen == n;
}

}  // namespace

OracleReport oracle_longest(const Graph& g) {
  const int n = g.order();
  const bool tree_shaped = !g.is_directed() && g.size() == n - 1;
  const bool dag_shaped = g.is_directed() && acyclic(g);
  const int guard = (tree_shaped || dag_shaped) ? 64 : 20;
  if (n > guard)
    throw CapacityError("oracle guard exceeded: order " + std::to_string(n) +
                        " > " + std::to_string(guard));

  std::set<Path> best;
  int best_len = 0;
  Path cur;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  auto dfs = [&](auto&& self, int v) -> void {
    used[static_cast<std::size_t>(v)] = 1;
    cur.push_back(v);
    const int len = static_cast<int>(cur.size()) - 1;
    if (len > best_len) {
      best_len = len;
      best.clear();
    }
    if (len == best_len) best.insert(canonical_path(cur, g.is_directed()));
    for (int w : g.neighbors(v))
      if (!used[static_cast<std::size_t>(w)]) self(self, w);
    cur.pop_back();
    used[static_cast<std::size_t>(v)] = 0;
  };
  for (int s = 1; s <= n; ++s) dfs(dfs, s);

  OracleReport report;
  report.length = best_len;
  report.paths.paths.assign(best.begin(), best.end());
  return report;
}

boost::multiprecision::cpp_int walk_count(const Graph& g, int i, int j,
                                          unsigned k) {
  using boost::multiprecision::cpp_int;
  const int n = g.order();
  if (i < 1 || i > n || j < 1 || j > n)
    throw Error("walk_count vertex id out of range");
  if (k > 64) throw CapacityError("walk length guard exceeded (k <= 64)");
  using Mat = std::vector<std::vector<cpp_int>>;
  const std::size_t un = static_cast<std::size_t>(n);
  Mat a(un, std::vector<cpp_int>(un, 0));
  for (auto [u, v] : g.edges()) {
    a[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(v - 1)] = 1;
    if (!g.is_directed())
      a[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(u - 1)] = 1;
  }
  Mat p(un, std::vector<cpp_int>(un, 0));
  for (std::size_t t = 0; t < un; ++t) p[t][t] = 1;
  for (unsigned step = 0; step < k; ++step) {
    Mat next(un, std::vector<cpp_int>(un, 0));
    for (std::size_t r = 0; r < un; ++r)
      for (std::size_t c = 0; c < un; ++c)
        if (p[r][c] != 0)
          for (std::size_t t = 0; t < un; ++t)
            if (a[c][t] != 0) next[r][t] += p[r][c] * a[c][t];
    p = std::move(next);
  }
  return p[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

}  // namespace lpp
