#pragma once

// Exact minimum Steiner trees on small graphs.
//
// steiner_tree_min_size(g, s) is the minimum number of edges over all
// subtrees of g containing every vertex of s. It backs the lower-bound
// pruning of the rainbow-index solver: a rainbow S-tree has at least this
// many edges, so it must be exact, never approximate. Practical ceiling:
// order <= 20 and |s| <= 5 stay well inside microseconds; the terminal-subset
// dynamic program is exponential in |s| only.

#include <array>
#include <cstdint>
#include <vector>

#include "rxi/graph.hpp"

namespace rxi {

namespace detail {

struct DistMatrix {
  int n = 0;
  std::vector<int> d;
  int at(int u, int v) const {
    return d[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
  }
};

inline DistMatrix all_pairs_distances(const Graph& g) {
  DistMatrix m;
  m.n = g.order();
  m.d.assign(static_cast<std::size_t>(m.n) * static_cast<std::size_t>(m.n), -1);
  std::array<int, kMaxVertices> queue{};
  for (int r = 0; r < m.n; ++r) {
    auto* row = &m.d[static_cast<std::size_t>(r) * static_cast<std::size_t>(m.n)];
    int qh = 0, qt = 0;
    row[r] = 0;
    queue[static_cast<std::size_t>(qt++)] = r;
    while (qh < qt) {
      int u = queue[static_cast<std::size_t>(qh++)];
      VertexSet nb = g.neighbors(u);
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (row[w] < 0) {
          row[w] = row[u] + 1;
          queue[static_cast<std::size_t>(qt++)] = w;
        }
      }
    }
  }
  return m;
}

/// Steiner minimum with a precomputed distance matrix. For up to three
/// terminals the optimum is a star of shortest paths through some meeting
/// vertex; beyond that, the terminal-subset dynamic program.
inline int steiner_with_distances(const Graph& g, VertexSet s, const DistMatrix& dist) {
  const int n = g.order();
  std::vector<int> terms = to_vertices(s);
  const int k = static_cast<int>(terms.size());
  if (k <= 3) {
    int best = std::numeric_limits<int>::max();
    for (int v = 0; v < n; ++v) {
      int sum = 0;
      for (int t : terms) sum += dist.at(v, t);
      best = std::min(best, sum);
    }
    return best;
  }

  constexpr int kInf = 1 << 20;
  const std::size_t full = std::size_t{1} << k;
  std::vector<int> dp(full * static_cast<std::size_t>(n), kInf);
  auto cell = [&](std::size_t mask, int v) -> int& {
    return dp[mask * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
  };
  for (int i = 0; i < k; ++i)
    for (int v = 0; v < n; ++v)
      cell(std::size_t{1} << i, v) = dist.at(terms[static_cast<std::size_t>(i)], v);
  for (std::size_t mask = 1; mask < full; ++mask) {
    if (std::popcount(mask) < 2) continue;
    const std::size_t low = mask & (~mask + 1);
    for (int v = 0; v < n; ++v) {
      int best = cell(mask, v);
      // merge two terminal groups at v
      for (std::size_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
        if (!(sub & low)) continue;
        best = std::min(best, cell(sub, v) + cell(mask ^ sub, v));
      }
      cell(mask, v) = best;
    }
    // relax along shortest paths
    for (int v = 0; v < n; ++v) {
      int best = cell(mask, v);
      for (int u = 0; u < n; ++u)
        best = std::min(best, cell(mask, u) + dist.at(u, v));
      cell(mask, v) = best;
    }
  }
  int best = kInf;
  for (int v = 0; v < n; ++v) best = std::min(best, cell(full - 1, v));
  return best;
}

}  // namespace detail

/// Exact minimum number of edges of a subtree of g containing s.
inline int steiner_tree_min_size(const Graph& g, VertexSet s) {
  if (std::popcount(s) < 2) throw std::invalid_argument("steiner_tree_min_size: |s| must be >= 2");
  if ((s & ~g.all_vertices()) != 0)
    throw std::invalid_argument("steiner_tree_min_size: terminal out of range");
  if (!is_connected(g)) throw std::invalid_argument("steiner_tree_min_size: graph must be connected");
  return detail::steiner_with_distances(g, s, detail::all_pairs_distances(g));
}

}  // namespace rxi
