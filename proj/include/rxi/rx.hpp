#pragma once

// Exact k-rainbow index solving.
//
// rx_at_most(g, k, l) decides whether some coloring with at most l colors is
// k-rainbow and returns a witness when one exists. Color names are irrelevant
// to the rainbow property, so the search enumerates set partitions of the
// edge list into at most l blocks, one restricted-growth string per
// partition, in lexicographic RGS order with a short-circuit on the first
// verifying partition. Two exact cuts keep this affordable:
//   - rx_k(g) >= steiner_k_diameter(g, k), so palettes below that bound are
//     refused without enumeration;
//   - when l = k-1 a rainbow S-tree has exactly k-1 edges and k vertices,
//     i.e. no Steiner points, so each subset check reduces to finding a
//     rainbow spanning tree inside the induced subgraph, and graphs where
//     some k-subset induces a disconnected subgraph are rejected outright.
// (For l < k-1 the Steiner bound alone rejects: covering k vertices already
// takes k-1 > l edges.)
//
// Work is metered in partitions examined; exceeding the budget raises
// BudgetExceededError rather than ever degrading to a heuristic.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rxi/coloring.hpp"
#include "rxi/graph.hpp"
#include "rxi/verify.hpp"

namespace rxi {

struct SolveBudget {
  std::int64_t max_partitions = 500'000'000;
};

class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

struct RxResult {
  int value = 0;
  EdgeColoring witness;
  int lower_bound = 0;  // Steiner k-diameter used to start the scan
};

namespace detail {

class PartitionSolver {
 public:
  PartitionSolver(const Graph& g, int k, int l, std::int64_t& used, std::int64_t budget)
      : g_(g),
        k_(k),
        l_(l),
        used_(used),
        budget_(budget),
        subsets_(k_subsets(g.order(), k)),
        work_{std::vector<int>(static_cast<std::size_t>(g.size()), 1), l},
        searcher_(g_, work_) {}

  std::optional<EdgeColoring> run() {
    fast_ = l_ == k_ - 1;
    if (fast_ && !build_induced_tables()) return std::nullopt;
    cached_fail_ = 0;
    if (dfs(0, 0)) return make_coloring(g_, work_.colors, l_);
    return std::nullopt;
  }

 private:
  // For l = k-1 every witness is a spanning tree of an induced subgraph;
  // returns false when some subset induces a disconnected subgraph (no
  // coloring can help then).
  bool build_induced_tables() {
    induced_.resize(subsets_.size());
    for (std::size_t i = 0; i < subsets_.size(); ++i) {
      const std::vector<int> vs = to_vertices(subsets_[i]);
      auto& edges = induced_[i];
      for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
          const int e = g_.edge_index(vs[a], vs[b]);
          if (e >= 0) edges.push_back(e);
        }
      // connectivity of the induced subgraph
      std::array<int, kMaxVertices> root{};
      for (int v : vs) root[static_cast<std::size_t>(v)] = v;
      auto find = [&](int x) {
        while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)];
        return x;
      };
      int comps = static_cast<int>(vs.size());
      for (int e : edges) {
        const int ru = find(g_.edge(e).u), rv = find(g_.edge(e).v);
        if (ru != rv) {
          root[static_cast<std::size_t>(ru)] = rv;
          --comps;
        }
      }
      if (comps > 1) return false;
    }
    return true;
  }

  bool dfs(int pos, int blocks) {
    if (pos == g_.size()) {
      if (++used_ > budget_)
        throw BudgetExceededError("partition budget of " + std::to_string(budget_) +
                                  " exhausted while solving rx_" + std::to_string(k_) +
                                  " <= " + std::to_string(l_));
      return leaf();
    }
    const int hi = std::min(blocks, l_ - 1);
    for (int b = 0; b <= hi; ++b) {
      work_.colors[static_cast<std::size_t>(pos)] = b + 1;
      if (dfs(pos + 1, std::max(blocks, b + 1))) return true;
    }
    return false;
  }

  // The last failing subset is retried first: consecutive partitions differ
  // in a suffix and usually keep failing on the same subset.
  bool leaf() {
    if (!fast_) searcher_.refresh();
    if (!check(cached_fail_)) return false;
    for (std::size_t i = 0; i < subsets_.size(); ++i) {
      if (i == cached_fail_) continue;
      if (!check(i)) {
        cached_fail_ = i;
        return false;
      }
    }
    return true;
  }

  bool check(std::size_t idx) {
    if (fast_) return check_induced(idx);
    return searcher_.find(subsets_[idx]).has_value();
  }

  bool check_induced(std::size_t idx) {
    const auto& edges = induced_[idx];
    if (k_ == 3) {
      // a 2-edge rainbow path: some pair of present edges, distinct colors
      for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = a + 1; b < edges.size(); ++b)
          if (work_.colors[static_cast<std::size_t>(edges[a])] !=
              work_.colors[static_cast<std::size_t>(edges[b])])
            return true;
      return false;
    }
    VertexSet vs = subsets_[idx];
    while (vs) {
      const int v = std::countr_zero(vs);
      vs &= vs - 1;
      tree_root_[static_cast<std::size_t>(v)] = v;
    }
    return spanning_rainbow(edges, 0, 0, 0);
  }

  // Rainbow spanning tree of the induced subgraph: k-1 edges with pairwise
  // distinct colors, acyclic. Plain DFS; induced subgraphs have <= C(k,2)
  // edges and k is tiny.
  bool spanning_rainbow(const std::vector<int>& edges, std::size_t at, int chosen,
                        std::uint64_t used_colors) {
    if (chosen == k_ - 1) return true;
    if (at >= edges.size()) return false;
    if (static_cast<int>(edges.size() - at) < k_ - 1 - chosen) return false;
    const int e = edges[at];
    const std::uint64_t cb = std::uint64_t{1}
                             << (work_.colors[static_cast<std::size_t>(e)] - 1);
    if (!(used_colors & cb)) {
      const auto [u, v] = g_.edge(e);
      const int ru = tree_find(u), rv = tree_find(v);
      if (ru != rv) {
        tree_root_[static_cast<std::size_t>(ru)] = rv;
        if (spanning_rainbow(edges, at + 1, chosen + 1, used_colors | cb)) return true;
        tree_root_[static_cast<std::size_t>(ru)] = ru;
      }
    }
    return spanning_rainbow(edges, at + 1, chosen, used_colors);
  }

  int tree_find(int x) {
    while (tree_root_[static_cast<std::size_t>(x)] != x)
      x = tree_root_[static_cast<std::size_t>(x)];
    return x;
  }

  const Graph& g_;
  const int k_;
  const int l_;
  std::int64_t& used_;
  const std::int64_t budget_;
  std::vector<VertexSet> subsets_;
  EdgeColoring work_;
  RainbowTreeSearcher searcher_;
  std::vector<std::vector<int>> induced_;
  std::size_t cached_fail_ = 0;
  bool fast_ = false;
  std::array<int, kMaxVertices> tree_root_{};
};

inline std::optional<EdgeColoring> rx_at_most_impl(const Graph& g, int k, int l, int sdiam,
                                                   std::int64_t& used, std::int64_t budget) {
  const int m = g.size();
  if (sdiam > l) return std::nullopt;
  if (l >= m) {
    // all edges distinctly colored: any spanning tree is rainbow, so every
    // subset has an S-tree
    std::vector<int> colors(static_cast<std::size_t>(m));
    std::iota(colors.begin(), colors.end(), 1);
    return make_coloring(g, std::move(colors), m);
  }
  PartitionSolver solver(g, k, l, used, budget);
  return solver.run();
}

}  // namespace detail

/// Some k-rainbow coloring of g with palette <= l, or absent. Exact.
inline std::optional<EdgeColoring> rx_at_most(const Graph& g, int k, int l,
                                              const SolveBudget& budget = {}) {
  if (!is_connected(g)) throw std::invalid_argument("rx_at_most: graph must be connected");
  if (k < 2 || k > g.order()) throw std::invalid_argument("rx_at_most: k out of range");
  if (l < 1 || l > g.size()) throw std::invalid_argument("rx_at_most: l out of range");
  std::int64_t used = 0;
  return detail::rx_at_most_impl(g, k, l, steiner_k_diameter(g, k), used, budget.max_partitions);
}

/// Minimal l admitting a k-rainbow coloring, scanning upward from the
/// Steiner k-diameter. The witness re-verifies by construction; the scan is
/// guaranteed to stop by l = n-1.
inline RxResult rx_exact(const Graph& g, int k, const SolveBudget& budget = {}) {
  if (!is_connected(g)) throw std::invalid_argument("rx_exact: graph must be connected");
  if (k < 2 || k > g.order()) throw std::invalid_argument("rx_exact: k out of range");
  const int sdiam = steiner_k_diameter(g, k);
  std::int64_t used = 0;
  for (int l = std::max(sdiam, 1); l <= g.order() - 1; ++l) {
    if (auto w = detail::rx_at_most_impl(g, k, l, sdiam, used, budget.max_partitions))
      return RxResult{l, std::move(*w), sdiam};
  }
  throw std::logic_error("internal: rx_k exceeds n-1 on a connected graph");
}

}  // namespace rxi
