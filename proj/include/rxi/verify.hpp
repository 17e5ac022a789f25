#pragma once

// Exact decision machinery for rainbow S-trees and k-rainbow colorings.
//
// exists_rainbow_s_tree branches over edge positions in ascending order
// (include before exclude), using each color class at most once and keeping
// the chosen edges a forest through union-find with rollback. A branch dies
// when the components that still have to merge outnumber either the edges a
// rainbow tree may still take (min(n-1, palette)) or the unused colors left
// in the suffix. The first witness found is therefore the lexicographically
// least witness as an edge set, and every run is reproducible.
//
// verify_k_rainbow walks the k-subsets in lexicographic order; its
// first_failure is the lexicographic minimum among failing subsets even when
// subsets are checked in parallel (min-reduction over subset ranks). Worker
// count comes from RAINBOW_THREADS (0 or unset = auto).

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rxi/coloring.hpp"
#include "rxi/graph.hpp"
#include "rxi/steiner.hpp"

namespace rxi {

struct VerificationReport {
  bool ok = false;
  std::int64_t checked_subsets = 0;
  std::optional<VertexSet> first_failure;
  // Populated only when requested; keyed by subset mask.
  std::map<VertexSet, EdgeSubset> witness_trees;
};

/// True iff sub is a tree, covers s, and its edge colors are pairwise
/// distinct. s must be nonempty.
inline bool is_rainbow_tree(const Graph& g, const EdgeColoring& c, const EdgeSubset& sub,
                            VertexSet s) {
  if (s == 0) throw std::invalid_argument("is_rainbow_tree: empty vertex set");
  VertexSet touched = 0;
  std::uint64_t seen_colors = 0;
  for (int e = 0; e < g.size(); ++e) {
    if (!sub.test(static_cast<std::size_t>(e))) continue;
    touched |= vertex_set({g.edge(e).u, g.edge(e).v});
    const std::uint64_t bit = std::uint64_t{1} << (c.colors[static_cast<std::size_t>(e)] - 1);
    if (seen_colors & bit) return false;
    seen_colors |= bit;
  }
  if ((s & ~touched) != 0) return false;
  return is_tree(g, sub);
}

namespace detail {

class RainbowTreeSearcher {
 public:
  RainbowTreeSearcher(const Graph& g, const EdgeColoring& c) : g_(&g), c_(&c) { refresh(); }

  /// Recompute per-coloring tables. Must be called when the coloring's color
  /// vector has been mutated in place (the partition enumerator does that).
  void refresh() {
    const int m = g_->size();
    suffix_colors_.assign(static_cast<std::size_t>(m) + 1, 0);
    for (int e = m - 1; e >= 0; --e)
      suffix_colors_[static_cast<std::size_t>(e)] =
          suffix_colors_[static_cast<std::size_t>(e) + 1] | color_bit(e);
  }

  /// Exact decision; the witness is returned as edge-list positions.
  std::optional<std::vector<int>> find(VertexSet s) {
    const int n = g_->order();
    if (std::popcount(s) < 2) throw std::invalid_argument("rainbow S-tree: |s| must be >= 2");
    if ((s & ~g_->all_vertices()) != 0)
      throw std::invalid_argument("rainbow S-tree: vertex out of range");
    for (int i = 0; i < n; ++i) {
      parent_[static_cast<std::size_t>(i)] = i;
      size_[static_cast<std::size_t>(i)] = 1;
    }
    chosen_.clear();
    used_colors_ = 0;
    structure_ = s;
    active_comps_ = std::popcount(s);
    max_edges_ = std::min(n - 1, c_->palette);
    witness_.clear();
    if (dfs(0)) return witness_;
    return std::nullopt;
  }

 private:
  std::uint64_t color_bit(int e) const {
    return std::uint64_t{1} << (c_->colors[static_cast<std::size_t>(e)] - 1);
  }

  int find_root(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }

  bool dfs(int e) {
    const int need = active_comps_ - 1;
    if (static_cast<int>(chosen_.size()) + need > max_edges_) return false;
    if (e == g_->size()) return false;
    if (std::popcount(suffix_colors_[static_cast<std::size_t>(e)] & ~used_colors_) < need)
      return false;

    const std::uint64_t cb = color_bit(e);
    if (!(used_colors_ & cb)) {
      const auto [u, v] = g_->edge(e);
      int ru = find_root(u), rv = find_root(v);
      if (ru != rv) {
        // include e
        const bool u_new = !(structure_ >> u & 1);
        const bool v_new = !(structure_ >> v & 1);
        structure_ |= vertex_set({u, v});
        active_comps_ += (u_new ? 1 : 0) + (v_new ? 1 : 0) - 1;
        if (size_[static_cast<std::size_t>(ru)] < size_[static_cast<std::size_t>(rv)])
          std::swap(ru, rv);
        parent_[static_cast<std::size_t>(rv)] = ru;
        size_[static_cast<std::size_t>(ru)] += size_[static_cast<std::size_t>(rv)];
        used_colors_ |= cb;
        chosen_.push_back(e);
        if (active_comps_ == 1) {
          witness_ = chosen_;
          return true;  // state rebuilt on the next find()
        }
        if (dfs(e + 1)) return true;
        chosen_.pop_back();
        used_colors_ &= ~cb;
        size_[static_cast<std::size_t>(ru)] -= size_[static_cast<std::size_t>(rv)];
        parent_[static_cast<std::size_t>(rv)] = rv;
        active_comps_ -= (u_new ? 1 : 0) + (v_new ? 1 : 0) - 1;
        if (u_new) structure_ &= ~(VertexSet{1} << u);
        if (v_new) structure_ &= ~(VertexSet{1} << v);
      }
    }
    return dfs(e + 1);  // exclude e
  }

  const Graph* g_;
  const EdgeColoring* c_;
  std::vector<std::uint64_t> suffix_colors_;
  std::array<int, kMaxVertices> parent_{};
  std::array<int, kMaxVertices> size_{};
  std::vector<int> chosen_;
  std::vector<int> witness_;
  std::uint64_t used_colors_ = 0;
  VertexSet structure_ = 0;
  int active_comps_ = 0;
  int max_edges_ = 0;
};

inline int env_thread_cap() {
  static const int cap = [] {
    const char* s = std::getenv("RAINBOW_THREADS");
    if (!s) return 0;
    const int v = std::atoi(s);
    return v < 0 ? 0 : v;
  }();
  return cap;
}

inline int worker_count() {
  int cap = env_thread_cap();
  if (cap == 0) cap = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, cap);
}

}  // namespace detail

/// Exact decision: some rainbow S-tree as an edge subset, or absent.
inline std::optional<EdgeSubset> exists_rainbow_s_tree(const Graph& g, const EdgeColoring& c,
                                                       VertexSet s) {
  if (!is_connected(g)) throw std::invalid_argument("exists_rainbow_s_tree: graph must be connected");
  if (static_cast<int>(c.colors.size()) != g.size())
    throw std::invalid_argument("exists_rainbow_s_tree: coloring does not match graph");
  detail::RainbowTreeSearcher searcher(g, c);
  auto found = searcher.find(s);
  if (!found) return std::nullopt;
  EdgeSubset sub;
  for (int e : *found) sub.set(static_cast<std::size_t>(e));
  if (!is_rainbow_tree(g, c, sub, s))
    throw std::logic_error("internal: rainbow tree witness failed validation");
  return sub;
}

/// Checks every k-subset of V(g). first_failure, when present, is the
/// lexicographically least failing subset; checked_subsets counts subsets up
/// to and including it (all C(n,k) when ok).
inline VerificationReport verify_k_rainbow(const Graph& g, const EdgeColoring& c, int k,
                                           bool record_witnesses = false, int threads = -1) {
  if (!is_connected(g)) throw std::invalid_argument("verify_k_rainbow: graph must be connected");
  if (k < 2 || k > g.order()) throw std::invalid_argument("verify_k_rainbow: k out of range");
  if (static_cast<int>(c.colors.size()) != g.size())
    throw std::invalid_argument("verify_k_rainbow: coloring does not match graph");

  const std::vector<VertexSet> subsets = k_subsets(g.order(), k);
  const std::int64_t total = static_cast<std::int64_t>(subsets.size());
  VerificationReport report;

  int workers = threads >= 0 ? std::max(threads, 1) : detail::worker_count();
  if (record_witnesses || total < 2048) workers = 1;

  if (workers == 1) {
    detail::RainbowTreeSearcher searcher(g, c);
    for (std::int64_t i = 0; i < total; ++i) {
      auto w = searcher.find(subsets[static_cast<std::size_t>(i)]);
      if (!w) {
        report.ok = false;
        report.first_failure = subsets[static_cast<std::size_t>(i)];
        report.checked_subsets = i + 1;
        return report;
      }
      if (record_witnesses) {
        EdgeSubset sub;
        for (int e : *w) sub.set(static_cast<std::size_t>(e));
        report.witness_trees.emplace(subsets[static_cast<std::size_t>(i)], sub);
      }
    }
    report.ok = true;
    report.checked_subsets = total;
    return report;
  }

  std::atomic<std::int64_t> min_fail{std::numeric_limits<std::int64_t>::max()};
  std::vector<std::thread> pool;
  const std::int64_t chunk = (total + workers - 1) / workers;
  for (int t = 0; t < workers; ++t) {
    const std::int64_t lo = t * chunk;
    const std::int64_t hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      detail::RainbowTreeSearcher searcher(g, c);
      for (std::int64_t i = lo; i < hi; ++i) {
        if (min_fail.load(std::memory_order_relaxed) < i) break;
        if (!searcher.find(subsets[static_cast<std::size_t>(i)])) {
          std::int64_t cur = min_fail.load(std::memory_order_relaxed);
          while (i < cur && !min_fail.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    });
  }
  for (auto& th : pool) th.join();

  const std::int64_t fail = min_fail.load();
  if (fail == std::numeric_limits<std::int64_t>::max()) {
    report.ok = true;
    report.checked_subsets = total;
  } else {
    report.ok = false;
    report.first_failure = subsets[static_cast<std::size_t>(fail)];
    report.checked_subsets = fail + 1;
  }
  return report;
}

/// Max over all k-subsets s of steiner_tree_min_size(g, s): a lower bound
/// for rx_k, since a rainbow S-tree has at least that many edges and a
/// rainbow tree never has more edges than colors.
inline int steiner_k_diameter(const Graph& g, int k) {
  if (!is_connected(g)) throw std::invalid_argument("steiner_k_diameter: graph must be connected");
  if (k < 2 || k > g.order()) throw std::invalid_argument("steiner_k_diameter: k out of range");
  const auto dist = detail::all_pairs_distances(g);
  int best = 0;
  for (VertexSet s : k_subsets(g.order(), k))
    best = std::max(best, detail::steiner_with_distances(g, s, dist));
  return best;
}

}  // namespace rxi
