#pragma once

// Brute-force oracles for the test suite. These stay independent of the
// search paths they cross-check: tree-ness, coverage and color-distinctness
// are recomputed from scratch here, and existence questions are answered by
// enumerating every edge subset up to the relevant size bound.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "rxi/coloring.hpp"
#include "rxi/graph.hpp"

namespace oracle {

inline bool edges_form_tree_covering(const rxi::Graph& g, const std::vector<int>& edges,
                                     rxi::VertexSet s) {
  if (edges.empty()) return false;
  std::array<int, rxi::kMaxVertices> root{};
  std::iota(root.begin(), root.begin() + g.order(), 0);
  auto find = [&](int x) {
    while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)];
    return x;
  };
  rxi::VertexSet touched = 0;
  for (int e : edges) {
    const auto [u, v] = g.edge(e);
    const int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    root[static_cast<std::size_t>(ru)] = rv;
    touched |= rxi::vertex_set({u, v});
  }
  if (std::popcount(touched) != static_cast<int>(edges.size()) + 1) return false;
  return (s & ~touched) == 0;
}

inline bool edges_rainbow(const rxi::EdgeColoring& c, const std::vector<int>& edges) {
  std::uint64_t used = 0;
  for (int e : edges) {
    const std::uint64_t bit = std::uint64_t{1} << (c.colors[static_cast<std::size_t>(e)] - 1);
    if (used & bit) return false;
    used |= bit;
  }
  return true;
}

/// Exhaustive rainbow-S-tree decision: every edge subset of size at most
/// min(n-1, palette) is tried.
inline bool naive_rainbow_s_tree(const rxi::Graph& g, const rxi::EdgeColoring& c,
                                 rxi::VertexSet s) {
  const int cap = std::min(g.order() - 1, c.palette);
  std::vector<int> combo;
  std::function<bool(int, int)> rec = [&](int start, int remaining) -> bool {
    if (remaining == 0)
      return edges_rainbow(c, combo) && edges_form_tree_covering(g, combo, s);
    for (int e = start; e <= g.size() - remaining; ++e) {
      combo.push_back(e);
      if (rec(e + 1, remaining - 1)) return true;
      combo.pop_back();
    }
    return false;
  };
  for (int size = 1; size <= cap; ++size)
    if (rec(0, size)) return true;
  return false;
}

/// Exhaustive minimum Steiner tree size.
inline int brute_steiner_min(const rxi::Graph& g, rxi::VertexSet s) {
  std::vector<int> combo;
  std::function<bool(int, int)> rec = [&](int start, int remaining) -> bool {
    if (remaining == 0) return edges_form_tree_covering(g, combo, s);
    for (int e = start; e <= g.size() - remaining; ++e) {
      combo.push_back(e);
      if (rec(e + 1, remaining - 1)) return true;
      combo.pop_back();
    }
    return false;
  };
  for (int size = std::popcount(s) - 1; size <= g.order() - 1; ++size)
    if (rec(0, size)) return size;
  return -1;
}

/// Independent rainbow-path decision for the k = 2 specialization.
inline bool rainbow_path_exists(const rxi::Graph& g, const rxi::EdgeColoring& c, int a, int b) {
  std::function<bool(int, rxi::VertexSet, std::uint64_t)> walk =
      [&](int at, rxi::VertexSet visited, std::uint64_t used) -> bool {
    if (at == b) return true;
    rxi::VertexSet nb = g.neighbors(at) & ~visited;
    while (nb) {
      const int w = std::countr_zero(nb);
      nb &= nb - 1;
      const std::uint64_t bit =
          std::uint64_t{1}
          << (c.colors[static_cast<std::size_t>(g.edge_index(at, w))] - 1);
      if (used & bit) continue;
      if (walk(w, visited | (rxi::VertexSet{1} << w), used | bit)) return true;
    }
    return false;
  };
  return walk(a, rxi::VertexSet{1} << a, 0);
}

inline rxi::Graph random_connected_graph(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  while (true) {
    std::vector<rxi::Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) edges.push_back({i, j});
    if (edges.empty()) continue;
    rxi::Graph g = rxi::make_graph(n, std::move(edges));
    if (rxi::is_connected(g)) return g;
  }
}

inline rxi::EdgeColoring random_coloring(const rxi::Graph& g, int palette, std::mt19937& rng) {
  std::uniform_int_distribution<int> color(1, palette);
  std::vector<int> colors(static_cast<std::size_t>(g.size()));
  for (int& c : colors) c = color(rng);
  return rxi::make_coloring(g, std::move(colors), palette);
}

inline rxi::VertexSet random_subset(int n, int k, std::mt19937& rng) {
  std::vector<int> vs(static_cast<std::size_t>(n));
  std::iota(vs.begin(), vs.end(), 0);
  std::shuffle(vs.begin(), vs.end(), rng);
  rxi::VertexSet s = 0;
  for (int i = 0; i < k; ++i) s |= rxi::VertexSet{1} << vs[static_cast<std::size_t>(i)];
  return s;
}

/// Fully naive rx_k: enumerates every labeled coloring with at most l colors
/// (all l^m of them) and checks every k-subset with the naive tree oracle.
/// Only sane for a handful of edges.
inline int naive_rx_exact(const rxi::Graph& g, int k) {
  const int m = g.size();
  const auto subsets = rxi::k_subsets(g.order(), k);
  for (int l = 1; l <= g.order() - 1; ++l) {
    std::vector<int> colors(static_cast<std::size_t>(m), 1);
    while (true) {
      const rxi::EdgeColoring c = rxi::make_coloring(g, colors, l);
      bool all = true;
      for (rxi::VertexSet s : subsets)
        if (!naive_rainbow_s_tree(g, c, s)) {
          all = false;
          break;
        }
      if (all) return l;
      // next base-l counter
      int pos = m - 1;
      while (pos >= 0 && colors[static_cast<std::size_t>(pos)] == l) {
        colors[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++colors[static_cast<std::size_t>(pos)];
    }
  }
  return g.order() - 1;  // a distinctly colored spanning tree always works
}

/// Relabels g by a permutation (new index perm[v] for old v).
inline rxi::Graph permute_graph(const rxi::Graph& g, const std::vector<int>& perm) {
  std::vector<rxi::Edge> edges;
  for (const rxi::Edge& e : g.edges())
    edges.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]});
  return rxi::make_graph(g.order(), std::move(edges));
}

}  // namespace oracle
