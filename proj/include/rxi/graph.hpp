#pragma once

// Immutable simple undirected graphs on up to 64 vertices.
//
// A Graph stores its edge list sorted lexicographically with u < v per edge;
// this order is normative everywhere: edge colorings are vectors indexed by
// edge-list position, and serialized coloring files index into the same
// order. Vertex subsets are 64-bit masks, edge subsets are fixed-capacity
// bitsets over edge-list positions. All values are immutable after
// construction, so concurrent reads are safe.

#include <algorithm>
#include <array>
#include <bit>
#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rxi {

inline constexpr int kMaxVertices = 64;
inline constexpr int kMaxEdges = 2048;

/// Bitmask over vertices 0..n-1.
using VertexSet = std::uint64_t;

/// Bitmask over edge-list positions 0..|E|-1.
using EdgeSubset = std::bitset<kMaxEdges>;

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline VertexSet vertex_set(std::initializer_list<int> vs) {
  VertexSet s = 0;
  for (int v : vs) s |= VertexSet{1} << v;
  return s;
}

inline std::vector<int> to_vertices(VertexSet s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

class Graph {
 public:
  Graph() = default;

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1; }

  /// Edge-list position of {u, v}, or -1 when the edge is absent.
  int edge_index(int u, int v) const {
    return eidx_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(v)];
  }

  VertexSet all_vertices() const {
    return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
  }

  int degree(int v) const { return std::popcount(neighbors(v)); }

 private:
  friend Graph make_graph(int n, std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_;
  std::vector<std::int16_t> eidx_;
};

/// Builds a graph from an edge list. Edges may arrive in either endpoint
/// order and are sorted into the canonical lexicographic order; loops,
/// duplicates and out-of-range endpoints are errors, never silently fixed.
inline Graph make_graph(int n, std::vector<Edge> edges) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("graph order must be between 1 and " +
                                std::to_string(kMaxVertices) + ", got " + std::to_string(n));
  for (Edge& e : edges) {
    if (e.u == e.v)
      throw std::invalid_argument("loop edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n)
      throw std::invalid_argument("vertex out of range in edge (" + std::to_string(e.u) +
                                  "," + std::to_string(e.v) + ") for order " + std::to_string(n));
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw std::invalid_argument("duplicate edge (" + std::to_string(edges[i].u) + "," +
                                  std::to_string(edges[i].v) + ")");
  if (static_cast<int>(edges.size()) > kMaxEdges)
    throw std::invalid_argument("edge count above supported limit");

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.adj_.assign(static_cast<std::size_t>(n), 0);
  g.eidx_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  for (int e = 0; e < g.size(); ++e) {
    const auto [u, v] = g.edges_[static_cast<std::size_t>(e)];
    g.adj_[static_cast<std::size_t>(u)] |= VertexSet{1} << v;
    g.adj_[static_cast<std::size_t>(v)] |= VertexSet{1} << u;
    g.eidx_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] =
        static_cast<std::int16_t>(e);
    g.eidx_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n) + static_cast<std::size_t>(u)] =
        static_cast<std::int16_t>(e);
  }
  return g;
}

/// True iff every vertex is reachable from vertex 0.
inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  VertexSet seen = 1, frontier = 1;
  while (frontier) {
    VertexSet next = 0;
    VertexSet f = frontier;
    while (f) {
      next |= g.neighbors(std::countr_zero(f));
      f &= f - 1;
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.all_vertices();
}

/// True iff the selected edges form a tree on the vertices they touch.
/// The empty subset is not a tree; a single edge is.
inline bool is_tree(const Graph& g, const EdgeSubset& sub) {
  std::array<int, kMaxVertices> parent;
  std::iota(parent.begin(), parent.begin() + g.order(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  int chosen = 0;
  VertexSet touched = 0;
  for (int e = 0; e < g.size(); ++e) {
    if (!sub.test(static_cast<std::size_t>(e))) continue;
    const auto [u, v] = g.edge(e);
    int ru = find(u), rv = find(v);
    if (ru == rv) return false;  // cycle
    parent[static_cast<std::size_t>(ru)] = rv;
    ++chosen;
    touched |= vertex_set({u, v});
  }
  if (chosen == 0) return false;
  return std::popcount(touched) == chosen + 1;
}

/// Length of a shortest cycle; std::nullopt marks a forest.
inline std::optional<int> girth(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  std::array<int, kMaxVertices> dist{}, par{};
  for (int r = 0; r < g.order(); ++r) {
    dist.fill(-1);
    par.fill(-1);
    dist[static_cast<std::size_t>(r)] = 0;
    std::array<int, kMaxVertices> queue{};
    int qh = 0, qt = 0;
    queue[qt++] = r;
    while (qh < qt) {
      int u = queue[qh++];
      VertexSet nb = g.neighbors(u);
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          par[static_cast<std::size_t>(w)] = u;
          queue[qt++] = w;
        }
      }
    }
    for (const Edge& e : g.edges()) {
      if (dist[static_cast<std::size_t>(e.u)] < 0 || dist[static_cast<std::size_t>(e.v)] < 0) continue;
      if (par[static_cast<std::size_t>(e.u)] == e.v || par[static_cast<std::size_t>(e.v)] == e.u) continue;
      best = std::min(best, dist[static_cast<std::size_t>(e.u)] + dist[static_cast<std::size_t>(e.v)] + 1);
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

/// Same vertex set, an edge present iff absent in g.
inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.push_back({u, v});
  return make_graph(g.order(), std::move(edges));
}

/// Adds one new vertex adjacent to every vertex of g (the join with K_1).
inline Graph apex_join(const Graph& g) {
  std::vector<Edge> edges = g.edges();
  for (int v = 0; v < g.order(); ++v) edges.push_back({v, g.order()});
  return make_graph(g.order() + 1, std::move(edges));
}

/// All k-subsets of {0..n-1} in lexicographic order of their sorted vertex
/// lists: (0,1,2), (0,1,3), ..., (n-k,...,n-1).
inline std::vector<VertexSet> k_subsets(int n, int k) {
  if (k < 2 || k > n) throw std::invalid_argument("k_subsets: k out of range");
  std::vector<VertexSet> out;
  std::vector<int> a(static_cast<std::size_t>(k));
  std::iota(a.begin(), a.end(), 0);
  while (true) {
    VertexSet s = 0;
    for (int v : a) s |= VertexSet{1} << v;
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && a[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++a[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      a[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

namespace detail {

inline int pair_count(int n) { return n * (n - 1) / 2; }

/// Rank of the pair (i, j), i < j, in the lexicographic pair order.
inline int pair_index(int n, int i, int j) {
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

/// For every permutation p of {0..n-1}, src[b] is the pair index of
/// (p[i], p[j]) where b is the pair index of (i, j). Permutations are listed
/// in lexicographic order, identity first. Cached per n (n <= 8).
struct PermTables {
  std::vector<std::array<std::uint8_t, 28>> src;
};

inline const PermTables& perm_tables(int n) {
  static std::array<PermTables, 9> cache;
  static std::array<bool, 9> built{};
  PermTables& t = cache[static_cast<std::size_t>(n)];
  if (!built[static_cast<std::size_t>(n)]) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
      std::array<std::uint8_t, 28> src{};
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          int a = p[static_cast<std::size_t>(i)], b = p[static_cast<std::size_t>(j)];
          if (a > b) std::swap(a, b);
          src[static_cast<std::size_t>(pair_index(n, i, j))] =
              static_cast<std::uint8_t>(pair_index(n, a, b));
        }
      t.src.push_back(src);
    } while (std::next_permutation(p.begin(), p.end()));
    built[static_cast<std::size_t>(n)] = true;
  }
  return t;
}

}  // namespace detail

/// Canonical form of a graph with n <= 8: the minimum over all vertex
/// permutations of the upper-triangle adjacency bit string, packed with the
/// (0,1) pair in the most significant bit. Equal codes iff isomorphic.
inline std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > 8) throw std::invalid_argument("canonical_code: order above documented limit 8");
  const int mb = detail::pair_count(n);
  std::array<std::uint8_t, 28> bits{};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      bits[static_cast<std::size_t>(detail::pair_index(n, i, j))] = g.adjacent(i, j) ? 1 : 0;
  const auto& tables = detail::perm_tables(n);
  std::uint64_t best = ~std::uint64_t{0};
  for (const auto& src : tables.src) {
    std::uint64_t code = 0;
    for (int b = 0; b < mb; ++b)
      code = (code << 1) | bits[src[static_cast<std::size_t>(b)]];
    best = std::min(best, code);
  }
  return best;
}

}  // namespace rxi
