#pragma once

// Generators for the graph families with explicit edge colorings that
// realize the upper bounds on t(n,k,l), plus an auditor for the stated
// closed-form edge counts. Each colored generator returns the graph, the
// coloring, the claimed (k, number of colors) pair, and a map from internal
// vertex indexes to the construction's own vertex names (u, w_0, v_{i,j}, ...)
// so that failure reports can cite those names. Vertices are 0-indexed
// internally; each generator documents its own index mapping.

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rxi/coloring.hpp"
#include "rxi/graph.hpp"
#include "rxi/verify.hpp"

namespace rxi {

enum class Family {
  kPath,
  kCycle,
  kStar,
  kComplete,
  kCompleteBipartite,
  kBalancedBipartiteColored,
  kApexBipartite,
  kCocycleApex,
  kWheel,
  kWheelPendant,
  kLayeredBundle,
  kRose,
  kRoseTail,
  kK2Bipartite,
};

inline std::string family_name(Family f) {
  switch (f) {
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
    case Family::kStar: return "star";
    case Family::kComplete: return "complete";
    case Family::kCompleteBipartite: return "complete-bipartite";
    case Family::kBalancedBipartiteColored: return "balanced-bipartite";
    case Family::kApexBipartite: return "apex-bipartite";
    case Family::kCocycleApex: return "cocycle-apex";
    case Family::kWheel: return "wheel";
    case Family::kWheelPendant: return "wheel-pendant";
    case Family::kLayeredBundle: return "layered-bundle";
    case Family::kRose: return "rose";
    case Family::kRoseTail: return "rose-tail";
    case Family::kK2Bipartite: return "k2-bipartite";
  }
  return "unknown";
}

inline std::optional<Family> family_from_name(const std::string& s) {
  static const std::map<std::string, Family> names = {
      {"path", Family::kPath},
      {"cycle", Family::kCycle},
      {"star", Family::kStar},
      {"complete", Family::kComplete},
      {"complete-bipartite", Family::kCompleteBipartite},
      {"balanced-bipartite", Family::kBalancedBipartiteColored},
      {"apex-bipartite", Family::kApexBipartite},
      {"cocycle-apex", Family::kCocycleApex},
      {"wheel", Family::kWheel},
      {"wheel-pendant", Family::kWheelPendant},
      {"layered-bundle", Family::kLayeredBundle},
      {"rose", Family::kRose},
      {"rose-tail", Family::kRoseTail},
      {"k2-bipartite", Family::kK2Bipartite},
  };
  auto it = names.find(s);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

struct ConstructionSpec {
  Family family = Family::kPath;
  std::map<std::string, int> params;

  int param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end())
      throw std::invalid_argument("construction spec for " + family_name(family) +
                                  " is missing parameter '" + key + "'");
    return it->second;
  }
};

struct ColoredConstruction {
  ConstructionSpec spec;
  Graph graph;
  EdgeColoring coloring;
  int claimed_k = 0;
  int claimed_colors = 0;
  std::map<int, std::string> vertex_labels;
};

/// Uncolored base families. Wheel takes the spoke count (order is spokes+1);
/// Rose(p, q) is p cycles of length q sharing exactly one vertex.
inline Graph build_basic(const ConstructionSpec& spec) {
  switch (spec.family) {
    case Family::kPath: {
      const int n = spec.param("n");
      if (n < 1) throw std::invalid_argument("path: order must be >= 1");
      std::vector<Edge> edges;
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      return make_graph(n, std::move(edges));
    }
    case Family::kCycle: {
      const int n = spec.param("n");
      if (n < 3) throw std::invalid_argument("cycle: order must be >= 3");
      std::vector<Edge> edges;
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      edges.push_back({0, n - 1});
      return make_graph(n, std::move(edges));
    }
    case Family::kStar: {
      const int n = spec.param("n");
      if (n < 1) throw std::invalid_argument("star: order must be >= 1");
      std::vector<Edge> edges;
      for (int i = 1; i < n; ++i) edges.push_back({0, i});
      return make_graph(n, std::move(edges));
    }
    case Family::kComplete: {
      const int n = spec.param("n");
      if (n < 1) throw std::invalid_argument("complete: order must be >= 1");
      std::vector<Edge> edges;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
      return make_graph(n, std::move(edges));
    }
    case Family::kCompleteBipartite: {
      const int r = spec.param("r"), s = spec.param("s");
      if (r < 1 || s < 1) throw std::invalid_argument("complete-bipartite: parts must be >= 1");
      std::vector<Edge> edges;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) edges.push_back({i, r + j});
      return make_graph(r + s, std::move(edges));
    }
    case Family::kWheel: {
      const int spokes = spec.param("n");
      if (spokes < 3) throw std::invalid_argument("wheel: spoke count must be >= 3");
      return apex_join(build_basic({Family::kCycle, {{"n", spokes}}}));
    }
    case Family::kRose: {
      const int p = spec.param("p"), q = spec.param("q");
      if (p < 1 || q < 3) throw std::invalid_argument("rose: need p >= 1 petals of length q >= 3");
      std::vector<Edge> edges;
      for (int i = 0; i < p; ++i) {
        const int base = 1 + i * (q - 1);
        edges.push_back({0, base});
        for (int j = 0; j + 1 < q - 1; ++j) edges.push_back({base + j, base + j + 1});
        edges.push_back({0, base + q - 2});
      }
      return make_graph(1 + p * (q - 1), std::move(edges));
    }
    default:
      throw std::invalid_argument("build_basic: " + family_name(spec.family) +
                                  " is a colored construction");
  }
}

/// K_{r,r} with c(u_i w_j) = 1 if i = j, 2 if i < j, 3 if i > j.
/// Internal indexes: u_i -> i-1, w_j -> r+j-1.
inline ColoredConstruction colored_balanced_bipartite(int r) {
  if (r < 3) throw std::invalid_argument("balanced-bipartite: r must be >= 3");
  Graph g = build_basic({Family::kCompleteBipartite, {{"r", r}, {"s", r}}});
  std::vector<int> colors(static_cast<std::size_t>(g.size()));
  for (int e = 0; e < g.size(); ++e) {
    const int i = g.edge(e).u + 1;
    const int j = g.edge(e).v - r + 1;
    colors[static_cast<std::size_t>(e)] = i == j ? 1 : (i < j ? 2 : 3);
  }
  ColoredConstruction cc;
  cc.spec = {Family::kBalancedBipartiteColored, {{"r", r}}};
  cc.coloring = make_coloring(g, std::move(colors), 3);
  cc.graph = std::move(g);
  cc.claimed_k = 3;
  cc.claimed_colors = 3;
  for (int i = 1; i <= r; ++i) {
    cc.vertex_labels[i - 1] = "u_" + std::to_string(i);
    cc.vertex_labels[r + i - 1] = "w_" + std::to_string(i);
  }
  return cc;
}

/// The odd-order graph H = K_{h,h} joined with an apex v, h = (n-1)/2:
/// cross edges colored as in the balanced bipartite family, apex edges 2
/// toward U and 3 toward W. Internal indexes: u_i -> i-1, w_j -> h+j-1,
/// v -> n-1. Size (n+3)(n-1)/4.
inline ColoredConstruction colored_apex_bipartite(int n) {
  if (n < 7 || n % 2 == 0) throw std::invalid_argument("apex-bipartite: order must be odd and >= 7");
  const int h = (n - 1) / 2;
  std::vector<Edge> edges;
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) edges.push_back({i, h + j});
  for (int x = 0; x < n - 1; ++x) edges.push_back({x, n - 1});
  Graph g = make_graph(n, std::move(edges));
  std::vector<int> colors(static_cast<std::size_t>(g.size()));
  for (int e = 0; e < g.size(); ++e) {
    const auto [a, b] = g.edge(e);
    if (b == n - 1) {
      colors[static_cast<std::size_t>(e)] = a < h ? 2 : 3;
    } else {
      const int i = a + 1, j = b - h + 1;
      colors[static_cast<std::size_t>(e)] = i == j ? 1 : (i < j ? 2 : 3);
    }
  }
  ColoredConstruction cc;
  cc.spec = {Family::kApexBipartite, {{"n", n}}};
  cc.coloring = make_coloring(g, std::move(colors), 3);
  cc.graph = std::move(g);
  cc.claimed_k = 3;
  cc.claimed_colors = 3;
  for (int i = 1; i <= h; ++i) {
    cc.vertex_labels[i - 1] = "u_" + std::to_string(i);
    cc.vertex_labels[h + i - 1] = "w_" + std::to_string(i);
  }
  cc.vertex_labels[n - 1] = "v";
  return cc;
}

/// Complement of (cycle of order n-1 plus an isolated vertex): w is adjacent
/// to every v_i, and v_i ~ v_j iff they are non-adjacent on the complement
/// cycle v_1 v_2 ... v_{n-1}. The index classes X_1, X_2, X_3 are i = 1, 2, 0
/// (mod 3). Colors: 1 on [w,X_1] and inside X_3, 2 on [w,X_2] and inside X_1,
/// 3 on [w,X_3] and inside X_2, 4 on every cross-class v-edge. For n <= 6
/// some class is empty and the construction degenerates, hence n >= 7.
/// Internal indexes: v_i -> i-1, w -> n-1. Size C(n,2) - n + 1.
inline ColoredConstruction colored_cocycle_apex(int n) {
  if (n < 7) throw std::invalid_argument("cocycle-apex: order must be >= 7");
  const int c = n - 1;  // complement cycle order
  auto cycle_adjacent = [&](int i, int j) {
    const int d = std::abs(i - j);
    return d == 1 || d == c - 1;
  };
  auto klass = [](int i) { return i % 3 == 1 ? 1 : (i % 3 == 2 ? 2 : 3); };
  std::vector<Edge> edges;
  for (int i = 1; i <= c; ++i)
    for (int j = i + 1; j <= c; ++j)
      if (!cycle_adjacent(i, j)) edges.push_back({i - 1, j - 1});
  for (int i = 1; i <= c; ++i) edges.push_back({i - 1, n - 1});
  Graph g = make_graph(n, std::move(edges));
  // color 1 -> inner color 2, 2 -> 3, 3 -> 1 for edges inside a class
  auto inner_color = [](int x) { return x == 1 ? 2 : (x == 2 ? 3 : 1); };
  std::vector<int> colors(static_cast<std::size_t>(g.size()));
  for (int e = 0; e < g.size(); ++e) {
    const auto [a, b] = g.edge(e);
    if (b == n - 1) {
      colors[static_cast<std::size_t>(e)] = klass(a + 1);
    } else {
      const int ka = klass(a + 1), kb = klass(b + 1);
      colors[static_cast<std::size_t>(e)] = ka == kb ? inner_color(ka) : 4;
    }
  }
  ColoredConstruction cc;
  cc.spec = {Family::kCocycleApex, {{"n", n}}};
  cc.coloring = make_coloring(g, std::move(colors), 4);
  cc.graph = std::move(g);
  cc.claimed_k = 3;
  cc.claimed_colors = 4;
  for (int i = 1; i <= c; ++i) cc.vertex_labels[i - 1] = "v_" + std::to_string(i);
  cc.vertex_labels[n - 1] = "w";
  return cc;
}

/// Wheel with n-2 spokes plus a pendant vertex u attached to the hub v. The
/// supplied coloring of the wheel must itself be 3-rainbow (verified here);
/// the pendant edge takes a fresh color on top of its palette. Internal
/// indexes: rim w_1..w_{n-2} -> 0..n-4, hub v -> n-2, pendant u -> n-1.
/// Size 2n-3.
inline ColoredConstruction colored_wheel_pendant(int n, const EdgeColoring& wheel_coloring) {
  if (n < 5) throw std::invalid_argument("wheel-pendant: order must be >= 5");
  Graph wheel = build_basic({Family::kWheel, {{"n", n - 2}}});
  if (static_cast<int>(wheel_coloring.colors.size()) != wheel.size())
    throw std::invalid_argument("wheel-pendant: coloring does not match the wheel with " +
                                std::to_string(n - 2) + " spokes");
  if (!verify_k_rainbow(wheel, wheel_coloring, 3).ok)
    throw std::invalid_argument("wheel-pendant: supplied wheel coloring is not 3-rainbow");
  std::vector<Edge> edges = wheel.edges();
  edges.push_back({n - 2, n - 1});
  Graph g = make_graph(n, std::move(edges));
  // the pendant pair (n-2, n-1) sorts last, so wheel edge indexes carry over
  std::vector<int> colors = wheel_coloring.colors;
  colors.push_back(wheel_coloring.palette + 1);
  ColoredConstruction cc;
  cc.spec = {Family::kWheelPendant, {{"n", n}}};
  cc.coloring = make_coloring(g, std::move(colors), wheel_coloring.palette + 1);
  cc.graph = std::move(g);
  cc.claimed_k = 3;
  cc.claimed_colors = wheel_coloring.palette + 1;
  for (int i = 1; i <= n - 2; ++i) cc.vertex_labels[i - 1] = "w_" + std::to_string(i);
  cc.vertex_labels[n - 2] = "v";
  cc.vertex_labels[n - 1] = "u";
  return cc;
}

/// Bundle of t near-parallel u-w paths tied together by level cliques, for
/// 7 <= l <= (n-1)/2. Paths Q_1..Q_{t-1} have length l-2; Q_t is full when
/// (l-3) divides n-2 and otherwise stops at level s. Level cliques span all t
/// paths up to level s and paths 1..t-1 above it. Colors: edges leaving u get
/// 1, the edge entering level j gets j, edges into w get l-2, uw gets l-1,
/// and every level-clique edge gets l. Internal indexes: u -> 0, w -> 1,
/// v_{i,j} -> 2 + (i-1)(l-3) + (j-1).
inline ColoredConstruction colored_layered_bundle(int n, int l) {
  // n = 2l (one below the stated regime) still yields three full paths and a
  // verifying coloring; the size audit needs that point
  if (l < 7 || 2 * l > n)
    throw std::invalid_argument("layered-bundle: need l >= 7 and n >= 2l");
  const int step = l - 3;
  const int t = (n - 2 + step - 1) / step;
  const bool full = (n - 2) % step == 0;
  const int s = full ? step : n - ((n - 2) / step) * step - 2;
  auto vtx = [&](int i, int j) { return 2 + (i - 1) * step + (j - 1); };
  auto path_len = [&](int i) { return i < t || full ? step : s; };

  std::vector<std::pair<Edge, int>> colored_edges;
  for (int i = 1; i <= t; ++i) {
    const int len = path_len(i);
    colored_edges.push_back({{0, vtx(i, 1)}, 1});
    for (int j = 2; j <= len; ++j) colored_edges.push_back({{vtx(i, j - 1), vtx(i, j)}, j});
    colored_edges.push_back({{vtx(i, len), 1}, l - 2});
  }
  colored_edges.push_back({{0, 1}, l - 1});
  for (int j = 1; j <= step; ++j) {
    const int span = j <= s ? t : t - 1;
    for (int i1 = 1; i1 <= span; ++i1)
      for (int i2 = i1 + 1; i2 <= span; ++i2)
        colored_edges.push_back({{vtx(i1, j), vtx(i2, j)}, l});
  }

  std::vector<Edge> edges;
  for (const auto& [e, col] : colored_edges) edges.push_back(e);
  Graph g = make_graph(n, std::move(edges));
  std::vector<int> colors(static_cast<std::size_t>(g.size()));
  for (const auto& [e, col] : colored_edges) {
    const int idx = g.edge_index(std::min(e.u, e.v), std::max(e.u, e.v));
    colors[static_cast<std::size_t>(idx)] = col;
  }
  ColoredConstruction cc;
  cc.spec = {Family::kLayeredBundle, {{"n", n}, {"l", l}}};
  cc.coloring = make_coloring(g, std::move(colors), l);
  cc.graph = std::move(g);
  cc.claimed_k = 3;
  cc.claimed_colors = l;
  cc.vertex_labels[0] = "u";
  cc.vertex_labels[1] = "w";
  for (int i = 1; i <= t; ++i)
    for (int j = 1; j <= path_len(i); ++j)
      cc.vertex_labels[vtx(i, j)] = "v_{" + std::to_string(i) + "," + std::to_string(j) + "}";
  return cc;
}

/// Rose of n-l triangles w_0 v_i u_i with a tail path w_0 w_1 ... of order
/// 2l-n hanging off the center, for ceil((n+1)/2) <= l <= n-3. The stated
/// lower limit n/2 would add an extra vertex at 2l = n, so it is excluded.
/// Spokes of petal i get color i, tail edge w_{i-1}w_i gets n-l+i, chords
/// u_i v_i get l. Internal indexes: w_0 -> 0, v_i -> 2i-1, u_i -> 2i,
/// w_i -> 2(n-l)+i. Size 2n-l-1.
inline ColoredConstruction colored_rose_tail(int n, int l) {
  if (2 * l < n + 1 || l > n - 3)
    throw std::invalid_argument("rose-tail: need ceil((n+1)/2) <= l <= n-3");
  const int p = n - l;
  const int tail = 2 * l - n;  // order of the tail path, >= 1
  std::vector<std::pair<Edge, int>> colored_edges;
  for (int i = 1; i <= p; ++i) {
    const int vi = 2 * i - 1, ui = 2 * i;
    colored_edges.push_back({{0, vi}, i});
    colored_edges.push_back({{0, ui}, i});
    colored_edges.push_back({{vi, ui}, l});
  }
  for (int i = 1; i <= tail - 1; ++i) {
    const int a = i == 1 ? 0 : 2 * p + i - 1;
    colored_edges.push_back({{a, 2 * p + i}, n - l + i});
  }
  std::vector<Edge> edges;
  for (const auto& [e, col] : colored_edges) edges.push_back(e);
  Graph g = make_graph(n, std::move(edges));
  std::vector<int> colors(static_cast<std::size_t>(g.size()));
  for (const auto& [e, col] : colored_edges)
    colors[static_cast<std::size_t>(g.edge_index(e.u, e.v))] = col;
  ColoredConstruction cc;
  cc.spec = {Family::kRoseTail, {{"n", n}, {"l", l}}};
  cc.coloring = make_coloring(g, std::move(colors), l);
  cc.graph = std::move(g);
  cc.claimed_k = 3;
  cc.claimed_colors = l;
  cc.vertex_labels[0] = "w_0";
  for (int i = 1; i <= p; ++i) {
    cc.vertex_labels[2 * i - 1] = "v_" + std::to_string(i);
    cc.vertex_labels[2 * i] = "u_" + std::to_string(i);
  }
  for (int i = 1; i <= tail - 1; ++i)
    cc.vertex_labels[2 * p + i] = "w_" + std::to_string(i);
  return cc;
}

/// K_{2,n-2} colored for k = n-1 with n-2 colors: c(u v_i) = i and the
/// w-side colors are the reversal n-1-i. For odd n the plain reversal fixes
/// the middle index, which kills the color (n-1)/2 on the subset avoiding
/// v_{(n-1)/2}; the two middle w-side colors are swapped there, which keeps
/// every w-color off its own u-index and restores the property. Even orders
/// match the reversal exactly. Internal indexes: u -> 0, w -> 1, v_i -> i+1.
/// Size 2n-4.
inline ColoredConstruction colored_k2_bipartite(int n) {
  if (n < 4) throw std::invalid_argument("k2-bipartite: order must be >= 4");
  auto w_color = [&](int i) {
    if (n % 2 == 1) {
      const int mid = (n - 1) / 2;
      if (i == mid) return mid - 1;
      if (i == mid + 1) return mid;
    }
    return n - 1 - i;
  };
  std::vector<std::pair<Edge, int>> colored_edges;
  for (int i = 1; i <= n - 2; ++i) {
    colored_edges.push_back({{0, i + 1}, i});
    colored_edges.push_back({{1, i + 1}, w_color(i)});
  }
  std::vector<Edge> edges;
  for (const auto& [e, col] : colored_edges) edges.push_back(e);
  Graph g = make_graph(n, std::move(edges));
  std::vector<int> colors(static_cast<std::size_t>(g.size()));
  for (const auto& [e, col] : colored_edges)
    colors[static_cast<std::size_t>(g.edge_index(e.u, e.v))] = col;
  ColoredConstruction cc;
  cc.spec = {Family::kK2Bipartite, {{"n", n}}};
  cc.coloring = make_coloring(g, std::move(colors), n - 2);
  cc.graph = std::move(g);
  cc.claimed_k = n - 1;
  cc.claimed_colors = n - 2;
  cc.vertex_labels[0] = "u";
  cc.vertex_labels[1] = "w";
  for (int i = 1; i <= n - 2; ++i) cc.vertex_labels[i + 1] = "v_" + std::to_string(i);
  return cc;
}

/// The stated closed-form edge count of a bounded family, computed verbatim
/// from the printed formula even where it disagrees with the built graph
/// (the layered bundle audit reports both numbers).
inline long long claimed_size_formula(const ConstructionSpec& spec) {
  auto choose2 = [](long long x) { return x * (x - 1) / 2; };
  switch (spec.family) {
    case Family::kBalancedBipartiteColored: {
      const long long r = spec.param("r");
      return r * r;
    }
    case Family::kApexBipartite: {
      const long long n = spec.param("n");
      return (n + 3) * (n - 1) / 4;
    }
    case Family::kCocycleApex: {
      const long long n = spec.param("n");
      return choose2(n) - n + 1;
    }
    case Family::kWheel: {
      const long long spokes = spec.param("n");
      return 2 * spokes;  // 2n-2 at order n = spokes+1
    }
    case Family::kWheelPendant: {
      const long long n = spec.param("n");
      return 2 * n - 3;
    }
    case Family::kLayeredBundle: {
      const long long n = spec.param("n");
      const long long l = spec.param("l");
      const long long fl = (n - 2) / (l - 3);
      const long long t = (n - 2 + l - 4) / (l - 3);
      // second binomial is over t + floor - ceil, and t is the ceiling
      return n + t + choose2(t) * (n - 2 - fl * (l - 3)) +
             choose2(fl) * (l + 1 - n + fl * (l - 3));
    }
    case Family::kRoseTail: {
      const long long n = spec.param("n");
      const long long l = spec.param("l");
      return 2 * n - l - 1;
    }
    case Family::kK2Bipartite: {
      const long long n = spec.param("n");
      return 2 * n - 4;
    }
    default:
      throw std::invalid_argument("no stated size formula for family " +
                                  family_name(spec.family));
  }
}

/// Decodes a Prufer sequence over 0..n-1 (n = length + 2) into its tree.
inline Graph prufer_tree(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : seq) {
    if (x < 0 || x >= n) throw std::invalid_argument("prufer_tree: label out of range");
    ++degree[static_cast<std::size_t>(x)];
  }
  std::vector<Edge> edges;
  for (int x : seq) {
    for (int u = 0; u < n; ++u) {
      if (degree[static_cast<std::size_t>(u)] == 1) {
        edges.push_back({u, x});
        --degree[static_cast<std::size_t>(u)];
        --degree[static_cast<std::size_t>(x)];
        break;
      }
    }
  }
  std::vector<int> last;
  for (int u = 0; u < n; ++u)
    if (degree[static_cast<std::size_t>(u)] == 1) last.push_back(u);
  edges.push_back({last[0], last[1]});
  return make_graph(n, std::move(edges));
}

/// Seeded tree fixture: a uniformly random Prufer sequence.
inline Graph random_tree(int n, std::mt19937& rng) {
  if (n < 2) throw std::invalid_argument("random_tree: order must be >= 2");
  if (n == 2) return make_graph(2, {{0, 1}});
  std::vector<int> seq(static_cast<std::size_t>(n) - 2);
  std::uniform_int_distribution<int> dist(0, n - 1);
  for (int& x : seq) x = dist(rng);
  return prufer_tree(seq);
}

}  // namespace rxi
