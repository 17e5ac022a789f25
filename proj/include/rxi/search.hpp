#pragma once

// Exhaustive, isomorphism-reduced search certifying exact values of
// t(n, k, l): the minimum size of a connected order-n graph with rx_k <= l.
//
// Enumeration runs over raw edge masks for each edge count m, keeping the
// masks that are connected and canonically minimal (no vertex permutation
// yields a lexicographically smaller upper-triangle bit string). Equality of
// canonical forms is isomorphism, so exactly one representative per class
// survives, in deterministic ascending-mask order. At n <= 7 there are at
// most 2^21 masks per sweep, which keeps the certificate auditable; the
// per-m class counts are recorded so they can be checked against published
// graph-count tables.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rxi/graph.hpp"
#include "rxi/rx.hpp"
#include "rxi/verify.hpp"

namespace rxi {

struct SearchResult {
  int n = 0, k = 0, l = 0;
  std::optional<int> value;  // minimum size; absent = no graph qualifies
  std::optional<std::pair<Graph, EdgeColoring>> witness;
  std::int64_t graphs_examined = 0;
  // true when the whole range m = n-1 .. C(n,2) was exhausted (certified
  // nonexistence when value is absent)
  bool exhaustive = false;
  std::vector<std::pair<int, std::int64_t>> class_counts;  // per edge count m
};

namespace detail {

inline bool mask_connected(int n, const std::vector<Edge>& pairs, std::uint32_t mask) {
  std::array<std::uint8_t, 8> adj{};
  std::uint32_t bits = mask;
  while (bits) {
    const int b = std::countr_zero(bits);
    bits &= bits - 1;
    const auto [u, v] = pairs[static_cast<std::size_t>(b)];
    adj[static_cast<std::size_t>(u)] |= static_cast<std::uint8_t>(1u << v);
    adj[static_cast<std::size_t>(v)] |= static_cast<std::uint8_t>(1u << u);
  }
  const std::uint8_t all = static_cast<std::uint8_t>((1u << n) - 1);
  std::uint8_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint8_t next = 0;
    std::uint8_t f = frontier;
    while (f) {
      next |= adj[static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(f)))];
      f &= static_cast<std::uint8_t>(f - 1);
    }
    frontier = static_cast<std::uint8_t>(next & ~seen);
    seen |= next;
  }
  return seen == all;
}

/// True iff no vertex permutation maps the mask to a lexicographically
/// smaller upper-triangle bit string (pair (0,1) most significant).
inline bool mask_canonical(int n, std::uint32_t mask) {
  const int mb = pair_count(n);
  std::array<std::uint8_t, 28> bits{};
  for (int b = 0; b < mb; ++b) bits[static_cast<std::size_t>(b)] = (mask >> b) & 1;
  const auto& tables = perm_tables(n);
  for (std::size_t p = 1; p < tables.src.size(); ++p) {  // index 0 is identity
    const auto& src = tables.src[p];
    for (int b = 0; b < mb; ++b) {
      const std::uint8_t pb = bits[src[static_cast<std::size_t>(b)]];
      const std::uint8_t ob = bits[static_cast<std::size_t>(b)];
      if (pb != ob) {
        if (pb < ob) return false;
        break;  // this permutation is larger; try the next
      }
    }
  }
  return true;
}

}  // namespace detail

/// One representative per isomorphism class of connected graphs with n
/// vertices and m edges, in deterministic order.
inline std::vector<Graph> enumerate_connected(int n, int m) {
  if (n < 2 || n > 7) throw std::invalid_argument("enumerate_connected: order must be in 2..7");
  const int mb = detail::pair_count(n);
  if (m < n - 1 || m > mb) throw std::invalid_argument("enumerate_connected: edge count out of range");
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  // pairs[b] must be the pair with index b in the canonical pair order
  std::vector<Graph> out;
  const std::uint32_t limit = std::uint32_t{1} << mb;
  std::uint32_t mask = (std::uint32_t{1} << m) - 1;
  while (mask < limit) {
    if (detail::mask_connected(n, pairs, mask) && detail::mask_canonical(n, mask)) {
      std::vector<Edge> edges;
      std::uint32_t bits = mask;
      while (bits) {
        edges.push_back(pairs[static_cast<std::size_t>(std::countr_zero(bits))]);
        bits &= bits - 1;
      }
      out.push_back(make_graph(n, std::move(edges)));
    }
    // Gosper: next mask with the same popcount
    const std::uint32_t c = mask & (~mask + 1);
    const std::uint32_t r = mask + c;
    if (r >= limit || r < mask) break;
    mask = r | (((mask ^ r) >> 2) / c);
  }
  return out;
}

/// Certified t(n, k, l): scans edge counts upward, testing one representative
/// per isomorphism class with the exact solver; the first witness fixes the
/// value and is re-verified with a fresh verification pass. When the whole
/// range is exhausted without a witness the result certifies nonexistence.
inline SearchResult t_min(int n, int k, int l, const SolveBudget& budget = {}) {
  if (n < 2 || n > 7) throw std::invalid_argument("t_min: order must be in 2..7");
  if (k < 2 || k > n) throw std::invalid_argument("t_min: k out of range");
  if (l < 1 || l > n - 1) throw std::invalid_argument("t_min: l out of range");

  SearchResult result;
  result.n = n;
  result.k = k;
  result.l = l;
  std::int64_t used = 0;
  for (int m = n - 1; m <= detail::pair_count(n); ++m) {
    const std::vector<Graph> reps = enumerate_connected(n, m);
    result.class_counts.emplace_back(m, static_cast<std::int64_t>(reps.size()));
    for (const Graph& g : reps) {
      ++result.graphs_examined;
      const int sdiam = steiner_k_diameter(g, k);
      auto witness = detail::rx_at_most_impl(g, k, l, sdiam, used, budget.max_partitions);
      if (witness) {
        if (!verify_k_rainbow(g, *witness, k).ok)
          throw std::logic_error("internal: search witness failed re-verification");
        result.value = m;
        result.witness = std::make_pair(g, std::move(*witness));
        return result;
      }
    }
  }
  result.exhaustive = true;
  return result;
}

/// t(n, k, l) for every l in 2..n-1. Nonexistence entries sort above all
/// finite values; a violation of the non-increasing chain would mean a
/// solver bug and throws.
inline std::vector<std::pair<int, std::optional<int>>> check_monotone_chain(
    int n, int k, const SolveBudget& budget = {}) {
  if (n > 6) throw std::invalid_argument("check_monotone_chain: order must be <= 6");
  std::vector<std::pair<int, std::optional<int>>> chain;
  std::optional<int> prev;
  bool prev_finite = false;
  for (int l = 2; l <= n - 1; ++l) {
    const SearchResult r = t_min(n, k, l, budget);
    if (prev_finite && (!r.value || *r.value > *prev))
      throw std::logic_error("internal: t(n,k,l) chain is not non-increasing");
    chain.emplace_back(l, r.value);
    if (r.value) {
      prev = r.value;
      prev_finite = true;
    }
  }
  return chain;
}

}  // namespace rxi
