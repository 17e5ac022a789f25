#pragma once

// Built-in registry of every claim the toolkit can check at desk scale:
// exact rainbow indexes of the fixture families, exact t(n,k,l) values and
// nonexistence sweeps, verification of each colored construction on its
// parameter grid, and the edge-count audits. `repro` runs the registry and
// emits one row per claim.
//
// Statuses: confirmed / refuted are self-explanatory; discrepancy-noted
// marks audits that are expected to disagree with a stated formula while the
// underlying bound still verifies (those do not fail the run);
// skipped-out-of-scale marks claims that exceed what exhaustive desk-scale
// search can decide.

#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rxi/construct.hpp"
#include "rxi/graph.hpp"
#include "rxi/rx.hpp"
#include "rxi/search.hpp"
#include "rxi/verify.hpp"

namespace rxi {

enum class ClaimStatus { kConfirmed, kRefuted, kDiscrepancyNoted, kSkipped };

inline std::string status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kConfirmed: return "confirmed";
    case ClaimStatus::kRefuted: return "refuted";
    case ClaimStatus::kDiscrepancyNoted: return "discrepancy-noted";
    case ClaimStatus::kSkipped: return "skipped-out-of-scale";
  }
  return "unknown";
}

struct ClaimOutcome {
  std::string computed;
  ClaimStatus status = ClaimStatus::kConfirmed;
};

struct Claim {
  std::string id;
  std::string tag;       // the statement being checked
  std::string params;
  std::string expected;
  int scale_n = 0;       // largest graph order the check touches
  std::function<ClaimOutcome()> run;
};

struct ReproRow {
  std::string id, tag, params, expected, computed;
  ClaimStatus status = ClaimStatus::kSkipped;
  std::int64_t millis = 0;
};

struct ReproReport {
  std::vector<ReproRow> rows;
  bool any_refuted() const {
    for (const auto& r : rows)
      if (r.status == ClaimStatus::kRefuted) return true;
    return false;
  }
};

namespace detail {

inline bool verify_cc(const ColoredConstruction& cc) {
  return verify_k_rainbow(cc.graph, cc.coloring, cc.claimed_k).ok;
}

inline std::string opt_str(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "none";
}

inline ClaimOutcome confirm_if(bool ok, std::string computed) {
  return ClaimOutcome{std::move(computed), ok ? ClaimStatus::kConfirmed : ClaimStatus::kRefuted};
}

/// A 3-rainbow wheel coloring from the exact solver. Wheels up to 6 spokes
/// are solved exactly; the 7-spoke wheel is answered through the decision
/// form at 4 colors (5 as a fallback), which is all the pendant construction
/// needs.
inline EdgeColoring solved_wheel_coloring(int spokes) {
  const Graph wheel = build_basic({Family::kWheel, {{"n", spokes}}});
  if (spokes <= 6) return rx_exact(wheel, 3).witness;
  for (int l = 4; l <= 5; ++l)
    if (auto w = rx_at_most(wheel, 3, l)) return *w;
  throw std::logic_error("internal: wheel admits no 3-rainbow coloring with 5 colors");
}

/// 2-connected test by deleting each vertex (orders here are tiny).
inline bool is_biconnected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (int cut = 0; cut < g.order(); ++cut) {
    const VertexSet rest = g.all_vertices() & ~(VertexSet{1} << cut);
    const int start = std::countr_zero(rest);
    VertexSet seen = VertexSet{1} << start, frontier = seen;
    while (frontier) {
      VertexSet next = 0;
      VertexSet f = frontier;
      while (f) {
        next |= g.neighbors(std::countr_zero(f));
        f &= f - 1;
      }
      next &= rest;
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != rest) return false;
  }
  return true;
}

}  // namespace detail

inline std::vector<Claim> repro_registry() {
  std::vector<Claim> claims;

  claims.push_back({"rx3-tree-order", "rx_3(T) = n-1 for every tree", "20 seeded trees, n in 4..7",
                    "n-1 for all", 7, [] {
    std::mt19937 rng(20240127);
    int bad = 0;
    std::string first_bad;
    for (int n = 4; n <= 7; ++n)
      for (int rep = 0; rep < 5; ++rep) {
        const Graph t = random_tree(n, rng);
        const int rx = rx_exact(t, 3).value;
        if (rx != n - 1 && ++bad == 1)
          first_bad = "n=" + std::to_string(n) + " gave " + std::to_string(rx);
      }
    return detail::confirm_if(bad == 0,
                              bad == 0 ? "n-1 for all 20 trees" : first_bad);
  }});

  claims.push_back({"rx3-cycle", "rx_3(C_n) = n-2 for n >= 4", "n in 4..8", "n-2 for all", 8, [] {
    std::string got;
    bool ok = true;
    for (int n = 4; n <= 8; ++n) {
      const int rx = rx_exact(build_basic({Family::kCycle, {{"n", n}}}), 3).value;
      ok = ok && rx == n - 2;
      got += (got.empty() ? "" : " ") + std::to_string(n) + ":" + std::to_string(rx);
    }
    return detail::confirm_if(ok, got);
  }});

  claims.push_back({"rx3-cycle-order3", "rx_3(C_3) = 2", "n=3", "2", 3, [] {
    const int rx = rx_exact(build_basic({Family::kCycle, {{"n", 3}}}), 3).value;
    return detail::confirm_if(rx == 2, std::to_string(rx));
  }});

  claims.push_back({"rx3-unicyclic-girth", "rx_3 of a non-cycle unicyclic graph is n-1 if girth 3, else n-2",
                    "all classes, n in 5..6", "dichotomy holds", 6, [] {
    int checked = 0;
    for (int n = 5; n <= 6; ++n)
      for (const Graph& g : enumerate_connected(n, n)) {
        const auto gi = girth(g);
        if (*gi == n) continue;  // the cycle itself
        const int rx = rx_exact(g, 3).value;
        const int want = *gi == 3 ? n - 1 : n - 2;
        if (rx != want)
          return ClaimOutcome{"violated at n=" + std::to_string(n), ClaimStatus::kRefuted};
        ++checked;
      }
    return ClaimOutcome{"dichotomy holds on " + std::to_string(checked) + " graphs",
                        ClaimStatus::kConfirmed};
  }});

  claims.push_back({"rx3-eq2-characterization",
                    "rx_3(G) = 2 iff G = K_5, or G is 2-connected of order 4, or order 3",
                    "all connected classes, n in 3..5", "equivalence holds", 5, [] {
    int two_count = 0, checked = 0;
    for (int n = 3; n <= 5; ++n)
      for (int m = n - 1; m <= detail::pair_count(n); ++m)
        for (const Graph& g : enumerate_connected(n, m)) {
          const bool is_two = rx_exact(g, 3).value == 2;
          const bool predicted =
              n == 3 || (n == 4 && detail::is_biconnected(g)) || (n == 5 && m == 10);
          if (is_two != predicted)
            return ClaimOutcome{"mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m),
                                ClaimStatus::kRefuted};
          two_count += is_two;
          ++checked;
        }
    return ClaimOutcome{"equivalence holds on " + std::to_string(checked) + " graphs (" +
                            std::to_string(two_count) + " with rx_3 = 2)",
                        ClaimStatus::kConfirmed};
  }});

  claims.push_back({"rx3-balanced-bipartite", "rx_3(K_{r,r}) = 3 for r >= 3",
                    "exact at r=3; coloring verified for r in 3..6", "3", 12, [] {
    const int rx = rx_exact(build_basic({Family::kCompleteBipartite, {{"r", 3}, {"s", 3}}}), 3).value;
    bool ok = rx == 3;
    for (int r = 3; r <= 6 && ok; ++r) ok = detail::verify_cc(colored_balanced_bipartite(r));
    return detail::confirm_if(ok, "rx_3(K_{3,3}) = " + std::to_string(rx) +
                                      "; colorings verify through r=6");
  }});

  claims.push_back({"rx3-wheel-small", "rx_3(W_n) = 2, 3, 3, 3 for n = 3, 4, 5, 6",
                    "spokes in 3..6", "2 3 3 3", 7, [] {
    std::string got;
    bool ok = true;
    const int want[4] = {2, 3, 3, 3};
    for (int s = 3; s <= 6; ++s) {
      const int rx = rx_exact(build_basic({Family::kWheel, {{"n", s}}}), 3).value;
      ok = ok && rx == want[s - 3];
      got += (got.empty() ? "" : " ") + std::to_string(rx);
    }
    return detail::confirm_if(ok, got);
  }});

  claims.push_back({"rx3-wheel-large", "rx_3(W_n) = 4 for 7 <= n <= 16 and 5 for n >= 17",
                    "spokes >= 7", "4 / 5", 18, [] {
    return ClaimOutcome{"not decidable by exhaustive search at desk scale", ClaimStatus::kSkipped};
  }});

  struct TValue { const char* id; int n, k, l, want; };
  for (const TValue tv : {TValue{"t-332", 3, 3, 2, 2}, TValue{"t-432", 4, 3, 2, 4},
                          TValue{"t-532", 5, 3, 2, 10}, TValue{"t-433", 4, 3, 3, 3},
                          TValue{"t-533", 5, 3, 3, 5}}) {
    claims.push_back({tv.id,
                      "t(" + std::to_string(tv.n) + ",3," + std::to_string(tv.l) + ") = " +
                          std::to_string(tv.want),
                      "n=" + std::to_string(tv.n) + " k=3 l=" + std::to_string(tv.l),
                      std::to_string(tv.want), tv.n, [tv] {
      const SearchResult r = t_min(tv.n, tv.k, tv.l);
      return detail::confirm_if(r.value && *r.value == tv.want, detail::opt_str(r.value));
    }});
  }

  for (int n : {6, 7}) {
    const std::int64_t known_total = n == 6 ? 112 : 853;
    claims.push_back({"t-" + std::to_string(n) + "32-nonexistence",
                      "no connected graph of order " + std::to_string(n) + " has rx_3 <= 2",
                      "n=" + std::to_string(n) + " k=3 l=2, full sweep",
                      "none; " + std::to_string(known_total) + " classes", n, [n, known_total] {
      const SearchResult r = t_min(n, 3, 2);
      std::int64_t total = 0;
      for (const auto& [m, count] : r.class_counts) total += count;
      const bool ok = !r.value && r.exhaustive && total == known_total;
      return detail::confirm_if(ok, detail::opt_str(r.value) + "; examined " +
                                        std::to_string(r.graphs_examined) + " classes of " +
                                        std::to_string(total));
    }});
  }

  claims.push_back({"t-n-minus-2", "t(n,3,n-2) = n", "n in 5..7", "5 6 7", 7, [] {
    std::string got;
    bool ok = true;
    for (int n = 5; n <= 7; ++n) {
      const SearchResult r = t_min(n, 3, n - 2);
      ok = ok && r.value && *r.value == n;
      got += (got.empty() ? "" : " ") + detail::opt_str(r.value);
    }
    return detail::confirm_if(ok, got);
  }});

  claims.push_back({"t-n-minus-1", "t(n,3,n-1) = n-1", "n in 5..7", "4 5 6", 7, [] {
    std::string got;
    bool ok = true;
    for (int n = 5; n <= 7; ++n) {
      const SearchResult r = t_min(n, 3, n - 1);
      ok = ok && r.value && *r.value == n - 1;
      got += (got.empty() ? "" : " ") + detail::opt_str(r.value);
    }
    return detail::confirm_if(ok, got);
  }});

  claims.push_back({"t-n33-even-upper", "t(n,3,3) <= n^2/4 for even n >= 6",
                    "K_{3,3} at n=6, plus exact t(6,3,3)", "<= 9", 6, [] {
    const ColoredConstruction cc = colored_balanced_bipartite(3);
    const bool cv = detail::verify_cc(cc) && cc.graph.size() == 9;
    const SearchResult r = t_min(6, 3, 3);
    const bool ok = cv && r.value && *r.value <= 9;
    return detail::confirm_if(ok, "construction gives 9; exact t(6,3,3) = " +
                                      detail::opt_str(r.value));
  }});

  claims.push_back({"t-n33-odd-upper", "t(n,3,3) <= (n+3)(n-1)/4 for odd n >= 7",
                    "n in {7,9,11,13,15}", "all verify at stated size", 15, [] {
    for (int n = 7; n <= 15; n += 2) {
      const ColoredConstruction cc = colored_apex_bipartite(n);
      if (!detail::verify_cc(cc) || cc.graph.size() != claimed_size_formula(cc.spec))
        return ClaimOutcome{"failed at n=" + std::to_string(n), ClaimStatus::kRefuted};
    }
    return ClaimOutcome{"all verify at stated size", ClaimStatus::kConfirmed};
  }});

  claims.push_back({"t-n34-upper", "t(n,3,4) <= C(n,2) - n + 1", "n in 7..12",
                    "all verify at stated size", 12, [] {
    for (int n = 7; n <= 12; ++n) {
      const ColoredConstruction cc = colored_cocycle_apex(n);
      if (!detail::verify_cc(cc) || cc.graph.size() != claimed_size_formula(cc.spec))
        return ClaimOutcome{"failed at n=" + std::to_string(n), ClaimStatus::kRefuted};
    }
    return ClaimOutcome{"all verify at stated size", ClaimStatus::kConfirmed};
  }});

  claims.push_back({"t-n35-upper", "t(n,3,5) <= 2n-2 through wheels", "orders 4..7",
                    "rx_3(W_{n-1}) <= 5 at size 2n-2", 7, [] {
    for (int spokes = 3; spokes <= 6; ++spokes) {
      const Graph w = build_basic({Family::kWheel, {{"n", spokes}}});
      const int order = spokes + 1;
      if (rx_exact(w, 3).value > 5 || w.size() != 2 * order - 2)
        return ClaimOutcome{"failed at order " + std::to_string(order), ClaimStatus::kRefuted};
    }
    return ClaimOutcome{"holds for orders 4..7; larger wheels rest on the cited values",
                        ClaimStatus::kConfirmed};
  }});

  claims.push_back({"t-n36-upper", "t(n,3,6) <= 2n-3 through a pendant on the wheel hub",
                    "n in 5..9 over solver colorings of W_3..W_7", "all verify at size 2n-3", 9, [] {
    for (int n = 5; n <= 9; ++n) {
      const ColoredConstruction cc =
          colored_wheel_pendant(n, detail::solved_wheel_coloring(n - 2));
      if (!detail::verify_cc(cc) || cc.graph.size() != 2 * n - 3 || cc.claimed_colors > 6)
        return ClaimOutcome{"failed at n=" + std::to_string(n), ClaimStatus::kRefuted};
    }
    return ClaimOutcome{"all verify at size 2n-3 with at most 6 colors", ClaimStatus::kConfirmed};
  }});

  claims.push_back({"bundle-verify", "the layered path bundle is 3-rainbow with l colors",
                    "(n,l) in {(15,7),(16,7),(17,7),(19,8)}", "all verify", 19, [] {
    for (const auto& [n, l] : std::vector<std::pair<int, int>>{{15, 7}, {16, 7}, {17, 7}, {19, 8}}) {
      const ColoredConstruction cc = colored_layered_bundle(n, l);
      if (!detail::verify_cc(cc))
        return ClaimOutcome{"failed at (" + std::to_string(n) + "," + std::to_string(l) + ")",
                            ClaimStatus::kRefuted};
    }
    return ClaimOutcome{"all verify", ClaimStatus::kConfirmed};
  }});

  claims.push_back({"bundle-size-audit",
                    "stated bundle size formula vs the built graph",
                    "(n,l) in {(14,7),(15,7),(16,7),(17,7),(19,8)}",
                    "built <= formula; (14,7): 35, (16,7): 44 as printed", 19, [] {
    std::string got;
    for (const auto& [n, l] :
         std::vector<std::pair<int, int>>{{14, 7}, {15, 7}, {16, 7}, {17, 7}, {19, 8}}) {
      const ColoredConstruction cc = colored_layered_bundle(n, l);
      const long long formula = claimed_size_formula(cc.spec);
      if (cc.graph.size() > formula || !detail::verify_cc(cc))
        return ClaimOutcome{"bound broken at (" + std::to_string(n) + "," + std::to_string(l) + ")",
                            ClaimStatus::kRefuted};
      got += (got.empty() ? "" : "; ") + ("(" + std::to_string(n) + "," + std::to_string(l) +
             "): built " + std::to_string(cc.graph.size()) + ", formula " + std::to_string(formula));
    }
    // the built graphs verify, so the smaller direct counts stand; the
    // printed formula overshoots and the difference is recorded, not decided
    return ClaimOutcome{got, ClaimStatus::kDiscrepancyNoted};
  }});

  claims.push_back({"rose-tail-upper", "t(n,3,l) <= 2n-l-1 for ceil((n+1)/2) <= l <= n-3",
                    "all valid (n,l) with n in 8..12", "all verify at size 2n-l-1", 12, [] {
    int count = 0;
    for (int n = 8; n <= 12; ++n)
      for (int l = (n + 2) / 2; l <= n - 3; ++l) {
        const ColoredConstruction cc = colored_rose_tail(n, l);
        if (!detail::verify_cc(cc) || cc.graph.size() != 2 * n - l - 1)
          return ClaimOutcome{"failed at (" + std::to_string(n) + "," + std::to_string(l) + ")",
                              ClaimStatus::kRefuted};
        ++count;
      }
    return ClaimOutcome{"all " + std::to_string(count) + " cases verify at size 2n-l-1",
                        ClaimStatus::kConfirmed};
  }});

  claims.push_back({"rx3-eq-n-1-characterization",
                    "rx_3(G) = n-1 iff G is a tree or unicyclic with girth 3",
                    "all connected classes, n in 4..5", "equivalence holds", 5, [] {
    int checked = 0;
    for (int n = 4; n <= 5; ++n)
      for (int m = n - 1; m <= detail::pair_count(n); ++m)
        for (const Graph& g : enumerate_connected(n, m)) {
          const bool is_max = rx_exact(g, 3).value == n - 1;
          const auto gi = girth(g);
          const bool predicted = m == n - 1 || (m == n && gi && *gi == 3);
          if (is_max != predicted)
            return ClaimOutcome{"mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m),
                                ClaimStatus::kRefuted};
          ++checked;
        }
    return ClaimOutcome{"equivalence holds on " + std::to_string(checked) + " graphs",
                        ClaimStatus::kConfirmed};
  }});

  claims.push_back({"k2-bipartite-upper", "t(n,n-1,n-2) <= 2n-4 through K_{2,n-2}",
                    "n in 4..10", "all verify at size 2n-4", 10, [] {
    for (int n = 4; n <= 10; ++n) {
      const ColoredConstruction cc = colored_k2_bipartite(n);
      if (!detail::verify_cc(cc) || cc.graph.size() != 2 * n - 4)
        return ClaimOutcome{"failed at n=" + std::to_string(n), ClaimStatus::kRefuted};
    }
    return ClaimOutcome{"all verify at size 2n-4", ClaimStatus::kConfirmed};
  }});

  claims.push_back({"k2-coloring-audit",
                    "the plain reversal w-coloring of K_{2,n-2} for k = n-1",
                    "n in 4..10", "verifies for all n >= 4 as stated", 10, [] {
    std::string odd_failures;
    for (int n = 4; n <= 10; ++n) {
      const ColoredConstruction cc = colored_k2_bipartite(n);
      std::vector<int> strict(static_cast<std::size_t>(cc.graph.size()));
      for (int e = 0; e < cc.graph.size(); ++e) {
        const auto [a, b] = cc.graph.edge(e);
        const int i = b - 1;  // v_i -> i+1
        strict[static_cast<std::size_t>(e)] = a == 0 ? i : n - 1 - i;
      }
      const auto report =
          verify_k_rainbow(cc.graph, make_coloring(cc.graph, strict, n - 2), n - 1);
      if (report.ok != (n % 2 == 0))
        return ClaimOutcome{"unexpected outcome at n=" + std::to_string(n),
                            ClaimStatus::kRefuted};
      if (!report.ok) {
        std::string subset;
        for (int v : to_vertices(*report.first_failure))
          subset += (subset.empty() ? "" : ",") + std::to_string(v);
        odd_failures += " n=" + std::to_string(n) + " fails on {" + subset + "}";
      }
    }
    // for odd n the reversal fixes the middle index and the middle color
    // disappears from the subset avoiding that vertex; the shipped generator
    // swaps the two middle w-colors instead (and is covered by
    // k2-bipartite-upper)
    return ClaimOutcome{"verifies for even n only;" + odd_failures,
                        ClaimStatus::kDiscrepancyNoted};
  }});

  claims.push_back({"monotone-chain", "t(n,k,2) >= t(n,k,3) >= ... >= t(n,k,n-1)",
                    "(n,k) in {(4,3),(5,3),(6,3)}", "non-increasing", 6, [] {
    std::string got;
    for (int n = 4; n <= 6; ++n) {
      const auto chain = check_monotone_chain(n, 3);  // throws on violation
      got += (got.empty() ? "n=" : "; n=") + std::to_string(n) + ":";
      for (const auto& [l, v] : chain) got += " " + detail::opt_str(v);
    }
    return ClaimOutcome{got, ClaimStatus::kConfirmed};
  }});

  return claims;
}

/// Runs the registry. Claims whose scale exceeds max_n are reported as
/// skipped; when a filter is given, only matching claim ids run (the others
/// are omitted).
inline ReproReport run_repro(int max_n = kMaxVertices,
                             const std::set<std::string>* filter = nullptr) {
  ReproReport report;
  for (const Claim& claim : repro_registry()) {
    if (filter && !filter->count(claim.id)) continue;
    ReproRow row{claim.id, claim.tag, claim.params, claim.expected, "", ClaimStatus::kSkipped, 0};
    const auto start = std::chrono::steady_clock::now();
    if (claim.scale_n > max_n) {
      row.computed = "requires order up to " + std::to_string(claim.scale_n);
      row.status = ClaimStatus::kSkipped;
    } else {
      const ClaimOutcome outcome = claim.run();
      row.computed = outcome.computed;
      row.status = outcome.status;
    }
    row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    report.rows.push_back(std::move(row));
  }
  return report;
}

/// Fixed column order: claim_id, tag, params, expected, computed, status, millis.
inline std::string repro_tsv(const ReproReport& report) {
  std::ostringstream out;
  out << "claim_id\ttag\tparams\texpected\tcomputed\tstatus\tmillis\n";
  for (const ReproRow& r : report.rows)
    out << r.id << '\t' << r.tag << '\t' << r.params << '\t' << r.expected << '\t' << r.computed
        << '\t' << status_name(r.status) << '\t' << r.millis << '\n';
  return out.str();
}

}  // namespace rxi
