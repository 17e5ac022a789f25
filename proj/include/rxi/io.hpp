#pragma once

// JSON and DOT serialization. Graph JSON is {"edges": [[u,v], ...], "n": N}
// with u < v and the edges sorted lexicographically; that order is normative
// because coloring files index into it, so the reader rejects files that are
// unsorted rather than silently reordering them. Emission is
// byte-deterministic: object keys serialize in sorted order and all numbers
// are integers.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rxi/coloring.hpp"
#include "rxi/construct.hpp"
#include "rxi/graph.hpp"
#include "rxi/registry.hpp"
#include "rxi/rx.hpp"
#include "rxi/search.hpp"
#include "rxi/verify.hpp"

namespace rxi {

using nlohmann::json;

inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back(json::array({e.u, e.v}));
  return json{{"edges", std::move(edges)}, {"n", g.order()}};
}

inline Graph graph_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("graph: expected a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("graph: field 'n' must be an integer");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw std::invalid_argument("graph: field 'edges' must be an array");
  const int n = j["n"].get<int>();
  std::vector<Edge> edges;
  Edge prev{-1, -1};
  for (std::size_t i = 0; i < j["edges"].size(); ++i) {
    const json& je = j["edges"][i];
    if (!je.is_array() || je.size() != 2 || !je[0].is_number_integer() ||
        !je[1].is_number_integer())
      throw std::invalid_argument("graph: edges[" + std::to_string(i) +
                                  "] must be a pair of integers");
    Edge e{je[0].get<int>(), je[1].get<int>()};
    if (e.u >= e.v)
      throw std::invalid_argument("graph: edges[" + std::to_string(i) +
                                  "] must satisfy u < v");
    if (!(prev < e))
      throw std::invalid_argument("graph: edges[" + std::to_string(i) +
                                  "] breaks the lexicographic edge order");
    prev = e;
    edges.push_back(e);
  }
  return make_graph(n, std::move(edges));
}

/// Accepts either a bare array of colors or an object with "colors" and an
/// optional "palette" (a full construction file works).
inline EdgeColoring coloring_from_json(const Graph& g, const json& j) {
  const json* colors = nullptr;
  int palette = 0;
  if (j.is_array()) {
    colors = &j;
  } else if (j.is_object() && j.contains("colors") && j["colors"].is_array()) {
    colors = &j["colors"];
    if (j.contains("palette")) {
      if (!j["palette"].is_number_integer())
        throw std::invalid_argument("coloring: field 'palette' must be an integer");
      palette = j["palette"].get<int>();
    }
  } else {
    throw std::invalid_argument(
        "coloring: expected an array of colors or an object with a 'colors' field");
  }
  std::vector<int> values;
  for (std::size_t i = 0; i < colors->size(); ++i) {
    if (!(*colors)[i].is_number_integer())
      throw std::invalid_argument("coloring: colors[" + std::to_string(i) +
                                  "] must be an integer");
    values.push_back((*colors)[i].get<int>());
  }
  return make_coloring(g, std::move(values), palette);
}

inline json spec_to_json(const ConstructionSpec& spec) {
  json params = json::object();
  for (const auto& [key, value] : spec.params) params[key] = value;
  return json{{"family", family_name(spec.family)}, {"params", std::move(params)}};
}

inline json construction_to_json(const ColoredConstruction& cc) {
  json labels = json::object();
  for (const auto& [v, name] : cc.vertex_labels) labels[std::to_string(v)] = name;
  return json{{"claimed_k", cc.claimed_k}, {"colors", cc.coloring.colors},
              {"graph", graph_to_json(cc.graph)}, {"labels", std::move(labels)},
              {"palette", cc.coloring.palette}, {"spec", spec_to_json(cc.spec)}};
}

inline json vertex_set_to_json(VertexSet s) {
  json out = json::array();
  for (int v : to_vertices(s)) out.push_back(v);
  return out;
}

inline json report_to_json(const VerificationReport& r) {
  json j{{"checked", r.checked_subsets},
         {"first_failure", r.first_failure ? vertex_set_to_json(*r.first_failure) : json{}},
         {"ok", r.ok}};
  if (!r.witness_trees.empty()) {
    json witnesses = json::object();
    for (const auto& [subset, tree] : r.witness_trees) {
      std::string key;
      for (int v : to_vertices(subset)) key += (key.empty() ? "" : ",") + std::to_string(v);
      json edges = json::array();
      for (std::size_t e = 0; e < kMaxEdges; ++e)
        if (tree.test(e)) edges.push_back(e);
      witnesses[key] = std::move(edges);
    }
    j["witnesses"] = std::move(witnesses);
  }
  return j;
}

inline json rx_result_to_json(const RxResult& r) {
  return json{{"colors", r.witness.colors}, {"lower_bound", r.lower_bound}, {"value", r.value}};
}

inline json search_result_to_json(const SearchResult& r) {
  json per_m = json::array();
  for (const auto& [m, count] : r.class_counts) per_m.push_back(json::array({m, count}));
  json witness;
  if (r.witness)
    witness = json{{"colors", r.witness->second.colors},
                   {"graph", graph_to_json(r.witness->first)},
                   {"palette", r.witness->second.palette}};
  return json{{"examined", r.graphs_examined},
              {"exhaustive", r.exhaustive},
              {"k", r.k},
              {"l", r.l},
              {"n", r.n},
              {"per_m_classes", std::move(per_m)},
              {"value", r.value ? json(*r.value) : json{}},
              {"witness", std::move(witness)}};
}

/// Graphviz export; edges carry their color as a label and one of twelve
/// fixed pen colors (cycled when the palette is larger).
inline std::string to_dot(const Graph& g, const EdgeColoring* coloring = nullptr,
                          const std::map<int, std::string>* labels = nullptr) {
  static const char* kPens[12] = {"red",     "blue",   "forestgreen", "orange",
                                  "purple",  "teal",   "magenta",     "saddlebrown",
                                  "gold3",   "deepskyblue", "gray40", "olive"};
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle fontsize=11];\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (labels) {
      auto it = labels->find(v);
      if (it != labels->end()) out << " [label=\"" << it->second << "\"]";
    }
    out << ";\n";
  }
  for (int e = 0; e < g.size(); ++e) {
    out << "  " << g.edge(e).u << " -- " << g.edge(e).v;
    if (coloring) {
      const int c = coloring->colors[static_cast<std::size_t>(e)];
      out << " [label=\"" << c << "\" color=\"" << kPens[(c - 1) % 12] << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

inline json repro_to_json(const ReproReport& report) {
  json rows = json::array();
  for (const ReproRow& r : report.rows)
    rows.push_back(json{{"claim_id", r.id},
                        {"computed", r.computed},
                        {"expected", r.expected},
                        {"millis", r.millis},
                        {"params", r.params},
                        {"status", status_name(r.status)},
                        {"tag", r.tag}});
  return json{{"refuted", report.any_refuted()}, {"rows", std::move(rows)}};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
  out << text;
}

}  // namespace rxi
