#pragma once

// Command-line front end. Subcommands:
//   gen     build a construction, emit its JSON and optionally a DOT file
//   verify  check a (graph, coloring, k) triple, exit 0 iff it verifies
//   rx      exact rainbow index, or the decision form with --at-most
//   tmin    certified t(n,k,l) by exhaustive search
//   repro   run the whole claim registry, TSV to stdout (JSON via --json)
//
// Exit codes: 0 success / verified, 1 negative result (verification failed,
// decision absent, some claim refuted), 2 bad input or usage.

#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rxi/io.hpp"

namespace rxi {

namespace detail {

inline ConstructionSpec spec_from_flags(Family family, const std::map<std::string, int>& given) {
  ConstructionSpec spec{family, {}};
  auto take = [&](const char* key, bool required) {
    auto it = given.find(key);
    if (it != given.end()) {
      spec.params[key] = it->second;
    } else if (required) {
      throw std::invalid_argument("family " + family_name(family) + " requires --" +
                                  std::string(key));
    }
  };
  switch (family) {
    case Family::kPath:
    case Family::kCycle:
    case Family::kStar:
    case Family::kComplete:
    case Family::kWheel:
    case Family::kApexBipartite:
    case Family::kCocycleApex:
    case Family::kWheelPendant:
    case Family::kK2Bipartite:
      take("n", true);
      break;
    case Family::kCompleteBipartite: {
      take("r", true);
      auto s = given.find("s");
      auto n = given.find("n");
      if (s != given.end())
        spec.params["s"] = s->second;
      else if (n != given.end())
        spec.params["s"] = n->second - spec.params["r"];
      else
        throw std::invalid_argument("complete-bipartite requires --s or --n");
      break;
    }
    case Family::kBalancedBipartiteColored:
      take("r", true);
      break;
    case Family::kLayeredBundle:
    case Family::kRoseTail:
      take("n", true);
      take("l", true);
      break;
    case Family::kRose:
      take("p", true);
      take("q", true);
      break;
  }
  return spec;
}

inline json gen_output(const ConstructionSpec& spec, std::string* dot) {
  auto emit_colored = [&](const ColoredConstruction& cc) {
    if (dot) *dot = to_dot(cc.graph, &cc.coloring, &cc.vertex_labels);
    return construction_to_json(cc);
  };
  switch (spec.family) {
    case Family::kBalancedBipartiteColored:
      return emit_colored(colored_balanced_bipartite(spec.param("r")));
    case Family::kApexBipartite:
      return emit_colored(colored_apex_bipartite(spec.param("n")));
    case Family::kCocycleApex:
      return emit_colored(colored_cocycle_apex(spec.param("n")));
    case Family::kWheelPendant: {
      const int n = spec.param("n");
      return emit_colored(colored_wheel_pendant(n, detail::solved_wheel_coloring(n - 2)));
    }
    case Family::kLayeredBundle:
      return emit_colored(colored_layered_bundle(spec.param("n"), spec.param("l")));
    case Family::kRoseTail:
      return emit_colored(colored_rose_tail(spec.param("n"), spec.param("l")));
    case Family::kK2Bipartite:
      return emit_colored(colored_k2_bipartite(spec.param("n")));
    default: {
      const Graph g = build_basic(spec);
      if (dot) *dot = to_dot(g);
      return json{{"graph", graph_to_json(g)}, {"spec", spec_to_json(spec)}};
    }
  }
}

inline Graph load_graph_file(const std::string& path) {
  const json j = read_json_file(path);
  // a full construction file works wherever a bare graph is expected
  if (j.is_object() && j.contains("graph")) return graph_from_json(j["graph"]);
  return graph_from_json(j);
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact solver and certifier for k-rainbow indexes of small graphs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "build a named construction");
  std::string family_str;
  std::map<std::string, int> flags;
  std::string out_file, dot_file;
  gen->add_option("--family", family_str, "family name")->required();
  gen->add_option("--n", flags["n"], "order (wheel: spoke count)");
  gen->add_option("--l", flags["l"], "color budget parameter");
  gen->add_option("--k", flags["k"], "subset size parameter");
  gen->add_option("--r", flags["r"], "first part size");
  gen->add_option("--s", flags["s"], "second part size");
  gen->add_option("--p", flags["p"], "petal count");
  gen->add_option("--q", flags["q"], "petal length");
  gen->add_option("--out", out_file, "write JSON here instead of stdout");
  gen->add_option("--dot", dot_file, "also write a Graphviz file");

  // verify
  auto* verify = app.add_subcommand("verify", "verify a k-rainbow coloring");
  std::string graph_file, colors_file;
  int k = 0;
  bool witnesses = false;
  verify->add_option("--graph", graph_file, "graph JSON file")->required();
  verify->add_option("--colors", colors_file, "coloring JSON file")->required();
  verify->add_option("--k", k, "subset size")->required();
  verify->add_flag("--witnesses", witnesses, "record a witness tree per subset");

  // rx
  auto* rx = app.add_subcommand("rx", "exact k-rainbow index");
  std::string rx_graph_file;
  int rx_k = 0;
  int at_most = 0;
  std::int64_t budget = SolveBudget{}.max_partitions;
  rx->add_option("--graph", rx_graph_file, "graph JSON file")->required();
  rx->add_option("--k", rx_k, "subset size")->required();
  rx->add_option("--at-most", at_most, "decision form: is rx_k <= L?");
  rx->add_option("--budget", budget, "partition budget");

  // tmin
  auto* tmin = app.add_subcommand("tmin", "certified minimum size t(n,k,l)");
  int tn = 0, tk = 0, tl = 0;
  std::int64_t tmin_budget = SolveBudget{}.max_partitions;
  tmin->add_option("--n", tn, "order")->required();
  tmin->add_option("--k", tk, "subset size")->required();
  tmin->add_option("--l", tl, "color budget")->required();
  tmin->add_option("--budget", tmin_budget, "partition budget");

  // repro
  auto* repro = app.add_subcommand("repro", "run the claim registry");
  int max_n = kMaxVertices;
  std::string claims_list, json_file;
  repro->add_option("--max-n", max_n, "skip claims needing larger orders");
  repro->add_option("--claims", claims_list, "comma-separated claim ids to run");
  repro->add_option("--json", json_file, "also write the report as JSON");

  std::vector<const char*> argv;
  argv.push_back("rainbow");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (gen->parsed()) {
      // drop flags the user did not pass
      std::map<std::string, int> given;
      for (const char* key : {"n", "l", "k", "r", "s", "p", "q"})
        if (gen->count(std::string("--") + key) > 0) given[key] = flags[key];
      const auto family = family_from_name(family_str);
      if (!family) throw std::invalid_argument("unknown family: " + family_str);
      std::string dot;
      const json j = detail::gen_output(detail::spec_from_flags(*family, given),
                                        dot_file.empty() ? nullptr : &dot);
      if (!dot_file.empty()) write_text_file(dot_file, dot);
      if (!out_file.empty())
        write_text_file(out_file, j.dump(2) + "\n");
      else
        out << j.dump(2) << "\n";
      return 0;
    }

    if (verify->parsed()) {
      const Graph g = detail::load_graph_file(graph_file);
      const EdgeColoring c = coloring_from_json(g, read_json_file(colors_file));
      const VerificationReport report = verify_k_rainbow(g, c, k, witnesses);
      out << report_to_json(report).dump(2) << "\n";
      return report.ok ? 0 : 1;
    }

    if (rx->parsed()) {
      const Graph g = detail::load_graph_file(rx_graph_file);
      const SolveBudget b{budget};
      if (rx->count("--at-most") > 0) {
        const auto witness = rx_at_most(g, rx_k, at_most, b);
        json j{{"at_most", at_most},
               {"colors", witness ? json(witness->colors) : json{}},
               {"k", rx_k},
               {"present", witness.has_value()}};
        out << j.dump(2) << "\n";
        return witness ? 0 : 1;
      }
      out << rx_result_to_json(rx_exact(g, rx_k, b)).dump(2) << "\n";
      return 0;
    }

    if (tmin->parsed()) {
      const SearchResult r = t_min(tn, tk, tl, SolveBudget{tmin_budget});
      out << search_result_to_json(r).dump(2) << "\n";
      return 0;
    }

    if (repro->parsed()) {
      std::optional<std::set<std::string>> filter;
      if (!claims_list.empty()) {
        filter.emplace();
        std::stringstream ss(claims_list);
        std::string id;
        while (std::getline(ss, id, ',')) filter->insert(id);
      }
      const ReproReport report = run_repro(max_n, filter ? &*filter : nullptr);
      out << repro_tsv(report);
      if (!json_file.empty()) write_text_file(json_file, repro_to_json(report).dump(2) + "\n");
      return report.any_refuted() ? 1 : 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace rxi
