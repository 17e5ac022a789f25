#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rxi/cli.hpp"
#include "rxi/io.hpp"

using namespace rxi;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("rxi_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_CASE("graph JSON round trip and strictness") {
  const Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const json j = graph_to_json(g);
  const Graph back = graph_from_json(j);
  CHECK(back.edges() == g.edges());
  CHECK(back.order() == 4);

  CHECK_THROWS_WITH_AS(graph_from_json(json::parse(R"({"edges": []})")),
                       doctest::Contains("'n'"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(graph_from_json(json::parse(R"({"n": 3, "edges": [[1, 0]]})")),
                       doctest::Contains("u < v"), std::invalid_argument);
  // unsorted files are rejected, never silently reordered
  CHECK_THROWS_WITH_AS(graph_from_json(json::parse(R"({"n": 3, "edges": [[1, 2], [0, 1]]})")),
                       doctest::Contains("order"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 3, "edges": [[0, 1], [0, 1]]})")),
                  std::invalid_argument);
}

TEST_CASE("malformed graph documents are rejected cleanly") {
  const char* bad[] = {
      "[]",
      "{\"n\": \"three\", \"edges\": []}",
      "{\"n\": 3.5, \"edges\": []}",
      "{\"n\": 3, \"edges\": [[0]]}",
      "{\"n\": 3, \"edges\": [[0, 1, 2]]}",
      "{\"n\": 3, \"edges\": [[0, \"1\"]]}",
      "{\"n\": 3, \"edges\": [[0, 0]]}",
      "{\"n\": 3, \"edges\": [[-1, 2]]}",
      "{\"n\": 3, \"edges\": [[0, 7]]}",
      "{\"n\": 0, \"edges\": []}",
      "{\"n\": 200, \"edges\": []}",
  };
  for (const char* doc : bad)
    CHECK_THROWS_AS(graph_from_json(json::parse(doc)), std::invalid_argument);
}

TEST_CASE("coloring JSON forms") {
  const Graph g = make_graph(3, {{0, 1}, {1, 2}});
  CHECK(coloring_from_json(g, json::parse("[1, 2]")).palette == 2);
  CHECK(coloring_from_json(g, json::parse(R"({"colors": [1, 2], "palette": 5})")).palette == 5);
  CHECK_THROWS_AS(coloring_from_json(g, json::parse("[1]")), std::invalid_argument);
  CHECK_THROWS_AS(coloring_from_json(g, json::parse(R"({"palette": 3})")), std::invalid_argument);
}

TEST_CASE("emission is byte-deterministic") {
  const ColoredConstruction a = colored_rose_tail(10, 6);
  const ColoredConstruction b = colored_rose_tail(10, 6);
  CHECK(construction_to_json(a).dump(2) == construction_to_json(b).dump(2));
  CHECK(to_dot(a.graph, &a.coloring, &a.vertex_labels) ==
        to_dot(b.graph, &b.coloring, &b.vertex_labels));
}

TEST_CASE("DOT export carries labels and colors") {
  const ColoredConstruction cc = colored_rose_tail(8, 5);
  const std::string dot = to_dot(cc.graph, &cc.coloring, &cc.vertex_labels);
  CHECK(dot.find("graph G {") != std::string::npos);
  CHECK(dot.find("[label=\"w_0\"]") != std::string::npos);
  CHECK(dot.find(" -- ") != std::string::npos);
  CHECK(dot.find("label=\"5\"") != std::string::npos);
}

TEST_CASE("cli gen writes a construction") {
  std::string out;
  CHECK(run_cli({"gen", "--family", "rose-tail", "--n", "10", "--l", "6"}, &out) == 0);
  const json j = json::parse(out);
  CHECK(j["graph"]["n"] == 10);
  CHECK(j["colors"].size() == 13);
  CHECK(j["palette"] == 6);
  CHECK(j["claimed_k"] == 3);
  CHECK(j["spec"]["family"] == "rose-tail");

  // deterministic output
  std::string out2;
  run_cli({"gen", "--family", "rose-tail", "--n", "10", "--l", "6"}, &out2);
  CHECK(out == out2);

  std::string err;
  CHECK(run_cli({"gen", "--family", "nope", "--n", "5"}, nullptr, &err) == 2);
  CHECK(err.find("unknown family") != std::string::npos);
  CHECK(run_cli({"gen", "--family", "rose-tail", "--n", "10"}, nullptr, &err) == 2);
}

TEST_CASE("cli verify accepts good files and flags corruption") {
  TempFile graph_file("graph.json"), colors_file("colors.json");
  const ColoredConstruction cc = colored_k2_bipartite(6);
  write_text_file(graph_file.path, graph_to_json(cc.graph).dump());
  write_text_file(colors_file.path, json(cc.coloring.colors).dump());

  std::string out;
  CHECK(run_cli({"verify", "--graph", graph_file.path, "--colors", colors_file.path, "--k", "5"},
                &out) == 0);
  CHECK(json::parse(out)["ok"] == true);

  // corrupt one color byte
  std::vector<int> bad = cc.coloring.colors;
  bad[0] = bad[0] == 1 ? 2 : 1;
  write_text_file(colors_file.path, json(bad).dump());
  CHECK(run_cli({"verify", "--graph", graph_file.path, "--colors", colors_file.path, "--k", "5"},
                &out) == 1);
  const json rep = json::parse(out);
  CHECK(rep["ok"] == false);
  CHECK(rep["first_failure"].is_array());

  // malformed file: nonzero exit, message names the field
  write_text_file(colors_file.path, R"({"palette": 4})");
  std::string err;
  CHECK(run_cli({"verify", "--graph", graph_file.path, "--colors", colors_file.path, "--k", "5"},
                nullptr, &err) == 2);
  CHECK(err.find("colors") != std::string::npos);
}

TEST_CASE("cli rx and tmin") {
  TempFile graph_file("rx_graph.json");
  write_text_file(graph_file.path,
                  graph_to_json(build_basic({Family::kCycle, {{"n", 6}}})).dump());

  std::string out;
  CHECK(run_cli({"rx", "--graph", graph_file.path, "--k", "3"}, &out) == 0);
  const json rx = json::parse(out);
  CHECK(rx["value"] == 4);
  CHECK(rx["lower_bound"] == 4);
  CHECK(rx["colors"].size() == 6);

  CHECK(run_cli({"rx", "--graph", graph_file.path, "--k", "3", "--at-most", "3"}, &out) == 1);
  CHECK(json::parse(out)["present"] == false);
  CHECK(run_cli({"rx", "--graph", graph_file.path, "--k", "3", "--at-most", "4"}, &out) == 0);
  CHECK(json::parse(out)["present"] == true);

  CHECK(run_cli({"tmin", "--n", "5", "--k", "3", "--l", "3"}, &out) == 0);
  const json tm = json::parse(out);
  CHECK(tm["value"] == 5);
  CHECK(tm["exhaustive"] == false);
  CHECK(tm["witness"]["graph"]["n"] == 5);

  // a nonexistence certificate serializes with a null value
  CHECK(run_cli({"tmin", "--n", "6", "--k", "3", "--l", "2"}, &out) == 0);
  const json none = json::parse(out);
  CHECK(none["value"].is_null());
  CHECK(none["exhaustive"] == true);
  CHECK(none["witness"].is_null());
  CHECK(none["per_m_classes"].size() == 11);
}

TEST_CASE("cli verify records witnesses on demand") {
  TempFile graph_file("wg.json"), colors_file("wc.json");
  const ColoredConstruction cc = colored_balanced_bipartite(3);
  write_text_file(graph_file.path, graph_to_json(cc.graph).dump());
  write_text_file(colors_file.path, json(cc.coloring.colors).dump());
  std::string out;
  CHECK(run_cli({"verify", "--graph", graph_file.path, "--colors", colors_file.path, "--k", "3",
                 "--witnesses"},
                &out) == 0);
  const json rep = json::parse(out);
  CHECK(rep["witnesses"].size() == 20);
}

TEST_CASE("cli repro filtered run") {
  std::string out;
  CHECK(run_cli({"repro", "--claims", "t-332,rx3-cycle-order3"}, &out) == 0);
  std::istringstream lines(out);
  std::string header, row;
  std::getline(lines, header);
  CHECK(header == "claim_id\ttag\tparams\texpected\tcomputed\tstatus\tmillis");
  int rows = 0;
  while (std::getline(lines, row)) {
    CHECK(row.find("confirmed") != std::string::npos);
    ++rows;
  }
  CHECK(rows == 2);

  TempFile json_file("repro.json");
  CHECK(run_cli({"repro", "--claims", "t-332", "--json", json_file.path}, &out) == 0);
  const json j = read_json_file(json_file.path);
  CHECK(j["refuted"] == false);
  CHECK(j["rows"].size() == 1);
  CHECK(j["rows"][0]["claim_id"] == "t-332");
}

TEST_CASE("cli max-n skips out-of-scale claims") {
  std::string out;
  CHECK(run_cli({"repro", "--claims", "t-732-nonexistence", "--max-n", "6"}, &out) == 0);
  CHECK(out.find("skipped-out-of-scale") != std::string::npos);
}
