#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gf2lights/errors.hpp"
#include "gf2lights/io.hpp"
#include "gf2lights/random.hpp"
#include "oracles.hpp"

using namespace gf2lights;

static std::string data(const std::string& name) { return std::string(GF2LIGHTS_DATA_DIR) + "/" + name; }

TEST_CASE("matrix text") {
  const auto m = parse_matrix_text("2 3\n101\n010\n");
  CHECK(m.to_strings() == std::vector<std::string>{"101", "010"});
  CHECK(format_matrix_text(m) == "2 3\n101\n010\n");
  CHECK(parse_matrix_text("0 0\n").rows() == 0);
  CHECK_THROWS_AS(parse_matrix_text("2 2\n10\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix_text("1 2\n102\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix_text("1 2\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix_text("x"), ParseError);
  CHECK_THROWS_AS(parse_matrix_text("1 1\n1\n0\n"), ParseError);
  Rng rng(61);
  for (int t = 0; t < 20; ++t) {
    const Gf2Matrix r = random_matrix(rng, 1 + random_below(rng, 20), 1 + random_below(rng, 20));
    CHECK(parse_matrix_text(format_matrix_text(r)) == r);
  }
}

TEST_CASE("board text") {
  const auto b = parse_board_text(read_file(data("classic5_all_on.board")));
  CHECK(b.rows == 5);
  CHECK(b.cols == 5);
  CHECK(b.state.lights == Gf2Vector::ones(25));
  CHECK(parse_board_text("2 2\n10\n01\n").state.lights.to_string() == "1001");
}

TEST_CASE("graph json") {
  const Graph g = graph_from_json(json::parse(read_file(data("triangle_no_loops.json"))));
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.self_loops().none());

  const Graph h = graph_from_json(json::parse(R"({"n": 3, "edges": [[1,2],[3,3]], "self_loops": [1]})"));
  CHECK(h.has_self_loop(0));
  CHECK(h.has_self_loop(2));
  CHECK(h.edge_count() == 1);
  CHECK(graph_from_json(graph_to_json(h)).edges() == h.edges());
  CHECK(graph_to_json(h)["self_loops"] == json::array({1, 3}));

  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"edges": []})")), ParseError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 2, "edges": [[1,3]]})")), ParseError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 2, "edges": [[0,1]]})")), ParseError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 2, "edges": [[1,2],[2,1]]})")), ParseError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": -1})")), ParseError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 2, "edges": [[1,1]], "self_loops": [1]})")), ParseError);
}

TEST_CASE("periodic spec json") {
  const PeriodicSpec path = periodic_spec_from_json(json::parse(read_file(data("closed_path.json"))));
  CHECK(path.cell_size == 1);
  CHECK(path.cell_diag.get(0, 0));
  CHECK(path.cell_coupling.get(0, 0));
  CHECK(path.preamble.empty());

  const PeriodicSpec hub = periodic_spec_from_json(json::parse(read_file(data("path_with_hub.json"))));
  CHECK(hub.preamble_size() == 2);
  const auto back = periodic_spec_from_json(periodic_spec_to_json(hub));
  CHECK(back.preamble == hub.preamble);
  CHECK(back.cell_diag == hub.cell_diag);

  const auto arrays = periodic_spec_from_json(json::parse(
      R"({"version": 1, "cell_size": 2, "cell_diag": [[1,1],[1,1]], "cell_coupling": [[1,0],[0,1]]})"));
  CHECK(arrays.cell_diag.to_strings() == std::vector<std::string>{"11", "11"});

  CHECK_THROWS_AS(periodic_spec_from_json(json::parse(R"({"cell_size": 1, "cell_diag": ["1"], "cell_coupling": ["1"]})")),
                  ParseError);
  CHECK_THROWS_AS(periodic_spec_from_json(json::parse(
                      R"({"version": 2, "cell_size": 1, "cell_diag": ["1"], "cell_coupling": ["1"]})")),
                  ParseError);
  CHECK_THROWS_AS(periodic_spec_from_json(json::parse(
                      R"({"version": 1, "format": "other", "cell_size": 1, "cell_diag": ["1"], "cell_coupling": ["1"]})")),
                  ParseError);
  CHECK_THROWS_AS(periodic_spec_from_json(json::parse(
                      R"({"version": 1, "cell_size": 2, "cell_diag": ["1"], "cell_coupling": ["10","01"]})")),
                  ParseError);
  CHECK_THROWS_AS(periodic_spec_from_json(json::parse(
                      R"({"version": 1, "cell_size": 1, "cell_diag": ["1"], "cell_coupling": ["1"], "preamble": [[3]]})")),
                  ParseError);
}

TEST_CASE("prefix set json") {
  PrefixSolutionSet s{3, std::nullopt, {Gf2Vector::from_string("010"), Gf2Vector::from_string("100")}};
  CHECK(prefix_set_to_json(s) == json::parse(R"({"p": 3, "horizon": "exact", "prefixes": ["010", "100"]})"));
  s.horizon = 8;
  CHECK(prefix_set_to_json(s)["horizon"] == 8);
}

TEST_CASE("read_file") {
  CHECK_THROWS_AS(read_file(data("does_not_exist.txt")), ParseError);
}
