#pragma once

// Text and JSON formats.
//
//   matrix / board text:  "rows cols" then `rows` lines of 0/1 characters
//   graph JSON:           {"n": 3, "edges": [[1,2],[2,3]], "self_loops": [1,3]}
//   periodic spec JSON:   {"format": "gf2lights-periodic-spec", "version": 1,
//                          "cell_size": 1, "cell_diag": ["1"],
//                          "cell_coupling": ["1"], "preamble": [[1,2], ...]}
//   prefix set JSON:      {"p": 3, "horizon": "exact" | H, "prefixes": ["010", ...]}
//
// Vertex and row indices in every file format start at 1.

#include <cstddef>
#include <string>
#include <string_view>

#include "json.hpp"

#include "gf2lights/gf2.hpp"
#include "gf2lights/lightsout.hpp"
#include "gf2lights/rowfinite.hpp"
#include "gf2lights/transfer.hpp"

namespace gf2lights {

using nlohmann::json;

inline constexpr int kPeriodicSpecVersion = 1;
inline constexpr std::string_view kPeriodicSpecFormat = "gf2lights-periodic-spec";

Gf2Matrix parse_matrix_text(std::string_view text);
std::string format_matrix_text(const Gf2Matrix& m);

// A board file is a matrix text; lights are read row-major.
struct GridBoard {
  std::size_t rows = 0;
  std::size_t cols = 0;
  BoardState state;
};
GridBoard parse_board_text(std::string_view text);

Graph graph_from_json(const json& j);
json graph_to_json(const Graph& g);

PeriodicSpec periodic_spec_from_json(const json& j);
json periodic_spec_to_json(const PeriodicSpec& spec);

json prefix_set_to_json(const PrefixSolutionSet& s);

// Whole file contents; throws ParseError when unreadable.
std::string read_file(const std::string& path);

}  // namespace gf2lights
