#include "gf2lights/io.hpp"

#include <fstream>
#include <sstream>

#include "gf2lights/errors.hpp"

namespace gf2lights {

namespace {

Gf2Matrix matrix_from_rows_json(const json& rows, std::size_t size, const char* field) {
  if (!rows.is_array() || rows.size() != size) {
    throw ParseError(std::string(field) + " must list " + std::to_string(size) + " rows");
  }
  Gf2Matrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    const json& r = rows[i];
    std::string bits;
    if (r.is_string()) {
      bits = r.get<std::string>();
    } else if (r.is_array()) {
      for (const json& e : r) {
        if (!e.is_number_integer() || (e.get<int>() != 0 && e.get<int>() != 1)) {
          throw ParseError(std::string(field) + " entries must be 0 or 1");
        }
        bits.push_back(e.get<int>() == 1 ? '1' : '0');
      }
    } else {
      throw ParseError(std::string(field) + " rows must be strings or arrays");
    }
    if (bits.size() != size) throw ParseError(std::string(field) + " row " + std::to_string(i + 1) + " has wrong length");
    m.set_row(i, Gf2Vector::from_string(bits));
  }
  return m;
}

std::size_t index_from_json(const json& e, const char* what) {
  if (!e.is_number_integer() || e.get<long long>() < 1) {
    throw ParseError(std::string(what) + " must be positive integers");
  }
  return static_cast<std::size_t>(e.get<long long>());
}

}  // namespace

Gf2Matrix parse_matrix_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long rows = -1;
  long long cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0) throw ParseError("expected 'rows cols' header");
  std::vector<std::string> lines;
  std::string line;
  while (static_cast<long long>(lines.size()) < rows && in >> line) lines.push_back(line);
  if (static_cast<long long>(lines.size()) != rows) throw ParseError("expected " + std::to_string(rows) + " rows");
  std::string extra;
  if (in >> extra) throw ParseError("trailing content after matrix rows");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (static_cast<long long>(lines[i].size()) != cols) {
      throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(lines[i].size()) + " columns, expected " +
                       std::to_string(cols));
    }
  }
  if (rows == 0) return Gf2Matrix(0, static_cast<std::size_t>(cols));
  return Gf2Matrix::from_strings(lines);
}

std::string format_matrix_text(const Gf2Matrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (const auto& r : m.to_strings()) out += r + "\n";
  return out;
}

GridBoard parse_board_text(std::string_view text) {
  const Gf2Matrix m = parse_matrix_text(text);
  GridBoard b{m.rows(), m.cols(), {Gf2Vector(m.rows() * m.cols())}};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.get(r, c)) b.state.lights.set(r * m.cols() + c);
    }
  }
  return b;
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n")) throw ParseError("graph must be an object with field 'n'");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0) throw ParseError("'n' must be a count");
  const auto n = static_cast<std::size_t>(j["n"].get<long long>());
  Gf2Vector loops(n);
  std::vector<Graph::Edge> edges;
  const auto check = [n](std::size_t v) {
    if (v > n) throw ParseError("vertex " + std::to_string(v) + " exceeds n = " + std::to_string(n));
    return v - 1;
  };
  const auto add_loop = [&loops](std::size_t v) {
    if (loops.get(v)) throw ParseError("repeated self-loop on vertex " + std::to_string(v + 1));
    loops.set(v);
  };
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError("'edges' must be an array");
    for (const json& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair");
      const std::size_t a = check(index_from_json(e[0], "edge endpoints"));
      const std::size_t b = check(index_from_json(e[1], "edge endpoints"));
      if (a == b) {
        add_loop(a);
      } else {
        edges.emplace_back(a, b);
      }
    }
  }
  if (j.contains("self_loops")) {
    if (!j["self_loops"].is_array()) throw ParseError("'self_loops' must be an array");
    for (const json& e : j["self_loops"]) add_loop(check(index_from_json(e, "self-loop vertices")));
  }
  try {
    return Graph(n, edges, std::move(loops));
  } catch (const InvalidGraph& e) {
    throw ParseError(e.what());
  }
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a + 1, b + 1});
  json loops = json::array();
  for (std::size_t v : g.self_loops().support()) loops.push_back(v + 1);
  return {{"n", g.vertex_count()}, {"edges", edges}, {"self_loops", loops}};
}

PeriodicSpec periodic_spec_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("periodic spec must be an object");
  if (!j.contains("version") || !j["version"].is_number_integer() || j["version"].get<int>() != kPeriodicSpecVersion) {
    throw ParseError("periodic spec needs \"version\": " + std::to_string(kPeriodicSpecVersion));
  }
  if (j.contains("format") && j["format"] != std::string(kPeriodicSpecFormat)) {
    throw ParseError("unexpected format tag");
  }
  if (!j.contains("cell_size") || !j["cell_size"].is_number_integer() || j["cell_size"].get<long long>() < 1) {
    throw ParseError("'cell_size' must be a positive integer");
  }
  PeriodicSpec spec;
  spec.cell_size = static_cast<std::size_t>(j["cell_size"].get<long long>());
  if (!j.contains("cell_diag") || !j.contains("cell_coupling")) {
    throw ParseError("periodic spec needs 'cell_diag' and 'cell_coupling'");
  }
  spec.cell_diag = matrix_from_rows_json(j["cell_diag"], spec.cell_size, "cell_diag");
  spec.cell_coupling = matrix_from_rows_json(j["cell_coupling"], spec.cell_size, "cell_coupling");
  if (j.contains("preamble")) {
    if (!j["preamble"].is_array()) throw ParseError("'preamble' must be an array of supports");
    for (const json& row : j["preamble"]) {
      if (!row.is_array()) throw ParseError("each preamble support must be an array");
      std::vector<std::size_t> support;
      for (const json& e : row) support.push_back(index_from_json(e, "preamble columns"));
      spec.preamble.push_back(std::move(support));
    }
  }
  try {
    spec.validate();
  } catch (const InvalidSpec& e) {
    throw ParseError(e.what());
  }
  return spec;
}

json periodic_spec_to_json(const PeriodicSpec& spec) {
  json preamble = json::array();
  for (const auto& row : spec.preamble) preamble.push_back(row);
  return {{"format", kPeriodicSpecFormat},
          {"version", kPeriodicSpecVersion},
          {"cell_size", spec.cell_size},
          {"cell_diag", spec.cell_diag.to_strings()},
          {"cell_coupling", spec.cell_coupling.to_strings()},
          {"preamble", preamble}};
}

json prefix_set_to_json(const PrefixSolutionSet& s) {
  json prefixes = json::array();
  for (const auto& w : s.prefixes) prefixes.push_back(w.to_string());
  json horizon = s.horizon ? json(*s.horizon) : json("exact");
  return {{"p", s.p}, {"horizon", horizon}, {"prefixes", prefixes}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace gf2lights
