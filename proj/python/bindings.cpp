#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gf2lights/diagrange.hpp"
#include "gf2lights/errors.hpp"
#include "gf2lights/io.hpp"
#include "gf2lights/lightsout.hpp"
#include "gf2lights/transfer.hpp"

namespace py = pybind11;
using namespace gf2lights;

namespace {

std::vector<std::string> bits(const std::vector<Gf2Vector>& vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(v.to_string());
  return out;
}

PrefixMode mode_for(std::optional<std::size_t> horizon) {
  return horizon ? PrefixMode::bounded(*horizon) : PrefixMode::exact();
}

PeriodicSpec spec_from(const std::string& text) { return periodic_spec_from_json(json::parse(text)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "GF(2) linear algebra and Lights Out";

  static auto& base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<Unsolvable>(m, "Unsolvable", base.ptr());
  py::register_exception<NotSymmetric>(m, "NotSymmetric", base.ptr());
  py::register_exception<CellTooLarge>(m, "CellTooLarge", base.ptr());
  py::register_exception<PrefixTooLong>(m, "PrefixTooLong", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const nlohmann::json::exception& e) {
      PyErr_SetString(base.ptr(), e.what());
    }
  });

  m.def("rank", [](const std::vector<std::string>& rows) { return rank(Gf2Matrix::from_strings(rows)); },
        py::arg("rows"));

  m.def("nullspace", [](const std::vector<std::string>& rows) { return bits(nullspace(Gf2Matrix::from_strings(rows))); },
        py::arg("rows"));

  m.def(
      "solve",
      [](const std::vector<std::string>& rows, const std::string& b) {
        const AffineSolutionSet s = solve(Gf2Matrix::from_strings(rows), Gf2Vector::from_string(b));
        py::dict out;
        out["feasible"] = s.feasible;
        if (s.feasible) {
          out["particular"] = s.particular.to_string();
          out["nullspace"] = bits(s.nullspace_basis);
        } else {
          out["witness"] = s.witness->to_string();
        }
        return out;
      },
      py::arg("rows"), py::arg("b"), "Solve A x = b. Returns a dict with either a solution or a witness.");

  m.def("solve_diagonal", [](const std::vector<std::string>& rows) {
    return solve_diagonal(Gf2Matrix::from_strings(rows)).to_string();
  }, py::arg("rows"));

  m.def("certify_diagonal", [](const std::vector<std::string>& rows, const std::string& x) {
    return certify_diagonal(Gf2Matrix::from_strings(rows), Gf2Vector::from_string(x));
  }, py::arg("rows"), py::arg("x"));

  m.def(
      "solve_board",
      [](const std::string& graph_json, const std::string& initial) -> py::object {
        const Graph g = graph_from_json(json::parse(graph_json));
        const auto lights = Gf2Vector::from_string(initial);
        const BoardSolution s = solve_board(g, BoardState{lights}, BoardState{Gf2Vector(lights.size())});
        if (!s.solvable) return py::none();
        std::vector<std::size_t> clicks;
        for (std::size_t v : s.clicks.clicks.support()) clicks.push_back(v + 1);
        return py::cast(clicks);
      },
      py::arg("graph_json"), py::arg("initial"),
      "1-based vertices to press to turn every light off, or None when impossible.");

  m.def(
      "solve_grid",
      [](std::size_t rows, std::size_t cols, const std::string& initial) -> py::object {
        const Graph g = classic_grid(rows, cols);
        const auto lights = Gf2Vector::from_string(initial);
        const BoardSolution s = solve_board(g, BoardState{lights}, BoardState{Gf2Vector(lights.size())});
        if (!s.solvable) return py::none();
        std::vector<std::size_t> clicks;
        for (std::size_t v : s.clicks.clicks.support()) clicks.push_back(v + 1);
        return py::cast(clicks);
      },
      py::arg("rows"), py::arg("cols"), py::arg("initial"));

  m.def(
      "solve_prefix",
      [](const std::string& spec_json, std::size_t p, std::optional<std::size_t> horizon) {
        const CertifiedPrefix r = solve_prefix(RowFiniteMatrix::from_periodic(spec_from(spec_json)), p, mode_for(horizon));
        return py::make_tuple(r.prefix.to_string(), r.certificate.to_string());
      },
      py::arg("spec_json"), py::arg("p"), py::arg("horizon") = py::none(),
      "Least prefix of length p and its certificate; exact unless a horizon is given.");

  m.def(
      "prefix_set",
      [](const std::string& spec_json, std::size_t p, std::optional<std::size_t> horizon) {
        const PeriodicSpec spec = spec_from(spec_json);
        const PrefixSolutionSet s =
            horizon ? consistent_prefixes(RowFiniteMatrix::from_periodic(spec), std::max<std::size_t>(p, 1), p, *horizon)
                    : exact_prefixes(spec, p);
        return bits(s.prefixes);
      },
      py::arg("spec_json"), py::arg("p"), py::arg("horizon") = py::none());

  m.def(
      "periodic_solution",
      [](const std::string& spec_json) {
        const EventuallyPeriodicSolution s = periodic_solution(spec_from(spec_json));
        py::dict out;
        out["preamble"] = s.preamble.to_string();
        out["transient"] = bits(s.transient);
        out["cycle"] = bits(s.cycle);
        return out;
      },
      py::arg("spec_json"));
}
