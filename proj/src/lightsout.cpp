#include "gf2lights/lightsout.hpp"

#include <algorithm>
#include <string>

#include "gf2lights/diagrange.hpp"
#include "gf2lights/errors.hpp"

namespace gf2lights {

Graph::Graph(std::size_t vertex_count, const std::vector<Edge>& edges, Gf2Vector self_loops)
    : adjacency_(vertex_count), self_loops_(std::move(self_loops)) {
  if (self_loops_.size() != vertex_count) {
    throw InvalidGraph("self-loop vector has length " + std::to_string(self_loops_.size()) + ", expected " +
                       std::to_string(vertex_count));
  }
  for (const auto& [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count) {
      throw InvalidGraph("edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
    }
    if (a == b) throw InvalidGraph("self-loop on vertex " + std::to_string(a) + " listed as an edge");
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto& adj = adjacency_[v];
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
      throw InvalidGraph("repeated edge at vertex " + std::to_string(v));
    }
  }
  edge_count_ = edges.size();
}

const std::vector<std::size_t>& Graph::neighbors(std::size_t v) const {
  if (v >= adjacency_.size()) throw IndexOutOfRange("vertex " + std::to_string(v) + " out of range");
  return adjacency_[v];
}

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    for (std::size_t u : adjacency_[v]) {
      if (v < u) out.emplace_back(v, u);
    }
  }
  return out;
}

Graph classic_grid(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw InvalidGraph("grid dimensions must be positive");
  std::vector<Graph::Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return Graph(rows * cols, edges, Gf2Vector::ones(rows * cols));
}

Gf2Matrix influence_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Gf2Matrix a(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u : g.neighbors(v)) a.set(v, u);
    if (g.has_self_loop(v)) a.set(v, v);
  }
  return a;
}

BoardState press(const Graph& g, const BoardState& s, std::size_t v) {
  if (s.lights.size() != g.vertex_count()) throw DimensionMismatch("board does not match the graph");
  if (v >= g.vertex_count()) throw IndexOutOfRange("vertex " + std::to_string(v) + " out of range");
  BoardState out = s;
  for (std::size_t u : g.neighbors(v)) out.lights.flip(u);
  if (g.has_self_loop(v)) out.lights.flip(v);
  return out;
}

BoardState apply_clicks(const Graph& g, const BoardState& s, const ClickSet& x) {
  if (x.clicks.size() != g.vertex_count()) throw DimensionMismatch("click set does not match the graph");
  BoardState out = s;
  for (std::size_t v : x.clicks.support()) out = press(g, out, v);
  return out;
}

BoardSolution solve_board(const Graph& g, const BoardState& initial, const BoardState& target) {
  if (initial.lights.size() != g.vertex_count() || target.lights.size() != g.vertex_count()) {
    throw DimensionMismatch("board does not match the graph");
  }
  AffineSolutionSet s = solve(influence_matrix(g), initial.lights ^ target.lights);
  BoardSolution out;
  out.solvable = s.feasible;
  if (s.feasible) {
    out.clicks = ClickSet{std::move(s.particular)};
    out.nullity = s.nullity();
  } else {
    out.witness = std::move(s.witness);
  }
  return out;
}

ClickSet self_loop_pattern(const Graph& g) { return ClickSet{solve_diagonal(influence_matrix(g))}; }

CertifiedClicks infinite_self_loop_prefix(const InfiniteGraph& g, std::size_t p, PrefixMode mode,
                                          const TransferOptions& options) {
  CertifiedPrefix r = solve_prefix(g.matrix, p, mode, std::nullopt, options);
  return {ClickSet{std::move(r.prefix)}, r.certificate};
}

EventuallyPeriodicSolution infinite_self_loop_solution(const InfiniteGraph& g, const TransferOptions& options) {
  const PeriodicSpec* spec = g.matrix.periodic();
  if (spec == nullptr) throw InvalidSpec("a full click set needs a periodic influence matrix");
  return periodic_solution(*spec, std::nullopt, options);
}

}  // namespace gf2lights
