#pragma once

// Lights Out on finite graphs where some vertices toggle themselves when
// pressed (self-loops) and others toggle only their neighbours, plus the
// infinite-graph variant backed by row-finite influence matrices.
//
// Vertices are numbered from 0 in this API; file formats and the service
// number them from 1.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gf2lights/gf2.hpp"
#include "gf2lights/rowfinite.hpp"
#include "gf2lights/transfer.hpp"

namespace gf2lights {

struct BoardState {
  Gf2Vector lights;  // 1 = on
  friend bool operator==(const BoardState&, const BoardState&) = default;
};

struct ClickSet {
  Gf2Vector clicks;  // 1 = press that vertex once
  friend bool operator==(const ClickSet&, const ClickSet&) = default;
};

class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  Graph() = default;
  // Throws InvalidGraph on out-of-range endpoints, loops in `edges`, or
  // repeated edges. Self-loops are given separately.
  Graph(std::size_t vertex_count, const std::vector<Edge>& edges, Gf2Vector self_loops);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  const std::vector<std::size_t>& neighbors(std::size_t v) const;
  const Gf2Vector& self_loops() const noexcept { return self_loops_; }
  bool has_self_loop(std::size_t v) const { return self_loops_.get(v); }

  std::size_t edge_count() const noexcept { return edge_count_; }
  // Each edge once, as (i, j) with i < j, ascending.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  Gf2Vector self_loops_;
  std::size_t edge_count_ = 0;
};

// rows x cols grid, rectilinear adjacency, every vertex self-looped,
// row-major numbering.
Graph classic_grid(std::size_t rows, std::size_t cols);

// a_ij = 1 iff {i,j} is an edge, or i == j and i has a self-loop.
Gf2Matrix influence_matrix(const Graph& g);

BoardState press(const Graph& g, const BoardState& s, std::size_t v);
// Presses every vertex in `x`, in ascending order.
BoardState apply_clicks(const Graph& g, const BoardState& s, const ClickSet& x);

struct BoardSolution {
  bool solvable = false;
  ClickSet clicks;                   // canonical solution when solvable
  std::size_t nullity = 0;           // solutions number 2^nullity
  std::optional<Gf2Vector> witness;  // z with z^T A = 0, dot(z, initial ^ target) = 1
};

BoardSolution solve_board(const Graph& g, const BoardState& initial, const BoardState& target);

// Clicks that, from the all-off board, light exactly the self-looped vertices.
ClickSet self_loop_pattern(const Graph& g);

// A countable graph with finite degrees, given by its influence matrix.
// Self-loops are the diagonal entries.
struct InfiniteGraph {
  RowFiniteMatrix matrix;

  static InfiniteGraph from_spec(PeriodicSpec spec) { return {RowFiniteMatrix::from_periodic(std::move(spec))}; }
};

struct CertifiedClicks {
  ClickSet clicks;
  Certificate certificate;
};

// The first p click decisions of an infinite click set that lights exactly
// the self-looped vertices.
CertifiedClicks infinite_self_loop_prefix(const InfiniteGraph& g, std::size_t p, PrefixMode mode,
                                          const TransferOptions& options = {});

// Full eventually periodic click set for the self-loop pattern. Needs a
// periodic influence matrix.
EventuallyPeriodicSolution infinite_self_loop_solution(const InfiniteGraph& g, const TransferOptions& options = {});

}  // namespace gf2lights
