#pragma once

// Solution prefixes of A x = b for infinite row-finite symmetric A.
//
// Two routes:
//  * horizon sets S_H(p): projections of the truncated finite systems onto
//    the first p variables. Sound for any generator, but may shrink as the
//    horizon H grows.
//  * exact sets S_inf(p) for periodic specs, via a finite transfer automaton
//    whose states are assignments to two consecutive cells. Infinite
//    solutions are infinite paths; a state starts one iff it survives
//    greatest-fixed-point pruning of successor-less states.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gf2lights/gf2.hpp"
#include "gf2lights/rowfinite.hpp"

namespace gf2lights {

struct TransferOptions {
  // States number 2^(2c); c above this bound raises CellTooLarge.
  std::size_t max_cell_size = 12;
  // Largest prefix length whose set of members is enumerated.
  std::size_t max_prefix_length = 24;
  // Largest nullity of the preamble system enumerated per start state.
  std::size_t max_preamble_nullity = 16;
};

// Cell u occupies bits [0, c) and cell v bits [c, 2c). Bit j of a cell is
// its j-th variable.
using State = std::uint64_t;
using CellBits = std::uint32_t;

class TransferAutomaton {
 public:
  std::size_t cell_size() const noexcept { return c_; }
  std::size_t state_count() const noexcept { return std::size_t{1} << (2 * c_); }

  State make_state(CellBits u, CellBits v) const noexcept { return State{u} | (State{v} << c_); }
  CellBits first_cell(State s) const noexcept { return static_cast<CellBits>(s & cell_mask()); }
  CellBits second_cell(State s) const noexcept { return static_cast<CellBits>((s >> c_) & cell_mask()); }

  // The block equation for the middle cell v:
  //   coupling*u ^ diag*v ^ coupling^T*w == target_cell.
  bool allows(CellBits u, CellBits v, CellBits w) const;

  // All w with (u,v) -> (v,w).
  std::vector<CellBits> successor_cells(State s) const;
  // All u with (u,v) -> (v,w), for s = (v,w).
  std::vector<CellBits> predecessor_cells(State s) const;

  template <class F>
  void for_each_successor(State s, F&& f) const {
    const CellBits u = first_cell(s);
    const CellBits v = second_cell(s);
    const CellBits rhs = target_ ^ apply(coupling_cols_, u) ^ apply(diag_cols_, v);
    for_each_solution(forward_, rhs, [&](CellBits w) { f(make_state(v, w)); });
  }
  template <class F>
  void for_each_predecessor(State s, F&& f) const {
    const CellBits v = first_cell(s);
    const CellBits w = second_cell(s);
    const CellBits rhs = target_ ^ apply(diag_cols_, v) ^ apply(coupling_t_cols_, w);
    for_each_solution(backward_, rhs, [&](CellBits u) { f(make_state(u, v)); });
  }

  // States (c0, c1) for which some preamble assignment satisfies every
  // preamble row and every row of cell 0.
  bool is_start(State s) const { return starts_.get(static_cast<std::size_t>(s)); }
  const Gf2Vector& start_states() const noexcept { return starts_; }

  // Preamble assignments compatible with start state s (empty if none).
  AffineSolutionSet preamble_solutions(State s) const;

  std::size_t preamble_size() const noexcept { return preamble_size_; }

 private:
  friend TransferAutomaton build_automaton(const PeriodicSpec&, const PeriodicTarget&, const TransferOptions&);

  struct MaskSolver {
    std::vector<CellBits> transform_rows;
    std::vector<std::size_t> pivots;
    std::vector<CellBits> kernel;
    std::optional<CellBits> solve(CellBits rhs) const;
  };
  static MaskSolver make_solver(const Gf2Matrix& m);

  template <class F>
  static void for_each_solution(const MaskSolver& solver, CellBits rhs, F&& f) {
    const auto particular = solver.solve(rhs);
    if (!particular) return;
    CellBits x = *particular;
    f(x);
    const std::size_t k = solver.kernel.size();
    for (std::size_t g = 1; g < (std::size_t{1} << k); ++g) {
      std::size_t bit = 0;
      while (((g >> bit) & 1u) == 0) ++bit;
      x ^= solver.kernel[bit];
      f(x);
    }
  }

  CellBits cell_mask() const noexcept { return static_cast<CellBits>((std::uint64_t{1} << c_) - 1); }
  CellBits apply(const std::vector<CellBits>& columns, CellBits x) const;
  Gf2Vector preamble_rhs(CellBits c0, CellBits c1) const;

  std::size_t c_ = 0;
  std::size_t preamble_size_ = 0;
  std::vector<CellBits> diag_cols_;
  std::vector<CellBits> coupling_cols_;
  std::vector<CellBits> coupling_t_cols_;
  CellBits target_ = 0;
  MaskSolver forward_;   // coupling^T w = r
  MaskSolver backward_;  // coupling u = r

  // Preamble system: [A_pp; A_0p] x_pre = [b_pre ^ A_p0 c0; t ^ diag c0 ^ coupling^T c1].
  Gf2Matrix preamble_system_;
  Gf2Vector preamble_const_;
  Gf2Matrix preamble_c0_;  // (P+c) x c
  Gf2Matrix preamble_c1_;  // (P+c) x c

  Gf2Vector starts_;
};

TransferAutomaton build_automaton(const PeriodicSpec& spec, const PeriodicTarget& target,
                                  const TransferOptions& options = {});
inline TransferAutomaton build_automaton(const PeriodicSpec& spec) {
  return build_automaton(spec, diagonal_target(spec));
}

// Greatest subset S of {0..count-1} in which every state has a successor in
// S. `successors(s, emit)` and `predecessors(t, emit)` must enumerate exact
// inverse relations without duplicates.
template <class Successors, class Predecessors>
Gf2Vector greatest_live_set(std::size_t count, Successors&& successors, Predecessors&& predecessors) {
  Gf2Vector live = Gf2Vector::ones(count);
  std::vector<std::uint32_t> out_degree(count, 0);
  std::vector<std::size_t> dead;
  for (std::size_t s = 0; s < count; ++s) {
    std::uint32_t degree = 0;
    successors(s, [&](std::size_t) { ++degree; });
    out_degree[s] = degree;
    if (degree == 0) {
      live.reset(s);
      dead.push_back(s);
    }
  }
  while (!dead.empty()) {
    const std::size_t t = dead.back();
    dead.pop_back();
    predecessors(t, [&](std::size_t s) {
      if (live.get(s) && --out_degree[s] == 0) {
        live.reset(s);
        dead.push_back(s);
      }
    });
  }
  return live;
}

Gf2Vector live_states(const TransferAutomaton& automaton);

struct PrefixSolutionSet {
  std::size_t p = 0;
  std::optional<std::size_t> horizon;  // nullopt: exact
  std::vector<Gf2Vector> prefixes;     // ascending lexicographic, unique

  bool exact() const noexcept { return !horizon.has_value(); }
  bool contains(const Gf2Vector& w) const;
};

using TargetFn = std::function<bool(std::size_t)>;

// S_H(p): prefixes w of length p such that rows 1..n+k_{H-1} of A x = b, in
// variables 1..n+k_H, have a solution starting with w. `target` defaults to
// the diagonal. Throws PrefixTooLong when p > n + k_1.
PrefixSolutionSet consistent_prefixes(const RowFiniteMatrix& m, std::size_t n, std::size_t p,
                                      std::size_t horizon, const std::optional<TargetFn>& target = std::nullopt,
                                      const TransferOptions& options = {});

// Lexicographically least member of S_H(p), without enumerating the set;
// nullopt when the truncated system is infeasible.
std::optional<Gf2Vector> least_consistent_prefix(const RowFiniteMatrix& m, std::size_t n, std::size_t p,
                                                 std::size_t horizon,
                                                 const std::optional<TargetFn>& target = std::nullopt);

// S_inf(p) for a periodic spec and target (the diagonal by default).
PrefixSolutionSet exact_prefixes(const PeriodicSpec& spec, std::size_t p,
                                 const std::optional<PeriodicTarget>& target = std::nullopt,
                                 const TransferOptions& options = {});

class Certificate {
 public:
  static Certificate exact() { return Certificate{}; }
  static Certificate bounded(std::size_t h) { return Certificate{h}; }

  bool is_exact() const noexcept { return !horizon_.has_value(); }
  std::optional<std::size_t> horizon() const noexcept { return horizon_; }
  // "EXACT" or "HORIZON(H)".
  std::string to_string() const;

  friend bool operator==(const Certificate&, const Certificate&) = default;

 private:
  Certificate() = default;
  explicit Certificate(std::size_t h) : horizon_(h) {}
  std::optional<std::size_t> horizon_;
};

struct PrefixMode {
  std::optional<std::size_t> horizon;  // nullopt: exact
  static PrefixMode exact() { return {}; }
  static PrefixMode bounded(std::size_t h) { return {h}; }
};

struct CertifiedPrefix {
  Gf2Vector prefix;
  Certificate certificate;
};

// Lexicographically least member of the exact or horizon prefix set. Horizon
// mode takes n = max(p, 1). Exact mode needs a periodic matrix. Throws
// Unsolvable when the set is empty.
CertifiedPrefix solve_prefix(const RowFiniteMatrix& m, std::size_t p, PrefixMode mode,
                             const std::optional<PeriodicTarget>& target = std::nullopt,
                             const TransferOptions& options = {});

// A full infinite solution: preamble bits, then transient cells, then the
// cycle cells repeated forever. It is the lexicographically least solution.
struct EventuallyPeriodicSolution {
  Gf2Vector preamble;
  std::vector<Gf2Vector> transient;
  std::vector<Gf2Vector> cycle;

  // The first `length` entries of the infinite vector.
  Gf2Vector expand(std::size_t length) const;
};

EventuallyPeriodicSolution periodic_solution(const PeriodicSpec& spec,
                                             const std::optional<PeriodicTarget>& target = std::nullopt,
                                             const TransferOptions& options = {});

}  // namespace gf2lights
