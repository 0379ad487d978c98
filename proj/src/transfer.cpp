#include "gf2lights/transfer.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>

#include "gf2lights/errors.hpp"

namespace gf2lights {

namespace {

constexpr std::size_t kHardCellLimit = 15;

CellBits to_mask(const Gf2Vector& v) {
  return v.empty() ? 0 : static_cast<CellBits>(v.words()[0]);
}

Gf2Vector from_mask(CellBits mask, std::size_t c) {
  Gf2Vector v(c);
  for (std::size_t j = 0; j < c; ++j) {
    if ((mask >> j) & 1u) v.set(j);
  }
  return v;
}

bool parity(CellBits x) { return std::popcount(x) & 1; }

std::vector<CellBits> column_masks(const Gf2Matrix& m) {
  std::vector<CellBits> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(to_mask(m.column(j)));
  return cols;
}

bool is_diagonal(const PeriodicSpec& spec, const PeriodicTarget& target) {
  return target == diagonal_target(spec);
}

void check_target(const PeriodicSpec& spec, const PeriodicTarget& target) {
  if (target.cell.size() != spec.cell_size || target.preamble.size() != spec.preamble_size()) {
    throw DimensionMismatch("periodic target does not match the preamble and cell sizes");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// TransferAutomaton

std::optional<CellBits> TransferAutomaton::MaskSolver::solve(CellBits rhs) const {
  CellBits x = 0;
  for (std::size_t k = 0; k < transform_rows.size(); ++k) {
    const bool y = parity(transform_rows[k] & rhs);
    if (k < pivots.size()) {
      if (y) x |= CellBits{1} << pivots[k];
    } else if (y) {
      return std::nullopt;
    }
  }
  return x;
}

TransferAutomaton::MaskSolver TransferAutomaton::make_solver(const Gf2Matrix& m) {
  const Echelon e = reduced_echelon(m);
  MaskSolver s;
  for (std::size_t k = 0; k < m.rows(); ++k) s.transform_rows.push_back(to_mask(e.transform.row(k)));
  s.pivots = e.pivot_columns;
  for (const auto& v : nullspace(m)) s.kernel.push_back(to_mask(v));
  return s;
}

CellBits TransferAutomaton::apply(const std::vector<CellBits>& columns, CellBits x) const {
  CellBits out = 0;
  while (x != 0) {
    out ^= columns[static_cast<std::size_t>(std::countr_zero(x))];
    x &= x - 1;
  }
  return out;
}

bool TransferAutomaton::allows(CellBits u, CellBits v, CellBits w) const {
  return (apply(coupling_cols_, u) ^ apply(diag_cols_, v) ^ apply(coupling_t_cols_, w)) == target_;
}

std::vector<CellBits> TransferAutomaton::successor_cells(State s) const {
  std::vector<CellBits> out;
  for_each_successor(s, [&](State t) { out.push_back(second_cell(t)); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CellBits> TransferAutomaton::predecessor_cells(State s) const {
  std::vector<CellBits> out;
  for_each_predecessor(s, [&](State t) { out.push_back(first_cell(t)); });
  std::sort(out.begin(), out.end());
  return out;
}

Gf2Vector TransferAutomaton::preamble_rhs(CellBits c0, CellBits c1) const {
  Gf2Vector rhs = preamble_const_;
  rhs ^= matvec(preamble_c0_, from_mask(c0, c_));
  rhs ^= matvec(preamble_c1_, from_mask(c1, c_));
  return rhs;
}

AffineSolutionSet TransferAutomaton::preamble_solutions(State s) const {
  return solve(preamble_system_, preamble_rhs(first_cell(s), second_cell(s)));
}

TransferAutomaton build_automaton(const PeriodicSpec& spec, const PeriodicTarget& target,
                                  const TransferOptions& options) {
  spec.validate();
  check_target(spec, target);
  const std::size_t c = spec.cell_size;
  if (c > options.max_cell_size || c > kHardCellLimit) {
    throw CellTooLarge("cell size " + std::to_string(c) + " exceeds the bound " +
                       std::to_string(std::min(options.max_cell_size, kHardCellLimit)));
  }
  const std::size_t p = spec.preamble_size();

  TransferAutomaton t;
  t.c_ = c;
  t.preamble_size_ = p;
  t.diag_cols_ = column_masks(spec.cell_diag);
  t.coupling_cols_ = column_masks(spec.cell_coupling);
  const Gf2Matrix coupling_t = spec.cell_coupling.transposed();
  t.coupling_t_cols_ = column_masks(coupling_t);
  t.target_ = to_mask(target.cell);
  t.forward_ = TransferAutomaton::make_solver(coupling_t);
  t.backward_ = TransferAutomaton::make_solver(spec.cell_coupling);

  // Rows 1..P+c touch only the preamble, cell 0 and cell 1.
  t.preamble_system_ = Gf2Matrix(p + c, p);
  t.preamble_const_ = Gf2Vector(p + c);
  t.preamble_c0_ = Gf2Matrix(p + c, c);
  t.preamble_c1_ = Gf2Matrix(p + c, c);
  for (std::size_t r = 1; r <= p + c; ++r) {
    if (target.at(p, r)) t.preamble_const_.set(r - 1);
    for (std::size_t j : spec.support(r)) {
      if (j <= p) {
        t.preamble_system_.set(r - 1, j - 1);
      } else if (j <= p + c) {
        t.preamble_c0_.set(r - 1, j - p - 1);
      } else {
        t.preamble_c1_.set(r - 1, j - p - c - 1);
      }
    }
  }

  // Feasibility of the preamble system via its left nullspace: rhs must be
  // orthogonal to every z with z^T system = 0.
  struct Check {
    bool constant;
    CellBits on_c0;
    CellBits on_c1;
  };
  std::vector<Check> checks;
  for (const auto& z : nullspace(t.preamble_system_.transposed())) {
    checks.push_back({dot(z, t.preamble_const_), to_mask(matvec(t.preamble_c0_.transposed(), z)),
                      to_mask(matvec(t.preamble_c1_.transposed(), z))});
  }
  t.starts_ = Gf2Vector(t.state_count());
  for (State s = 0; s < t.state_count(); ++s) {
    const CellBits c0 = t.first_cell(s);
    const CellBits c1 = t.second_cell(s);
    const bool ok = std::all_of(checks.begin(), checks.end(), [&](const Check& k) {
      return (k.constant ^ parity(k.on_c0 & c0) ^ parity(k.on_c1 & c1)) == 0;
    });
    if (ok) t.starts_.set(static_cast<std::size_t>(s));
  }
  return t;
}

Gf2Vector live_states(const TransferAutomaton& automaton) {
  return greatest_live_set(
      automaton.state_count(),
      [&](std::size_t s, auto&& emit) {
        automaton.for_each_successor(s, [&](State t) { emit(static_cast<std::size_t>(t)); });
      },
      [&](std::size_t t, auto&& emit) {
        automaton.for_each_predecessor(t, [&](State s) { emit(static_cast<std::size_t>(s)); });
      });
}

// ---------------------------------------------------------------------------
// Prefix sets

bool PrefixSolutionSet::contains(const Gf2Vector& w) const {
  return std::binary_search(prefixes.begin(), prefixes.end(), w);
}

namespace {

// Solution set of the level-H truncated system projected onto the first p
// variables: a particular prefix plus reduced-echelon generators.
struct ProjectedSet {
  bool feasible = false;
  Gf2Vector particular;
  Echelon generators;
};

ProjectedSet truncated_projection(const RowFiniteMatrix& m, std::size_t n, std::size_t p, std::size_t horizon,
                                  const std::optional<TargetFn>& target) {
  if (horizon == 0) throw std::invalid_argument("horizon must be at least 1");
  const auto cuts = cut_points(m, n, horizon);
  if (p > n + cuts.front()) {
    throw PrefixTooLong("prefix length " + std::to_string(p) + " exceeds n + k_1 = " +
                        std::to_string(n + cuts.front()));
  }
  const std::size_t rows = n + (horizon == 1 ? 0 : cuts[horizon - 2]);
  const std::size_t vars = n + cuts[horizon - 1];

  Gf2Matrix a(rows, vars);
  Gf2Vector b(rows);
  for (std::size_t i = 1; i <= rows; ++i) {
    for (std::size_t j : m.support(i)) a.set(i - 1, j - 1);
    const bool bit = target ? (*target)(i) : m.diagonal_entry(i);
    if (bit) b.set(i - 1);
  }
  const AffineSolutionSet s = solve(a, b);
  if (!s.feasible && !target) {
    throw InternalTheoremViolation("truncated system with the diagonal target is infeasible at horizon " +
                                   std::to_string(horizon));
  }
  ProjectedSet out;
  if (!s.feasible) return out;
  out.feasible = true;
  out.particular = s.particular.prefix(p);
  Gf2Matrix gens(s.nullspace_basis.size(), p);
  for (std::size_t k = 0; k < s.nullspace_basis.size(); ++k) gens.set_row(k, s.nullspace_basis[k].prefix(p));
  out.generators = reduced_echelon(gens);
  return out;
}

}  // namespace

PrefixSolutionSet consistent_prefixes(const RowFiniteMatrix& m, std::size_t n, std::size_t p,
                                      std::size_t horizon, const std::optional<TargetFn>& target,
                                      const TransferOptions& options) {
  if (p > options.max_prefix_length) {
    throw PrefixTooLong("prefix length " + std::to_string(p) + " exceeds the enumeration bound " +
                        std::to_string(options.max_prefix_length));
  }
  const ProjectedSet proj = truncated_projection(m, n, p, horizon, target);
  PrefixSolutionSet out{p, horizon, {}};
  if (!proj.feasible) return out;
  const std::size_t r = proj.generators.pivot_columns.size();
  Gf2Vector cur = proj.particular;
  out.prefixes.push_back(cur);
  for (std::size_t g = 1; g < (std::size_t{1} << r); ++g) {
    cur ^= proj.generators.reduced.row(static_cast<std::size_t>(std::countr_zero(g)));
    out.prefixes.push_back(cur);
  }
  std::sort(out.prefixes.begin(), out.prefixes.end());
  return out;
}

std::optional<Gf2Vector> least_consistent_prefix(const RowFiniteMatrix& m, std::size_t n, std::size_t p,
                                                 std::size_t horizon, const std::optional<TargetFn>& target) {
  const ProjectedSet proj = truncated_projection(m, n, p, horizon, target);
  if (!proj.feasible) return std::nullopt;
  // Generators in reduced echelon form with ascending pivots: clearing each
  // pivot bit greedily gives the lexicographic minimum of the coset.
  Gf2Vector w = proj.particular;
  const auto& e = proj.generators;
  for (std::size_t k = 0; k < e.pivot_columns.size(); ++k) {
    if (w.get(e.pivot_columns[k])) w ^= e.reduced.row(k);
  }
  return w;
}

PrefixSolutionSet exact_prefixes(const PeriodicSpec& spec, std::size_t p, const std::optional<PeriodicTarget>& target,
                                 const TransferOptions& options) {
  if (p > options.max_prefix_length) {
    throw PrefixTooLong("prefix length " + std::to_string(p) + " exceeds the enumeration bound " +
                        std::to_string(options.max_prefix_length));
  }
  const PeriodicTarget b = target ? *target : diagonal_target(spec);
  const TransferAutomaton aut = build_automaton(spec, b, options);
  const Gf2Vector live = live_states(aut);
  const std::size_t c = aut.cell_size();
  const std::size_t pre = aut.preamble_size();

  // Frontier: last state -> prefixes (truncated to p) of paths ending there.
  std::map<State, std::set<Gf2Vector>> frontier;
  for (State s = 0; s < aut.state_count(); ++s) {
    if (!aut.is_start(s) || !live.get(static_cast<std::size_t>(s))) continue;
    const AffineSolutionSet x_pre = aut.preamble_solutions(s);
    const Gf2Vector cells = from_mask(aut.first_cell(s), c).concat(from_mask(aut.second_cell(s), c));
    for (const auto& x : x_pre.enumerate(options.max_preamble_nullity)) {
      const Gf2Vector full = x.concat(cells);
      frontier[s].insert(full.prefix(std::min(p, full.size())));
    }
  }
  if (frontier.empty()) {
    if (is_diagonal(spec, b)) {
      throw InternalTheoremViolation("no live start state for the diagonal target");
    }
    throw Unsolvable("the infinite system has no solution for this target");
  }

  std::size_t assigned = pre + 2 * c;
  while (assigned < p) {
    std::map<State, std::set<Gf2Vector>> next;
    for (const auto& [s, prefixes] : frontier) {
      aut.for_each_successor(s, [&](State t) {
        if (!live.get(static_cast<std::size_t>(t))) return;
        const Gf2Vector w = from_mask(aut.second_cell(t), c);
        auto& bucket = next[t];
        for (const auto& prefix : prefixes) {
          const Gf2Vector grown = prefix.concat(w);
          bucket.insert(grown.prefix(std::min(p, grown.size())));
        }
      });
    }
    frontier = std::move(next);
    assigned += c;
  }

  std::set<Gf2Vector> all;
  for (const auto& [s, prefixes] : frontier) all.insert(prefixes.begin(), prefixes.end());
  return PrefixSolutionSet{p, std::nullopt, {all.begin(), all.end()}};
}

std::string Certificate::to_string() const {
  return horizon_ ? "HORIZON(" + std::to_string(*horizon_) + ")" : "EXACT";
}

CertifiedPrefix solve_prefix(const RowFiniteMatrix& m, std::size_t p, PrefixMode mode,
                             const std::optional<PeriodicTarget>& target, const TransferOptions& options) {
  const PeriodicSpec* spec = m.periodic();
  if (target && spec == nullptr) throw InvalidSpec("a periodic target needs a periodic matrix");
  if (!mode.horizon) {
    if (spec == nullptr) throw InvalidSpec("exact prefixes need a periodic matrix");
    // The least infinite solution starts with the least extendable prefix.
    return {periodic_solution(*spec, target, options).expand(p), Certificate::exact()};
  }
  std::optional<TargetFn> fn;
  if (target) {
    const std::size_t pre = spec->preamble_size();
    fn = [t = *target, pre](std::size_t row) { return t.at(pre, row); };
  }
  auto least = least_consistent_prefix(m, std::max<std::size_t>(p, 1), p, *mode.horizon, fn);
  if (!least) throw Unsolvable("no solution prefix at horizon " + std::to_string(*mode.horizon));
  return {std::move(*least), Certificate::bounded(*mode.horizon)};
}

// ---------------------------------------------------------------------------
// Eventually periodic solutions

Gf2Vector EventuallyPeriodicSolution::expand(std::size_t length) const {
  Gf2Vector out = preamble;
  for (const auto& cell : transient) out = out.concat(cell);
  if (!cycle.empty()) {
    std::size_t k = 0;
    while (out.size() < length) out = out.concat(cycle[k++ % cycle.size()]);
  }
  if (out.size() < length) throw IndexOutOfRange("solution description shorter than requested length");
  return out.prefix(length);
}

EventuallyPeriodicSolution periodic_solution(const PeriodicSpec& spec, const std::optional<PeriodicTarget>& target,
                                             const TransferOptions& options) {
  const PeriodicTarget b = target ? *target : diagonal_target(spec);
  const TransferAutomaton aut = build_automaton(spec, b, options);
  const Gf2Vector live = live_states(aut);
  const std::size_t c = aut.cell_size();

  std::optional<Gf2Vector> best;
  State best_state = 0;
  for (State s = 0; s < aut.state_count(); ++s) {
    if (!aut.is_start(s) || !live.get(static_cast<std::size_t>(s))) continue;
    const Gf2Vector cells = from_mask(aut.first_cell(s), c).concat(from_mask(aut.second_cell(s), c));
    for (const auto& x : aut.preamble_solutions(s).enumerate(options.max_preamble_nullity)) {
      Gf2Vector candidate = x.concat(cells);
      if (!best || candidate < *best) {
        best = std::move(candidate);
        best_state = s;
      }
    }
  }
  if (!best) {
    if (is_diagonal(spec, b)) throw InternalTheoremViolation("no live start state for the diagonal target");
    throw Unsolvable("the infinite system has no solution for this target");
  }

  EventuallyPeriodicSolution out;
  out.preamble = best->prefix(aut.preamble_size());
  std::vector<CellBits> cells{aut.first_cell(best_state), aut.second_cell(best_state)};
  std::map<State, std::size_t> seen;
  State s = best_state;
  while (!seen.contains(s)) {
    seen.emplace(s, cells.size() - 2);
    std::optional<Gf2Vector> least;
    State next = 0;
    aut.for_each_successor(s, [&](State t) {
      if (!live.get(static_cast<std::size_t>(t))) return;
      Gf2Vector w = from_mask(aut.second_cell(t), c);
      if (!least || w < *least) {
        least = std::move(w);
        next = t;
      }
    });
    cells.push_back(aut.second_cell(next));
    s = next;
  }
  // State s first appeared at step j, i.e. cells[j], cells[j+1]; the cell
  // sequence from j on repeats with period (steps so far - j).
  const std::size_t j = seen.at(s);
  const std::size_t period = cells.size() - 2 - j;
  for (std::size_t k = 0; k < j; ++k) out.transient.push_back(from_mask(cells[k], c));
  for (std::size_t k = j; k < j + period; ++k) out.cycle.push_back(from_mask(cells[k], c));
  return out;
}

}  // namespace gf2lights
