#include "gf2lights/gateway/commands.hpp"

#include <cstdio>
#include <ostream>

#include "gf2lights/diagrange.hpp"
#include "gf2lights/errors.hpp"
#include "gf2lights/io.hpp"
#include "gf2lights/lightsout.hpp"
#include "gf2lights/random.hpp"

namespace gf2lights::gateway {

namespace {

std::string one_based_list(const Gf2Vector& v) {
  std::string s;
  for (std::size_t i : v.support()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(i + 1);
  }
  return s;
}

// FNV-1a over the report inputs and outputs.
struct Digest {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  void add(std::string_view bytes) {
    for (unsigned char ch : bytes) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }
};

}  // namespace

int solve_board_command(const std::string& board_path, const std::optional<std::string>& graph_path,
                        std::ostream& out, std::ostream& err) {
  GridBoard board;
  Graph graph;
  try {
    board = parse_board_text(read_file(board_path));
    if (graph_path) {
      graph = graph_from_json(json::parse(read_file(*graph_path)));
      if (graph.vertex_count() != board.state.lights.size()) {
        throw ParseError("board has " + std::to_string(board.state.lights.size()) + " lights but the graph has " +
                         std::to_string(graph.vertex_count()) + " vertices");
      }
    } else {
      graph = classic_grid(board.rows, board.cols);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  const BoardSolution sol = solve_board(graph, board.state, BoardState{Gf2Vector(graph.vertex_count())});
  if (!sol.solvable) {
    out << "UNSOLVABLE\n";
    out << "witness: " << one_based_list(*sol.witness) << '\n';
    return kUnsolvable;
  }
  out << one_based_list(sol.clicks.clicks) << '\n';
  return kOk;
}

int verify_theorem_command(std::size_t trials, std::size_t max_dim, std::uint64_t seed, std::ostream& out,
                           std::ostream& err) {
  if (trials == 0 || max_dim == 0) {
    err << "error: trials and max-dim must be positive\n";
    return kParseError;
  }
  Rng rng(seed);
  Digest digest;
  std::size_t passed = 0;
  std::size_t failed = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t n = 1 + random_below(rng, max_dim);
    const Gf2Matrix a = random_symmetric(rng, n);
    bool ok = false;
    try {
      const Gf2Vector x = solve_diagonal(a);
      ok = certify_diagonal(a, x);
      digest.add(std::to_string(n));
      digest.add(x.to_string());
    } catch (const Error& e) {
      err << "trial " << t << ": " << e.what() << '\n';
    }
    ++(ok ? passed : failed);
  }
  out << "verify-theorem trials=" << trials << " max_dim=" << max_dim << " seed=" << seed << '\n';
  out << "digest " << digest.hex() << '\n';
  out << passed << " passed, " << failed << " failed\n";
  return failed == 0 ? kOk : kVerificationFailed;
}

int prefix_command(const std::string& spec_path, std::size_t p, PrefixMode mode, bool as_json, std::ostream& out,
                   std::ostream& err) {
  PeriodicSpec spec;
  try {
    spec = periodic_spec_from_json(json::parse(read_file(spec_path)));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  try {
    const RowFiniteMatrix m = RowFiniteMatrix::from_periodic(spec);
    if (as_json) {
      const PrefixSolutionSet set = mode.horizon ? consistent_prefixes(m, std::max<std::size_t>(p, 1), p, *mode.horizon)
                                                 : exact_prefixes(spec, p);
      out << prefix_set_to_json(set).dump() << '\n';
      return kOk;
    }
    const CertifiedPrefix r = solve_prefix(m, p, mode);
    out << r.prefix.to_string() << ' ' << r.certificate.to_string() << '\n';
    return kOk;
  } catch (const CellTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kCellTooLarge;
  } catch (const Unsolvable& e) {
    out << "UNSOLVABLE\n";
    return kUnsolvable;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
}

int rank_command(const std::string& matrix_path, std::ostream& out, std::ostream& err) {
  try {
    out << rank(parse_matrix_text(read_file(matrix_path))) << '\n';
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
}

}  // namespace gf2lights::gateway
