#include <csignal>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "gf2lights/gateway/commands.hpp"
#include "gf2lights/gateway/server.hpp"

namespace {

gf2lights::gateway::Server* g_server = nullptr;

void on_signal(int) {
  if (g_server != nullptr) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
  namespace gw = gf2lights::gateway;

  CLI::App app{"Lights Out and GF(2) diagonal-range toolkit"};
  app.require_subcommand(1);

  std::string board_path;
  std::string graph_path;
  auto* solve_cmd = app.add_subcommand("solve-board", "Solve a board to all-off");
  solve_cmd->add_option("--board", board_path, "Board file: 'rows cols' then 0/1 lines")->required();
  solve_cmd->add_option("--graph", graph_path, "Graph JSON {n, edges, self_loops}; default is the classic grid");

  std::size_t trials = 1000;
  std::size_t max_dim = 64;
  std::uint64_t seed = 1;
  auto* verify_cmd = app.add_subcommand("verify-theorem", "Check diag(A) in range(A) on random symmetric matrices");
  verify_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-dim", max_dim)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed);

  std::string spec_path;
  std::size_t p = 0;
  bool exact = false;
  std::size_t horizon = 0;
  bool as_json = false;
  auto* prefix_cmd = app.add_subcommand("prefix", "Certified click prefix for an infinite periodic graph");
  prefix_cmd->add_option("--spec", spec_path, "Periodic spec JSON")->required();
  prefix_cmd->add_option("-p", p, "Prefix length")->required();
  auto* exact_flag = prefix_cmd->add_flag("--exact", exact, "Exact extendable prefixes");
  auto* horizon_opt = prefix_cmd->add_option("--horizon", horizon, "Horizon-bounded prefixes")->check(CLI::PositiveNumber);
  exact_flag->excludes(horizon_opt);
  prefix_cmd->add_flag("--json", as_json, "Print the whole prefix set as JSON");

  std::string matrix_path;
  auto* rank_cmd = app.add_subcommand("rank", "Rank of a matrix file");
  rank_cmd->add_option("--matrix", matrix_path)->required();

  int port = 8080;
  std::string host = "127.0.0.1";
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  serve_cmd->add_option("--port", port);
  serve_cmd->add_option("--host", host);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : gw::kParseError;
  }

  if (*solve_cmd) {
    return gw::solve_board_command(board_path, graph_path.empty() ? std::nullopt : std::optional(graph_path),
                                   std::cout, std::cerr);
  }
  if (*verify_cmd) return gw::verify_theorem_command(trials, max_dim, seed, std::cout, std::cerr);
  if (*prefix_cmd) {
    const auto mode = *horizon_opt ? gf2lights::PrefixMode::bounded(horizon) : gf2lights::PrefixMode::exact();
    return gw::prefix_command(spec_path, p, mode, as_json, std::cout, std::cerr);
  }
  if (*rank_cmd) return gw::rank_command(matrix_path, std::cout, std::cerr);
  if (*serve_cmd) {
    gw::Server server;
    if (!server.bind(host, port)) {
      std::cerr << "error: cannot bind " << host << ':' << port << '\n';
      return 1;
    }
    g_server = &server;
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    std::cerr << "listening on http://" << host << ':' << port << '\n';
    server.listen();
    return 0;
  }
  return 0;
}
