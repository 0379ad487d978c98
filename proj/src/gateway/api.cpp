#include "gf2lights/gateway/api.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>

#include "gf2lights/errors.hpp"

namespace gf2lights::gateway {

namespace {

// Raised for malformed requests; mapped to 400.
struct BadRequest : Error {
  using Error::Error;
};

ApiResponse error(int status, const std::string& message) { return {status, {{"error", message}}}; }

json parse_body(const std::string& body) {
  json j = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) throw BadRequest("request body must be a JSON object");
  return j;
}

std::size_t positive_field(const json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_number_integer() || j[name].get<long long>() < 1) {
    throw BadRequest(std::string("'") + name + "' must be a positive integer");
  }
  return static_cast<std::size_t>(j[name].get<long long>());
}

HintTarget parse_target(const std::string& s) {
  if (s.empty() || s == "off") return HintTarget::AllOff;
  if (s == "self-loops") return HintTarget::SelfLoops;
  throw BadRequest("target must be 'off' or 'self-loops'");
}

std::size_t parse_horizon(const std::string& s) {
  if (s.empty()) return Api::kDefaultHorizon;
  std::size_t h = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), h);
  if (ec != std::errc{} || ptr != s.data() + s.size() || h == 0) throw BadRequest("horizon must be a positive integer");
  return h;
}

const char* target_name(HintTarget t) { return t == HintTarget::AllOff ? "off" : "self-loops"; }

json one_based(const Gf2Vector& v) {
  json out = json::array();
  for (std::size_t i : v.support()) out.push_back(i + 1);
  return out;
}

Gf2Vector window_bits(const Session& s) {
  Gf2Vector v(s.window);
  for (std::size_t i : s.lit) {
    if (i > s.window) break;
    v.set(i - 1);
  }
  return v;
}

json board_json(const Session& s) {
  if (s.is_infinite()) {
    const RowFiniteMatrix& m = s.infinite->matrix;
    Gf2Vector loops(s.window);
    for (std::size_t i = 1; i <= s.window; ++i) {
      if (m.diagonal_entry(i)) loops.set(i - 1);
    }
    json j = {{"id", s.id},
              {"kind", "infinite"},
              {"window", s.window},
              {"state", window_bits(s).to_string()},
              {"self_loops", loops.to_string()},
              {"lit_beyond_window", std::count_if(s.lit.begin(), s.lit.end(), [&](std::size_t i) { return i > s.window; })}};
    if (const PeriodicSpec* spec = m.periodic()) j["spec"] = periodic_spec_to_json(*spec);
    return j;
  }
  json j = {{"id", s.id},
            {"kind", "finite"},
            {"n", s.graph->vertex_count()},
            {"state", s.state.lights.to_string()},
            {"self_loops", s.graph->self_loops().to_string()},
            {"graph", graph_to_json(*s.graph)}};
  if (s.grid_rows) {
    j["rows"] = *s.grid_rows;
    j["cols"] = *s.grid_cols;
  }
  return j;
}

BoardState parse_initial(const json& body, std::size_t n) {
  if (!body.contains("initial")) return {Gf2Vector(n)};
  if (!body["initial"].is_string()) throw BadRequest("'initial' must be a bit string, \"all-on\" or \"all-off\"");
  const auto text = body["initial"].get<std::string>();
  if (text == "all-on") return {Gf2Vector::ones(n)};
  if (text == "all-off") return {Gf2Vector(n)};
  if (text.size() != n) throw BadRequest("'initial' must have one bit per vertex");
  return {Gf2Vector::from_string(text)};
}

// Finite part of the infinite right-hand side for the session's target.
TargetFn infinite_target(const Session& s, HintTarget target) {
  const RowFiniteMatrix m = s.infinite->matrix;
  const std::set<std::size_t> lit = s.lit;
  const bool with_diagonal = target == HintTarget::SelfLoops;
  return [m, lit, with_diagonal](std::size_t i) {
    const bool on = lit.contains(i);
    return with_diagonal ? (m.diagonal_entry(i) != on) : on;
  };
}

struct InfiniteAnswer {
  std::optional<Gf2Vector> clicks;
  Certificate certificate;
};

InfiniteAnswer solve_infinite(const Session& s, HintTarget target, std::size_t horizon) {
  const RowFiniteMatrix& m = s.infinite->matrix;
  const std::size_t p = s.window;
  if (s.lit.empty()) {
    if (const PeriodicSpec* spec = m.periodic()) {
      PeriodicTarget t = diagonal_target(*spec);
      if (target == HintTarget::AllOff) t = {Gf2Vector(spec->preamble_size()), Gf2Vector(spec->cell_size)};
      try {
        return {solve_prefix(m, p, PrefixMode::exact(), t).prefix, Certificate::exact()};
      } catch (const Unsolvable&) {
        return {std::nullopt, Certificate::exact()};
      }
    }
  }
  auto least = least_consistent_prefix(m, std::max<std::size_t>(p, 1), p, horizon, infinite_target(s, target));
  return {std::move(least), Certificate::bounded(horizon)};
}

template <class F>
ApiResponse guarded(F&& f) {
  try {
    return f();
  } catch (const BadRequest& e) {
    return error(400, e.what());
  } catch (const ParseError& e) {
    return error(400, e.what());
  } catch (const InvalidSpec& e) {
    return error(400, e.what());
  } catch (const InvalidGraph& e) {
    return error(400, e.what());
  } catch (const PrefixTooLong& e) {
    return error(400, e.what());
  } catch (const CellTooLarge& e) {
    return error(400, e.what());
  } catch (const IndexOutOfRange& e) {
    return error(400, e.what());
  } catch (const json::exception& e) {
    return error(400, e.what());
  } catch (const std::exception& e) {
    return error(500, e.what());
  }
}

}  // namespace

ApiResponse Api::create_board(const std::string& body) {
  return guarded([&] {
    const json j = parse_body(body);
    auto s = std::make_shared<Session>();
    if (j.contains("grid")) {
      const json& g = j["grid"];
      if (!g.is_object()) throw BadRequest("'grid' must be an object");
      const std::size_t rows = positive_field(g, "rows");
      const std::size_t cols = positive_field(g, "cols");
      if (rows * cols > kMaxWindow) throw BadRequest("grid too large");
      s->graph = classic_grid(rows, cols);
      s->grid_rows = rows;
      s->grid_cols = cols;
      s->state = parse_initial(j, rows * cols);
    } else if (j.contains("graph")) {
      s->graph = graph_from_json(j["graph"]);
      if (s->graph->vertex_count() > kMaxWindow) throw BadRequest("graph too large");
      s->state = parse_initial(j, s->graph->vertex_count());
    } else if (j.contains("spec")) {
      s->infinite = InfiniteGraph::from_spec(periodic_spec_from_json(j["spec"]));
      s->window = j.contains("window") ? positive_field(j, "window") : 12;
      if (s->window > kMaxWindow) throw BadRequest("window too large");
    } else {
      throw BadRequest("body needs 'grid', 'graph' or 'spec'");
    }
    auto stored = sessions_.insert(std::move(s));
    std::lock_guard lock(stored->mutex);
    return ApiResponse{201, board_json(*stored)};
  });
}

ApiResponse Api::get_board(const std::string& id) {
  return guarded([&] {
    auto s = sessions_.find(id);
    if (!s) return error(404, "unknown board " + id);
    std::lock_guard lock(s->mutex);
    return ApiResponse{200, board_json(*s)};
  });
}

ApiResponse Api::press(const std::string& id, const std::string& body) {
  return guarded([&] {
    auto s = sessions_.find(id);
    if (!s) return error(404, "unknown board " + id);
    const json j = parse_body(body);
    const std::size_t v = positive_field(j, "vertex");
    std::lock_guard lock(s->mutex);
    if (s->is_infinite()) {
      if (v > kMaxWindow * 16) throw BadRequest("vertex out of range");
      for (std::size_t u : s->infinite->matrix.support(v)) {
        if (!s->lit.erase(u)) s->lit.insert(u);
      }
    } else {
      if (v > s->graph->vertex_count()) throw BadRequest("vertex out of range");
      s->state = gf2lights::press(*s->graph, s->state, v - 1);
    }
    return ApiResponse{200, board_json(*s)};
  });
}

ApiResponse Api::set_window(const std::string& id, const std::string& body) {
  return guarded([&] {
    auto s = sessions_.find(id);
    if (!s) return error(404, "unknown board " + id);
    const json j = parse_body(body);
    const std::size_t w = positive_field(j, "window");
    if (w > kMaxWindow) throw BadRequest("window too large");
    std::lock_guard lock(s->mutex);
    if (!s->is_infinite()) throw BadRequest("only infinite boards have a window");
    s->window = w;
    return ApiResponse{200, board_json(*s)};
  });
}

ApiResponse Api::hint(const std::string& id, const std::string& target_text, const std::string& horizon_text) {
  return guarded([&] {
    auto s = sessions_.find(id);
    if (!s) return error(404, "unknown board " + id);
    const HintTarget target = parse_target(target_text);
    const std::size_t horizon = parse_horizon(horizon_text);
    std::lock_guard lock(s->mutex);
    json out = {{"target", target_name(target)}};
    std::optional<Gf2Vector> clicks;
    if (s->is_infinite()) {
      InfiniteAnswer a = solve_infinite(*s, target, horizon);
      clicks = std::move(a.clicks);
      out["certificate"] = a.certificate.to_string();
    } else {
      const BoardState goal = target == HintTarget::AllOff ? BoardState{Gf2Vector(s->graph->vertex_count())}
                                                           : BoardState{s->graph->self_loops()};
      BoardSolution sol = solve_board(*s->graph, s->state, goal);
      if (sol.solvable) {
        clicks = std::move(sol.clicks.clicks);
      } else {
        out["witness"] = one_based(*sol.witness);
      }
    }
    out["solvable"] = clicks.has_value();
    if (clicks) {
      const std::size_t first = clicks->find_first();
      out["done"] = first == clicks->size();
      out["vertex"] = first == clicks->size() ? json(nullptr) : json(first + 1);
    }
    return ApiResponse{200, out};
  });
}

ApiResponse Api::solution(const std::string& id, const std::string& target_text, const std::string& horizon_text) {
  return guarded([&] {
    auto s = sessions_.find(id);
    if (!s) return error(404, "unknown board " + id);
    const HintTarget target = parse_target(target_text);
    const std::size_t horizon = parse_horizon(horizon_text);
    std::lock_guard lock(s->mutex);
    json out = {{"target", target_name(target)}};
    if (s->is_infinite()) {
      InfiniteAnswer a = solve_infinite(*s, target, horizon);
      out["solvable"] = a.clicks.has_value();
      out["certificate"] = a.certificate.to_string();
      out["window"] = s->window;
      if (a.clicks) {
        out["clicks"] = one_based(*a.clicks);
        out["count"] = a.clicks->count();
      }
      return ApiResponse{200, out};
    }
    const BoardState goal = target == HintTarget::AllOff ? BoardState{Gf2Vector(s->graph->vertex_count())}
                                                         : BoardState{s->graph->self_loops()};
    const BoardSolution sol = solve_board(*s->graph, s->state, goal);
    out["solvable"] = sol.solvable;
    if (sol.solvable) {
      out["clicks"] = one_based(sol.clicks.clicks);
      out["count"] = sol.clicks.clicks.count();
      out["nullity"] = sol.nullity;
    } else {
      out["witness"] = one_based(*sol.witness);
    }
    return ApiResponse{200, out};
  });
}

ApiResponse Api::infinite_prefix(const std::string& body) {
  return guarded([&] {
    const json j = parse_body(body);
    if (!j.contains("spec")) throw BadRequest("body needs 'spec'");
    const PeriodicSpec spec = periodic_spec_from_json(j["spec"]);
    const std::size_t p = positive_field(j, "p");
    PrefixMode mode = PrefixMode::exact();
    if (j.contains("mode")) {
      const json& m = j["mode"];
      if (m.is_string() && m.get<std::string>() == "exact") {
        mode = PrefixMode::exact();
      } else if (m.is_object()) {
        mode = PrefixMode::bounded(positive_field(m, "horizon"));
      } else {
        throw BadRequest("mode must be \"exact\" or {\"horizon\": H}");
      }
    }
    const RowFiniteMatrix matrix = RowFiniteMatrix::from_periodic(spec);
    json out = {{"p", p}};
    try {
      const CertifiedPrefix r = solve_prefix(matrix, p, mode);
      out["solvable"] = true;
      out["prefix"] = r.prefix.to_string();
      out["certificate"] = r.certificate.to_string();
    } catch (const Unsolvable&) {
      out["solvable"] = false;
      return ApiResponse{200, out};
    }
    const TransferOptions options;
    if (p <= options.max_prefix_length) {
      const PrefixSolutionSet set = mode.horizon ? consistent_prefixes(matrix, p, p, *mode.horizon)
                                                 : exact_prefixes(spec, p);
      const json s = prefix_set_to_json(set);
      out["horizon"] = s["horizon"];
      out["prefixes"] = s["prefixes"];
    } else {
      out["horizon"] = mode.horizon ? json(*mode.horizon) : json("exact");
    }
    if (!mode.horizon) {
      const EventuallyPeriodicSolution full = periodic_solution(spec);
      json transient = json::array();
      json cycle = json::array();
      for (const auto& c : full.transient) transient.push_back(c.to_string());
      for (const auto& c : full.cycle) cycle.push_back(c.to_string());
      out["periodic"] = {{"preamble", full.preamble.to_string()}, {"transient", transient}, {"cycle", cycle}};
    }
    return ApiResponse{200, out};
  });
}

}  // namespace gf2lights::gateway
