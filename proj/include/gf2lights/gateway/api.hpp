#pragma once

// JSON request handlers behind the HTTP service. Each handler returns a
// status code and a JSON body; transport lives in server.hpp.
//
//   POST /boards                 {grid:{rows,cols} | graph:{...} | spec:{...}, initial?, window?}
//   GET  /boards/{id}
//   POST /boards/{id}/press      {vertex}
//   POST /boards/{id}/window     {window}            (infinite boards)
//   GET  /boards/{id}/hint       ?target=off|self-loops&horizon=H
//   GET  /boards/{id}/solution   ?target=off|self-loops&horizon=H
//   POST /infinite/prefix        {spec, p, mode: "exact" | {horizon: H}}
//
// Vertices are numbered from 1 on the wire.

#include <cstddef>
#include <optional>
#include <string>

#include "gf2lights/gateway/sessions.hpp"
#include "gf2lights/io.hpp"

namespace gf2lights::gateway {

struct ApiResponse {
  int status = 200;
  json body;
};

enum class HintTarget { AllOff, SelfLoops };

class Api {
 public:
  static constexpr std::size_t kDefaultHorizon = 16;
  static constexpr std::size_t kMaxWindow = 4096;

  explicit Api(std::size_t capacity = SessionStore::kDefaultCapacity) : sessions_(capacity) {}

  ApiResponse create_board(const std::string& body);
  ApiResponse get_board(const std::string& id);
  ApiResponse press(const std::string& id, const std::string& body);
  ApiResponse set_window(const std::string& id, const std::string& body);
  ApiResponse hint(const std::string& id, const std::string& target, const std::string& horizon);
  ApiResponse solution(const std::string& id, const std::string& target, const std::string& horizon);
  ApiResponse infinite_prefix(const std::string& body);

  SessionStore& sessions() noexcept { return sessions_; }

 private:
  SessionStore sessions_;
};

}  // namespace gf2lights::gateway
