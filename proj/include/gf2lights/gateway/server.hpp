#pragma once

#include <cstddef>
#include <string>

#include "httplib.h"

#include "gf2lights/gateway/api.hpp"

namespace gf2lights::gateway {

// HTTP/1.1 transport for Api. Requests run on the httplib worker pool;
// per-session locking happens inside Api.
class Server {
 public:
  explicit Server(std::size_t capacity = SessionStore::kDefaultCapacity);

  bool bind(const std::string& host, int port);
  // Returns the chosen port, or -1.
  int bind_any(const std::string& host);
  // Blocks until stop() is called.
  bool listen();
  void stop();
  bool running() const { return http_.is_running(); }

  Api& api() noexcept { return api_; }

 private:
  Api api_;
  httplib::Server http_;
};

}  // namespace gf2lights::gateway
