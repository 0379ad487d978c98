#include "gf2lights/gateway/server.hpp"

namespace gf2lights::gateway {

namespace {

void reply(httplib::Response& res, const ApiResponse& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json; charset=utf-8");
}

std::string param(const httplib::Request& req, const char* name) {
  return req.has_param(name) ? req.get_param_value(name) : std::string();
}

}  // namespace

Server::Server(std::size_t capacity) : api_(capacity) {
  http_.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                             {"Access-Control-Allow-Headers", "Content-Type"}});
  http_.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  http_.Post("/boards", [this](const httplib::Request& req, httplib::Response& res) {
    reply(res, api_.create_board(req.body));
  });
  http_.Get(R"(/boards/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
    reply(res, api_.get_board(req.matches[1]));
  });
  http_.Post(R"(/boards/([^/]+)/press)", [this](const httplib::Request& req, httplib::Response& res) {
    reply(res, api_.press(req.matches[1], req.body));
  });
  http_.Post(R"(/boards/([^/]+)/window)", [this](const httplib::Request& req, httplib::Response& res) {
    reply(res, api_.set_window(req.matches[1], req.body));
  });
  http_.Get(R"(/boards/([^/]+)/hint)", [this](const httplib::Request& req, httplib::Response& res) {
    reply(res, api_.hint(req.matches[1], param(req, "target"), param(req, "horizon")));
  });
  http_.Get(R"(/boards/([^/]+)/solution)", [this](const httplib::Request& req, httplib::Response& res) {
    reply(res, api_.solution(req.matches[1], param(req, "target"), param(req, "horizon")));
  });
  http_.Post("/infinite/prefix", [this](const httplib::Request& req, httplib::Response& res) {
    reply(res, api_.infinite_prefix(req.body));
  });
  http_.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) {
      res.set_content(json{{"error", "status " + std::to_string(res.status)}}.dump(), "application/json");
    }
  });
}

bool Server::bind(const std::string& host, int port) { return http_.bind_to_port(host, port); }

int Server::bind_any(const std::string& host) { return http_.bind_to_any_port(host); }

bool Server::listen() { return http_.listen_after_bind(); }

void Server::stop() { http_.stop(); }

}  // namespace gf2lights::gateway
