#include "venus/server.hpp"

#include "venus/service.hpp"

#include <iostream>

namespace venus {

namespace {

constexpr const char* kJson = "application/json";

void reply(httplib::Response& res, const ApiResponse& api) {
  res.status = api.status;
  res.set_content(api.body, kJson);
}

}  // namespace

bool configure_routes(httplib::Server& server, const ServeOptions& options) {
  // SO_REUSEADDR only: the library default also sets SO_REUSEPORT, which would let a
  // second instance silently share a port that is already in use.
  server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
  });
  server.Get("/api/health", [](const httplib::Request&, httplib::Response& res) { reply(res, handle_health()); });
  server.Post("/api/state/geometry", [](const httplib::Request& req, httplib::Response& res) {
    reply(res, handle_state_geometry(req.body));
  });
  server.Post("/api/circuit/frames", [](const httplib::Request& req, httplib::Response& res) {
    reply(res, handle_circuit_frames(req.body));
  });
  server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    reply(res, ApiResponse{500, dump_document(error_document({Diagnostic{Severity::Error, "", 0, 0, what}}))});
  });
  if (!options.static_dir.empty()) return server.set_mount_point("/", options.static_dir);
  return true;
}

int serve(const ServeOptions& options) {
  httplib::Server server;
  if (!configure_routes(server, options)) {
    std::cerr << "cannot serve static directory " << options.static_dir << "\n";
    return 1;
  }
  if (!server.bind_to_port(options.host, options.port)) {
    std::cerr << "cannot listen on " << options.host << ":" << options.port << "\n";
    return 1;
  }
  std::cerr << "listening on " << options.host << ":" << options.port << "\n";
  return server.listen_after_bind() ? 0 : 1;
}

}  // namespace venus
