// HTTP facade over the stateless handlers in service.hpp.

#pragma once

// Eigen must precede httplib: <resolv.h> defines a `_res` macro that breaks Eigen headers.
#include "venus/service.hpp"

#include <httplib.h>

#include <string>

namespace venus {

struct ServeOptions {
  std::string host = "0.0.0.0";
  int port = 8080;
  /// Optional directory served at "/" (the UI bundle).
  std::string static_dir;
};

/// Installs the /api routes (and static mount, if any). Returns false when the static
/// directory cannot be mounted.
bool configure_routes(httplib::Server& server, const ServeOptions& options);

/// Blocks until the server stops. Returns nonzero when startup fails (e.g. port in use).
int serve(const ServeOptions& options);

}  // namespace venus
