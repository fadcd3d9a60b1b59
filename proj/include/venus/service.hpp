// Stateless request handlers shared by the HTTP server and the CLI.
//
// Request:  {"state"?: [[re,im],...], "circuit"?: {...}, "scale"?: number, "order"?: [0,1]|[1,0],
//            "renormalize"?: bool}
// Response: {"schema_version": ..., ..., "diagnostics": [...]}

#pragma once

#include "venus/circuit.hpp"
#include "venus/geometry.hpp"
#include "venus/parser.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace venus {

inline constexpr const char* kApiSchemaVersion = "venus-api/1";
inline constexpr const char* kVersion = "1.0.0";

struct ApiResponse {
  int status = 200;
  std::string body;
};

/// Options shared by every endpoint, already validated.
struct RenderOptions {
  double scale = kDefaultScale;
  DisplayOrder order = DisplayOrder::identity(2);
  bool renormalize = false;
};

/// Per-frame probabilities manifest: {"frames":[{"step","gate","probabilities"}]}.
nlohmann::ordered_json frames_manifest(const std::vector<Frame>& frames);

/// {"schema_version", "diagram", "diagnostics"} for one state.
nlohmann::ordered_json geometry_document(const QuantumState& state, const RenderOptions& options,
                                         const std::vector<Diagnostic>& diagnostics);

/// {"schema_version", "frames": [{"step","gate","state","probabilities","diagram"}], "diagnostics"}.
nlohmann::ordered_json frames_document(const std::vector<Frame>& frames, const RenderOptions& options,
                                       const std::vector<Diagnostic>& diagnostics);

/// {"schema_version", "diagnostics"} for a rejected request.
nlohmann::ordered_json error_document(const std::vector<Diagnostic>& diagnostics);

/// Compact serialization used for every response body and CLI JSON output.
std::string dump_document(const nlohmann::ordered_json& doc);

/// Parses "0,1" / "1,0" (or "0").
std::optional<DisplayOrder> parse_order(std::string_view text);

ApiResponse handle_state_geometry(std::string_view body);
ApiResponse handle_circuit_frames(std::string_view body);
ApiResponse handle_health();

}  // namespace venus
