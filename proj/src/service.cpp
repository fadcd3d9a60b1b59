#include "venus/service.hpp"

#include <cmath>
#include <set>

namespace venus {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

ojson diagnostics_json(const std::vector<Diagnostic>& diagnostics) {
  auto arr = ojson::array();
  for (const auto& d : diagnostics) arr.push_back(to_json(d));
  return arr;
}

ojson probabilities_json(const QuantumState& state) { return ojson(probabilities(state)); }

ojson gate_json(const std::optional<GateInstance>& gate) { return gate ? to_json(*gate) : ojson(nullptr); }

struct Request {
  json doc;
  RenderOptions options;
  std::vector<Diagnostic> diagnostics;
};

/// Parses the envelope and the shared options, recording problems as diagnostics.
Request parse_request(std::string_view body) {
  Request req;
  try {
    req.doc = json::parse(body.begin(), body.end());
  } catch (const std::exception& e) {
    req.diagnostics.push_back(Diagnostic{Severity::Error, "", 0, 0, std::string("malformed JSON: ") + e.what()});
    return req;
  }
  if (!req.doc.is_object()) {
    req.diagnostics.push_back(Diagnostic{Severity::Error, "", 0, 0, "request must be a JSON object"});
    return req;
  }
  static const std::set<std::string> known{"state", "circuit", "scale", "order", "renormalize"};
  for (const auto& [key, value] : req.doc.items())
    if (!known.count(key))
      req.diagnostics.push_back(Diagnostic{Severity::Warning, (json::json_pointer() / key).to_string(), 0, 0,
                                           "unknown field \"" + key + "\" ignored"});

  if (auto it = req.doc.find("scale"); it != req.doc.end()) {
    if (!it->is_number() || !(it->get<double>() > 0) || !std::isfinite(it->get<double>()))
      req.diagnostics.push_back(Diagnostic{Severity::Error, "/scale", 0, 0, "scale must be a positive number"});
    else
      req.options.scale = it->get<double>();
  }
  if (auto it = req.doc.find("order"); it != req.doc.end()) {
    DisplayOrder order{{}};
    bool ok = it->is_array();
    if (ok)
      for (const auto& q : *it) {
        if (!q.is_number_integer()) {
          ok = false;
          break;
        }
        order.permutation.push_back(q.get<int>());
      }
    if (!ok || !order.is_valid_for(2))
      req.diagnostics.push_back(Diagnostic{Severity::Error, "/order", 0, 0, "order must be [0,1] or [1,0]"});
    else
      req.options.order = order;
  }
  if (auto it = req.doc.find("renormalize"); it != req.doc.end()) {
    if (!it->is_boolean())
      req.diagnostics.push_back(Diagnostic{Severity::Error, "/renormalize", 0, 0, "renormalize must be a boolean"});
    else
      req.options.renormalize = it->get<bool>();
  }
  return req;
}

ApiResponse bad_request(const std::vector<Diagnostic>& diagnostics) {
  return ApiResponse{400, dump_document(error_document(diagnostics))};
}

}  // namespace

std::string dump_document(const nlohmann::ordered_json& doc) {
  return doc.dump(-1, ' ', false, ojson::error_handler_t::replace);
}

nlohmann::ordered_json frames_manifest(const std::vector<Frame>& frames) {
  auto arr = ojson::array();
  for (const auto& f : frames) {
    ojson entry;
    entry["step"] = f.step;
    entry["gate"] = gate_json(f.gate);
    entry["probabilities"] = probabilities_json(f.state);
    arr.push_back(std::move(entry));
  }
  ojson j;
  j["frames"] = std::move(arr);
  return j;
}

nlohmann::ordered_json geometry_document(const QuantumState& state, const RenderOptions& options,
                                         const std::vector<Diagnostic>& diagnostics) {
  ojson j;
  j["schema_version"] = kApiSchemaVersion;
  j["diagram"] = to_json(layout(state, options.scale, options.order));
  j["diagnostics"] = diagnostics_json(diagnostics);
  return j;
}

nlohmann::ordered_json frames_document(const std::vector<Frame>& frames, const RenderOptions& options,
                                       const std::vector<Diagnostic>& diagnostics) {
  auto arr = ojson::array();
  for (const auto& f : frames) {
    ojson entry;
    entry["step"] = f.step;
    entry["gate"] = gate_json(f.gate);
    entry["state"] = amplitudes_to_json(f.state);
    entry["probabilities"] = probabilities_json(f.state);
    entry["diagram"] = to_json(layout(f.state, options.scale, options.order));
    arr.push_back(std::move(entry));
  }
  ojson j;
  j["schema_version"] = kApiSchemaVersion;
  j["frames"] = std::move(arr);
  j["diagnostics"] = diagnostics_json(diagnostics);
  return j;
}

nlohmann::ordered_json error_document(const std::vector<Diagnostic>& diagnostics) {
  ojson j;
  j["schema_version"] = kApiSchemaVersion;
  j["diagnostics"] = diagnostics_json(diagnostics);
  return j;
}

std::optional<DisplayOrder> parse_order(std::string_view text) {
  if (text == "0,1") return DisplayOrder::identity(2);
  if (text == "1,0") return DisplayOrder::swapped();
  if (text == "0") return DisplayOrder::identity(1);
  return std::nullopt;
}

ApiResponse handle_state_geometry(std::string_view body) {
  auto req = parse_request(body);
  if (has_errors(req.diagnostics)) return bad_request(req.diagnostics);
  auto& diags = req.diagnostics;

  auto it = req.doc.find("state");
  if (it == req.doc.end()) {
    diags.push_back(Diagnostic{Severity::Error, "", 0, 0, "missing \"state\""});
    return bad_request(diags);
  }
  auto state = parse_state(*it, req.options.renormalize, "/state");
  diags.insert(diags.end(), state.diagnostics.begin(), state.diagnostics.end());
  if (!state.ok()) return bad_request(diags);
  return ApiResponse{200, dump_document(geometry_document(*state.value, req.options, diags))};
}

ApiResponse handle_circuit_frames(std::string_view body) {
  auto req = parse_request(body);
  if (has_errors(req.diagnostics)) return bad_request(req.diagnostics);
  auto& diags = req.diagnostics;

  auto it = req.doc.find("circuit");
  if (it == req.doc.end()) {
    diags.push_back(Diagnostic{Severity::Error, "", 0, 0, "missing \"circuit\""});
    return bad_request(diags);
  }
  auto circuit = parse_circuit(*it, "/circuit");
  diags.insert(diags.end(), circuit.diagnostics.begin(), circuit.diagnostics.end());
  if (!circuit.ok()) return bad_request(diags);

  if (auto s = req.doc.find("state"); s != req.doc.end()) {
    auto state = parse_state(*s, req.options.renormalize, "/state");
    diags.insert(diags.end(), state.diagnostics.begin(), state.diagnostics.end());
    if (!state.ok()) return bad_request(diags);
    if (state.value->num_qubits() != circuit.value->num_qubits) {
      diags.push_back(Diagnostic{Severity::Error, "/state", 0, 0, "state size does not match circuit qubits"});
      return bad_request(diags);
    }
    circuit.value->initial_state = state.value;
  }

  try {
    const auto frames = run(*circuit.value);
    return ApiResponse{200, dump_document(frames_document(frames, req.options, diags))};
  } catch (const CircuitError& e) {
    diags.push_back(Diagnostic{Severity::Error, e.step() > 0 ? "/circuit/gates/" + std::to_string(e.step() - 1) : "/circuit", 0, 0, e.what()});
    return bad_request(diags);
  }
}

ApiResponse handle_health() {
  ojson j;
  j["status"] = "ok";
  j["version"] = kVersion;
  j["schema_version"] = kApiSchemaVersion;
  return ApiResponse{200, dump_document(j)};
}

}  // namespace venus
