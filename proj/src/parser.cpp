#include "venus/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>

namespace venus {

using nlohmann::json;

namespace {

Diagnostic error_at(std::string pointer, std::string message) {
  return Diagnostic{Severity::Error, std::move(pointer), 0, 0, std::move(message)};
}

Diagnostic warning_at(std::string pointer, std::string message) {
  return Diagnostic{Severity::Warning, std::move(pointer), 0, 0, std::move(message)};
}

Diagnostic syntax_error(std::string_view text, const json::parse_error& e) {
  // e.byte is the 1-based offset of the last byte read.
  const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  std::string message = e.what();
  // Drop nlohmann's "[json.exception.parse_error.101] " prefix.
  if (auto pos = message.find("] "); pos != std::string::npos) message = message.substr(pos + 2);
  return Diagnostic{Severity::Error, "", line, column, "malformed JSON: " + message};
}

std::optional<json> parse_document(std::string_view text, std::vector<Diagnostic>& diags) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    diags.push_back(syntax_error(text, e));
  } catch (const std::exception& e) {
    diags.push_back(Diagnostic{Severity::Error, "", 0, 0, std::string("malformed JSON: ") + e.what()});
  }
  return std::nullopt;
}

void warn_unknown_fields(const json& obj, const std::set<std::string>& known, const std::string& pointer,
                         std::vector<Diagnostic>& diags) {
  for (const auto& [key, value] : obj.items()) {
    if (!known.count(key))
      diags.push_back(warning_at(pointer + (json::json_pointer() / key).to_string(), "unknown field \"" + key + "\" ignored"));
  }
}

std::optional<int> as_int(const json& v) {
  if (v.is_number_integer()) {
    const auto n = v.get<long long>();
    if (n < -1000000 || n > 1000000) return std::nullopt;
    return static_cast<int>(n);
  }
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::isfinite(d) && d == std::floor(d) && std::abs(d) < 1e6) return static_cast<int>(d);
  }
  return std::nullopt;
}

std::optional<double> as_angle(const json& v) {
  if (v.is_number()) {
    const double d = v.get<double>();
    if (std::isfinite(d)) return d;
    return std::nullopt;
  }
  if (v.is_string()) return parse_angle(v.get_ref<const std::string&>());
  return std::nullopt;
}

std::optional<GateInstance> parse_gate(const json& g, const std::string& ptr, int num_qubits,
                                       std::vector<Diagnostic>& diags) {
  if (!g.is_object()) {
    diags.push_back(error_at(ptr, "gate must be an object"));
    return std::nullopt;
  }
  warn_unknown_fields(g, {"name", "params", "targets"}, ptr, diags);

  auto name_it = g.find("name");
  if (name_it == g.end() || !name_it->is_string()) {
    diags.push_back(error_at(name_it == g.end() ? ptr : ptr + "/name", "gate name must be a string"));
    return std::nullopt;
  }
  const std::string& token = name_it->get_ref<const std::string&>();
  auto kind = gate_from_name(token);
  if (!kind) {
    diags.push_back(error_at(ptr + "/name", "unknown gate \"" + token + "\""));
    return std::nullopt;
  }

  GateInstance gate;
  gate.kind = *kind;
  gate.targets.clear();
  bool ok = true;

  if (auto p = g.find("params"); p != g.end()) {
    if (!p->is_array()) {
      diags.push_back(error_at(ptr + "/params", "params must be an array"));
      ok = false;
    } else {
      for (std::size_t k = 0; k < p->size(); ++k) {
        auto angle = as_angle((*p)[k]);
        if (!angle) {
          diags.push_back(error_at(ptr + "/params/" + std::to_string(k), "invalid angle"));
          ok = false;
        } else {
          gate.params.push_back(*angle);
        }
      }
    }
  }
  if (ok && static_cast<int>(gate.params.size()) != gate_param_count(gate.kind)) {
    diags.push_back(error_at(g.contains("params") ? ptr + "/params" : ptr,
                             std::string(gate_name(gate.kind)) + " takes " +
                                 std::to_string(gate_param_count(gate.kind)) + " parameter(s)"));
    ok = false;
  }

  auto t = g.find("targets");
  if (t == g.end() || !t->is_array()) {
    diags.push_back(error_at(t == g.end() ? ptr : ptr + "/targets", "targets must be an array of qubit indices"));
    return std::nullopt;
  }
  for (std::size_t k = 0; k < t->size(); ++k) {
    auto q = as_int((*t)[k]);
    const std::string tp = ptr + "/targets/" + std::to_string(k);
    if (!q) {
      diags.push_back(error_at(tp, "target must be an integer"));
      ok = false;
    } else if (*q < 0 || *q >= num_qubits) {
      diags.push_back(error_at(tp, "target " + std::to_string(*q) + " out of range for " +
                                       std::to_string(num_qubits) + " qubit(s)"));
      ok = false;
    } else {
      gate.targets.push_back(*q);
    }
  }
  if (!ok) return std::nullopt;
  if (static_cast<int>(gate.targets.size()) != gate_target_count(gate.kind)) {
    diags.push_back(error_at(ptr + "/targets", std::string(gate_name(gate.kind)) + " takes " +
                                                   std::to_string(gate_target_count(gate.kind)) + " target(s)"));
    return std::nullopt;
  }
  if (gate.targets.size() == 2 && gate.targets[0] == gate.targets[1]) {
    diags.push_back(error_at(ptr + "/targets", "targets must be distinct"));
    return std::nullopt;
  }
  return gate;
}

}  // namespace

std::string Diagnostic::to_string() const {
  std::string out = severity == Severity::Error ? "error" : "warning";
  if (line > 0) out += " at " + std::to_string(line) + ":" + std::to_string(column);
  else if (!pointer.empty()) out += " at " + pointer;
  return out + ": " + message;
}

nlohmann::ordered_json to_json(const Diagnostic& d) {
  nlohmann::ordered_json j;
  j["severity"] = d.severity == Severity::Error ? "error" : "warning";
  if (d.line > 0) {
    j["line"] = d.line;
    j["column"] = d.column;
  } else {
    j["pointer"] = d.pointer;
  }
  j["message"] = d.message;
  return j;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::optional<double> parse_angle(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> std::optional<double> {
    skip_ws();
    double v = 0;
    auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc() || !std::isfinite(v)) return std::nullopt;
    pos = static_cast<std::size_t>(end - text.data());
    return v;
  };
  auto atom = [&]() -> std::optional<double> {
    skip_ws();
    if (text.substr(pos, 2) == "pi") {
      pos += 2;
      return M_PI;
    }
    return number();
  };
  auto accept = [&](char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  };

  const double sign = accept('-') ? -1.0 : 1.0;
  auto value = atom();
  if (!value) return std::nullopt;
  double result = *value;
  while (accept('*')) {
    auto rhs = atom();
    if (!rhs) return std::nullopt;
    result *= *rhs;
  }
  if (accept('/')) {
    auto rhs = number();
    if (!rhs || *rhs == 0) return std::nullopt;
    result /= *rhs;
  }
  skip_ws();
  if (pos != text.size() || !std::isfinite(result)) return std::nullopt;
  return sign * result;
}

Parsed<QuantumState> parse_state(const json& doc, bool renormalize, const std::string& pointer) {
  Parsed<QuantumState> out;
  auto& diags = out.diagnostics;
  if (!doc.is_array()) {
    diags.push_back(error_at(pointer, "state must be an array of [re, im] pairs"));
    return out;
  }
  if (doc.size() != 2 && doc.size() != 4) {
    diags.push_back(error_at(pointer, "length must be 2 or 4"));
    return out;
  }
  AmplitudeVector<double> amps(static_cast<Eigen::Index>(doc.size()));
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& pair = doc[i];
    const std::string ip = pointer + "/" + std::to_string(i);
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      diags.push_back(error_at(ip, "amplitude must be a [re, im] pair of numbers"));
      continue;
    }
    const double re = pair[0].get<double>();
    const double im = pair[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
      diags.push_back(error_at(ip, "amplitude must be finite"));
      continue;
    }
    amps(static_cast<Eigen::Index>(i)) = {re, im};
  }
  if (has_errors(diags)) return out;

  const double norm = amps.norm();
  if (!renormalize) {
    if (!validate_normalization<double>(amps)) {
      diags.push_back(error_at(pointer, "state is not normalized: squared norm is " + std::to_string(norm * norm)));
      return out;
    }
    out.value = QuantumState::unchecked(std::move(amps));
    return out;
  }
  if (!(norm > 0) || !std::isfinite(norm)) {
    diags.push_back(error_at(pointer, "cannot renormalize the zero vector"));
    return out;
  }
  if (!validate_normalization<double>(amps)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", norm);
    diags.push_back(warning_at(pointer, std::string("renormalized: original norm=") + buf));
    amps /= norm;
  }
  out.value = QuantumState::unchecked(std::move(amps));
  return out;
}

Parsed<QuantumState> parse_state(std::string_view text, bool renormalize) {
  Parsed<QuantumState> out;
  auto doc = parse_document(text, out.diagnostics);
  if (!doc) return out;
  return parse_state(*doc, renormalize);
}

Parsed<Circuit> parse_circuit(const json& doc, const std::string& base) {
  Parsed<Circuit> out;
  auto& diags = out.diagnostics;
  if (!doc.is_object()) {
    diags.push_back(error_at(base, "circuit must be a JSON object"));
    return out;
  }
  warn_unknown_fields(doc, {"qubits", "initial", "gates"}, base, diags);

  Circuit circuit;
  auto q = doc.find("qubits");
  if (q == doc.end()) {
    diags.push_back(error_at(base, "missing \"qubits\""));
    return out;
  }
  auto n = as_int(*q);
  if (!n || (*n != 1 && *n != 2)) {
    diags.push_back(error_at(base + "/qubits", "qubits must be 1 or 2"));
    return out;
  }
  circuit.num_qubits = *n;

  if (auto init = doc.find("initial"); init != doc.end()) {
    auto state = parse_state(*init, false, base + "/initial");
    diags.insert(diags.end(), state.diagnostics.begin(), state.diagnostics.end());
    if (state.value) {
      if (state.value->num_qubits() != circuit.num_qubits)
        diags.push_back(error_at(base + "/initial", "initial state size does not match qubits"));
      else
        circuit.initial_state = state.value;
    }
  }

  auto gates = doc.find("gates");
  if (gates == doc.end()) {
    diags.push_back(error_at(base, "missing \"gates\""));
  } else if (!gates->is_array()) {
    diags.push_back(error_at(base + "/gates", "gates must be an array"));
  } else {
    for (std::size_t i = 0; i < gates->size(); ++i) {
      auto gate = parse_gate((*gates)[i], base + "/gates/" + std::to_string(i), circuit.num_qubits, diags);
      if (gate) circuit.gates.push_back(std::move(*gate));
    }
  }
  if (!has_errors(diags)) out.value = std::move(circuit);
  return out;
}

Parsed<Circuit> parse_circuit(std::string_view text) {
  Parsed<Circuit> out;
  auto doc = parse_document(text, out.diagnostics);
  if (!doc) return out;
  return parse_circuit(*doc);
}

nlohmann::ordered_json amplitudes_to_json(const QuantumState& state) {
  auto arr = nlohmann::ordered_json::array();
  for (int i = 0; i < state.dimension(); ++i) arr.push_back({state[i].real(), state[i].imag()});
  return arr;
}

nlohmann::ordered_json to_json(const GateInstance& gate) {
  nlohmann::ordered_json j;
  j["name"] = std::string(gate_name(gate.kind));
  if (!gate.params.empty()) j["params"] = gate.params;
  j["targets"] = gate.targets;
  return j;
}

nlohmann::ordered_json to_json(const Circuit& circuit) {
  nlohmann::ordered_json j;
  j["qubits"] = circuit.num_qubits;
  if (circuit.initial_state) j["initial"] = amplitudes_to_json(*circuit.initial_state);
  auto gates = nlohmann::ordered_json::array();
  for (const auto& g : circuit.gates) gates.push_back(to_json(g));
  j["gates"] = std::move(gates);
  return j;
}

std::string serialize(const Circuit& circuit) { return to_json(circuit).dump(); }

}  // namespace venus
