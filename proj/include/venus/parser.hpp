// JSON ingestion of circuits and raw amplitude lists.
//
// Circuit format:
//   {"qubits": 1|2, "initial": [[re,im],...]?, "gates": [{"name": "h", "params": [...]?, "targets": [0]}]}
// Angles are numbers (radians) or strings such as "pi/2", "-pi/4", "2*pi/3".

#pragma once

#include "venus/circuit.hpp"
#include "venus/quantum_state.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace venus {

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  /// JSON pointer ("/gates/0/targets") for semantic problems; empty for syntax errors.
  std::string pointer;
  /// 1-based line/column for syntax errors; 0 when unknown.
  int line = 0;
  int column = 0;
  std::string message;

  std::string to_string() const;
};

nlohmann::ordered_json to_json(const Diagnostic& d);
bool has_errors(const std::vector<Diagnostic>& diagnostics);

template <typename T>
struct Parsed {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
};

Parsed<Circuit> parse_circuit(std::string_view text);
Parsed<Circuit> parse_circuit(const nlohmann::json& doc, const std::string& base_pointer = "");
inline Parsed<Circuit> parse_circuit(const std::string& text) { return parse_circuit(std::string_view(text)); }
inline Parsed<Circuit> parse_circuit(const char* text) { return parse_circuit(std::string_view(text)); }

/// Parses a JSON array of [re, im] pairs. With `renormalize` the vector is divided by its
/// norm and a warning carries the original norm; otherwise off-norm input is rejected.
Parsed<QuantumState> parse_state(std::string_view text, bool renormalize = false);
Parsed<QuantumState> parse_state(const nlohmann::json& doc, bool renormalize, const std::string& pointer = "");
inline Parsed<QuantumState> parse_state(const std::string& text, bool renormalize = false) {
  return parse_state(std::string_view(text), renormalize);
}
inline Parsed<QuantumState> parse_state(const char* text, bool renormalize = false) {
  return parse_state(std::string_view(text), renormalize);
}

/// Evaluates the angle micro-grammar: [-] atom (* atom)* [/ number], atom = number | pi.
std::optional<double> parse_angle(std::string_view text);

nlohmann::ordered_json to_json(const GateInstance& gate);
nlohmann::ordered_json to_json(const Circuit& circuit);
nlohmann::ordered_json amplitudes_to_json(const QuantumState& state);
std::string serialize(const Circuit& circuit);

}  // namespace venus
