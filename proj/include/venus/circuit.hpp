// Circuits and per-gate playback frames.

#pragma once

#include "venus/gates.hpp"
#include "venus/quantum_state.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace venus {

struct Circuit {
  int num_qubits = 1;
  std::vector<GateInstance> gates;
  std::optional<QuantumState> initial_state;

  QuantumState initial() const { return initial_state ? *initial_state : QuantumState::zero(num_qubits); }

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

struct Frame {
  int step = 0;
  std::optional<GateInstance> gate;  // empty for step 0
  QuantumState state;
};

/// Raised by run() with the index (1-based step) of the gate that failed.
class CircuitError : public std::runtime_error {
 public:
  CircuitError(int step, const std::string& what)
      : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

/// Frame k holds the state after the first k gates; returns gates.size() + 1 frames.
std::vector<Frame> run(const Circuit& circuit);

/// Phase-flip oracle marking |11>.
std::vector<GateInstance> grover_oracle_11();
/// Inversion about the mean: H H, X X, CZ, X X, H H.
std::vector<GateInstance> grover_diffuser();
/// Two-qubit Grover search for |11> with the given number of oracle+diffuser iterations.
Circuit grover_circuit(int iterations = 1);

}  // namespace venus
