#include "venus/circuit.hpp"

namespace venus {

std::vector<Frame> run(const Circuit& circuit) {
  std::vector<Frame> frames;
  frames.reserve(circuit.gates.size() + 1);
  QuantumState state = circuit.initial();
  if (state.num_qubits() != circuit.num_qubits)
    throw CircuitError(0, "initial state has " + std::to_string(state.num_qubits()) + " qubit(s), circuit has " +
                              std::to_string(circuit.num_qubits));
  frames.push_back(Frame{0, std::nullopt, state});
  int step = 0;
  for (const GateInstance& gate : circuit.gates) {
    ++step;
    try {
      state = apply_gate(state, gate);
    } catch (const std::exception& e) {
      throw CircuitError(step, e.what());
    }
    frames.push_back(Frame{step, gate, state});
  }
  return frames;
}

std::vector<GateInstance> grover_oracle_11() { return {make_gate(GateKind::CZ, {0, 1})}; }

std::vector<GateInstance> grover_diffuser() {
  return {make_gate(GateKind::H, {0}), make_gate(GateKind::H, {1}), make_gate(GateKind::X, {0}),
          make_gate(GateKind::X, {1}), make_gate(GateKind::CZ, {0, 1}), make_gate(GateKind::X, {0}),
          make_gate(GateKind::X, {1}), make_gate(GateKind::H, {0}), make_gate(GateKind::H, {1})};
}

Circuit grover_circuit(int iterations) {
  Circuit c;
  c.num_qubits = 2;
  c.gates = {make_gate(GateKind::H, {0}), make_gate(GateKind::H, {1})};
  for (int k = 0; k < iterations; ++k) {
    for (auto& g : grover_oracle_11()) c.gates.push_back(g);
    for (auto& g : grover_diffuser()) c.gates.push_back(g);
  }
  return c;
}

}  // namespace venus
