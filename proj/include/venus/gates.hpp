// Gate definitions and their unitaries on a 1- or 2-qubit register.

#pragma once

#include "venus/quantum_state.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace venus {

enum class GateKind { I, X, Y, Z, H, S, T, RX, RY, RZ, Phase, CNOT, CZ, Swap };

inline constexpr std::array<GateKind, 14> kAllGates{GateKind::I,  GateKind::X,     GateKind::Y,    GateKind::Z,
                                                    GateKind::H,  GateKind::S,     GateKind::T,    GateKind::RX,
                                                    GateKind::RY, GateKind::RZ,    GateKind::Phase, GateKind::CNOT,
                                                    GateKind::CZ, GateKind::Swap};

/// Canonical lowercase name used by the circuit format.
std::string_view gate_name(GateKind kind);
/// Case-insensitive lookup; std::nullopt for an unknown token.
std::optional<GateKind> gate_from_name(std::string_view name);

inline int gate_param_count(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::Phase:
      return 1;
    default:
      return 0;
  }
}

inline int gate_target_count(GateKind kind) {
  switch (kind) {
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::Swap:
      return 2;
    default:
      return 1;
  }
}

class GateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GateInstance {
  GateKind kind = GateKind::I;
  std::vector<double> params;
  /// [target] for single-qubit gates, [control, target] for CNOT, [q0, q1] for CZ/SWAP.
  std::vector<int> targets{0};

  /// Throws GateError when arity or targets do not fit a register of `num_qubits`.
  void validate(int num_qubits) const {
    if (static_cast<int>(params.size()) != gate_param_count(kind))
      throw GateError(std::string(gate_name(kind)) + " takes " + std::to_string(gate_param_count(kind)) +
                      " parameter(s)");
    if (static_cast<int>(targets.size()) != gate_target_count(kind))
      throw GateError(std::string(gate_name(kind)) + " takes " + std::to_string(gate_target_count(kind)) +
                      " target(s)");
    for (int t : targets)
      if (t < 0 || t >= num_qubits) throw GateError("target " + std::to_string(t) + " out of range");
    if (targets.size() == 2 && targets[0] == targets[1]) throw GateError("targets must be distinct");
  }

  friend bool operator==(const GateInstance&, const GateInstance&) = default;
};

inline GateInstance make_gate(GateKind kind, std::vector<int> targets, std::vector<double> params = {}) {
  return GateInstance{kind, std::move(params), std::move(targets)};
}

template <typename Scalar>
using GateMatrix = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic, 0, 4, 4>;

/// 2x2 unitary of a single-qubit gate.
template <typename Scalar>
Eigen::Matrix<Complex<Scalar>, 2, 2> single_qubit_unitary(GateKind kind, Scalar angle = 0) {
  using C = Complex<Scalar>;
  const C i(0, 1);
  const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
  const Scalar half = angle / 2;
  Eigen::Matrix<C, 2, 2> u;
  switch (kind) {
    case GateKind::I: u << 1, 0, 0, 1; break;
    case GateKind::X: u << 0, 1, 1, 0; break;
    case GateKind::Y: u << 0, -i, i, 0; break;
    case GateKind::Z: u << 1, 0, 0, -1; break;
    case GateKind::H: u << r, r, r, -r; break;
    case GateKind::S: u << 1, 0, 0, i; break;
    case GateKind::T: u << 1, 0, 0, std::polar(Scalar(1), Scalar(M_PI) / 4); break;
    case GateKind::RX: u << std::cos(half), -i * std::sin(half), -i * std::sin(half), std::cos(half); break;
    case GateKind::RY: u << std::cos(half), -std::sin(half), std::sin(half), std::cos(half); break;
    case GateKind::RZ: u << std::polar(Scalar(1), -half), 0, 0, std::polar(Scalar(1), half); break;
    case GateKind::Phase: u << 1, 0, 0, std::polar(Scalar(1), angle); break;
    default: throw GateError(std::string(gate_name(kind)) + " is not a single-qubit gate");
  }
  return u;
}

/// Full-register unitary of `gate`, identity on the qubits it does not touch.
template <typename Scalar = double>
GateMatrix<Scalar> gate_matrix(const GateInstance& gate, int num_qubits) {
  if (num_qubits != 1 && num_qubits != 2) throw GateError("only 1 or 2 qubits are supported");
  gate.validate(num_qubits);
  using C = Complex<Scalar>;
  const Scalar angle = gate.params.empty() ? Scalar(0) : Scalar(gate.params[0]);

  if (gate_target_count(gate.kind) == 1) {
    const Eigen::Matrix<C, 2, 2> u = single_qubit_unitary<Scalar>(gate.kind, angle);
    if (num_qubits == 1) return u;
    const Eigen::Matrix<C, 2, 2> id = Eigen::Matrix<C, 2, 2>::Identity();
    // Qubit 0 is the most significant bit: U on q0 is U (x) I, on q1 it is I (x) U.
    const auto& left = gate.targets[0] == 0 ? u : id;
    const auto& right = gate.targets[0] == 0 ? id : u;
    GateMatrix<Scalar> m(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = left(r >> 1, c >> 1) * right(r & 1, c & 1);
    return m;
  }

  GateMatrix<Scalar> m = GateMatrix<Scalar>::Zero(4, 4);
  switch (gate.kind) {
    case GateKind::CNOT:
      for (int col = 0; col < 4; ++col) {
        int row = col;
        if (qubit_bit(col, gate.targets[0]) == 1) row ^= 1 << (1 - gate.targets[1]);
        m(row, col) = C(1, 0);
      }
      break;
    case GateKind::CZ:
      m.diagonal() << C(1, 0), C(1, 0), C(1, 0), C(-1, 0);
      break;
    case GateKind::Swap:
      m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = C(1, 0);
      break;
    default:
      throw GateError("unhandled two-qubit gate");
  }
  return m;
}

/// Matrix-vector product of the gate's unitary with the state.
template <typename Scalar>
BasicQuantumState<Scalar> apply_gate(const BasicQuantumState<Scalar>& state, const GateInstance& gate) {
  if (gate_target_count(gate.kind) > state.num_qubits())
    throw std::domain_error(std::string(gate_name(gate.kind)) + " needs 2 qubits, state has 1");
  for (int t : gate.targets)
    if (t >= state.num_qubits())
      throw std::domain_error("gate target " + std::to_string(t) + " exceeds the state's qubit count");
  const GateMatrix<Scalar> u = gate_matrix<Scalar>(gate, state.num_qubits());
  AmplitudeVector<Scalar> out = u * state.amplitudes();
  return BasicQuantumState<Scalar>::unchecked(std::move(out));
}

}  // namespace venus
