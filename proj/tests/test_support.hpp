// Random generators and reference oracles for the test suites.
//
// The oracles deliberately avoid the library's Eigen code paths: gate matrices are
// spelled out from textbook definitions over std::array and combined with a hand-written
// Kronecker product, and probabilities are summed from raw real/imaginary parts.

#pragma once

#include "venus/circuit.hpp"
#include "venus/quantum_state.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace venus::testing {

using cd = std::complex<double>;

inline AmplitudeVector<double> random_amplitudes(std::mt19937_64& rng, int num_qubits) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const int dim = 1 << num_qubits;
  AmplitudeVector<double> v(dim);
  double norm2 = 0;
  do {
    norm2 = 0;
    for (int i = 0; i < dim; ++i) {
      v(i) = cd(normal(rng), normal(rng));
      norm2 += std::norm(v(i));
    }
  } while (norm2 < 1e-6);
  return v / std::sqrt(norm2);
}

inline QuantumState random_state(std::mt19937_64& rng, int num_qubits) {
  return QuantumState(random_amplitudes(rng, num_qubits));
}

/// Random state with some components zeroed, to exercise collapsed branches.
inline QuantumState random_sparse_state(std::mt19937_64& rng, int num_qubits) {
  std::uniform_int_distribution<int> coin(0, 3);
  AmplitudeVector<double> v = random_amplitudes(rng, num_qubits);
  for (int i = 0; i < v.size(); ++i) {
    if (coin(rng) == 0) v(i) = cd(0, v(i).imag());
    if (coin(rng) == 0) v(i) = cd(v(i).real(), 0);
  }
  if (v.norm() < 1e-3) v(0) = cd(1, 0);
  return QuantumState(AmplitudeVector<double>(v / v.norm()));
}

inline GateInstance random_gate(std::mt19937_64& rng, int num_qubits) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(kAllGates.size()) - 1);
  std::uniform_real_distribution<double> angle(-2 * M_PI, 2 * M_PI);
  std::uniform_int_distribution<int> qubit(0, num_qubits - 1);
  for (;;) {
    const GateKind kind = kAllGates[pick(rng)];
    if (gate_target_count(kind) > num_qubits) continue;
    GateInstance g{kind, {}, {}};
    if (gate_param_count(kind) == 1) g.params.push_back(angle(rng));
    if (gate_target_count(kind) == 1) {
      g.targets.push_back(qubit(rng));
    } else {
      const int first = qubit(rng);
      g.targets = {first, 1 - first};
    }
    return g;
  }
}

/// |re|^2 + |im|^2 by plain arithmetic.
inline double oracle_probability(const QuantumState& s, int i) {
  const double re = s[i].real();
  const double im = s[i].imag();
  return re * re + im * im;
}

using Mat2 = std::array<std::array<cd, 2>, 2>;
using Mat4 = std::array<std::array<cd, 4>, 4>;

inline Mat2 oracle_single(GateKind kind, double t) {
  const cd i(0, 1);
  const double r = 1 / std::sqrt(2.0);
  switch (kind) {
    case GateKind::I: return {{{1, 0}, {0, 1}}};
    case GateKind::X: return {{{0, 1}, {1, 0}}};
    case GateKind::Y: return {{{0, -i}, {i, 0}}};
    case GateKind::Z: return {{{1, 0}, {0, -1}}};
    case GateKind::H: return {{{r, r}, {r, -r}}};
    case GateKind::S: return {{{1, 0}, {0, i}}};
    case GateKind::T: return {{{1, 0}, {0, std::exp(i * (M_PI / 4))}}};
    case GateKind::RX: return {{{std::cos(t / 2), -i * std::sin(t / 2)}, {-i * std::sin(t / 2), std::cos(t / 2)}}};
    case GateKind::RY: return {{{std::cos(t / 2), -std::sin(t / 2)}, {std::sin(t / 2), std::cos(t / 2)}}};
    case GateKind::RZ: return {{{std::exp(-i * (t / 2)), 0}, {0, std::exp(i * (t / 2))}}};
    case GateKind::Phase: return {{{1, 0}, {0, std::exp(i * t)}}};
    default: return {};
  }
}

inline Mat4 oracle_kron(const Mat2& a, const Mat2& b) {
  Mat4 m{};
  for (int r1 = 0; r1 < 2; ++r1)
    for (int c1 = 0; c1 < 2; ++c1)
      for (int r2 = 0; r2 < 2; ++r2)
        for (int c2 = 0; c2 < 2; ++c2) m[2 * r1 + r2][2 * c1 + c2] = a[r1][c1] * b[r2][c2];
  return m;
}

/// Full 4x4 unitary from the textbook definitions (qubit 0 = most significant).
inline Mat4 oracle_two_qubit_matrix(const GateInstance& g) {
  const double t = g.params.empty() ? 0.0 : g.params[0];
  const Mat2 id{{{1, 0}, {0, 1}}};
  switch (g.kind) {
    case GateKind::CNOT: {
      Mat4 m{};
      // |c t> -> |c, t xor c>
      for (int c = 0; c < 2; ++c)
        for (int x = 0; x < 2; ++x) {
          int bits[2];
          bits[g.targets[0]] = c;
          bits[g.targets[1]] = x;
          const int in = 2 * bits[0] + bits[1];
          bits[g.targets[1]] = x ^ c;
          const int out = 2 * bits[0] + bits[1];
          m[out][in] = 1;
        }
      return m;
    }
    case GateKind::CZ: {
      Mat4 m{};
      m[0][0] = m[1][1] = m[2][2] = 1;
      m[3][3] = -1;
      return m;
    }
    case GateKind::Swap: {
      Mat4 m{};
      m[0][0] = m[1][2] = m[2][1] = m[3][3] = 1;
      return m;
    }
    default: {
      const Mat2 u = oracle_single(g.kind, t);
      return g.targets[0] == 0 ? oracle_kron(u, id) : oracle_kron(id, u);
    }
  }
}

inline Mat4 oracle_multiply(const Mat4& a, const Mat4& b) {
  Mat4 m{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      for (int k = 0; k < 4; ++k) m[r][c] += a[r][k] * b[k][c];
  return m;
}

/// Product of all gate matrices (last gate leftmost) applied to the initial state.
inline std::array<cd, 4> oracle_run_two_qubit(const Circuit& c) {
  Mat4 total{};
  for (int k = 0; k < 4; ++k) total[k][k] = 1;
  for (const auto& g : c.gates) total = oracle_multiply(oracle_two_qubit_matrix(g), total);
  const QuantumState init = c.initial();
  std::array<cd, 4> out{};
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < 4; ++k) out[r] += total[r][k] * init[k];
  return out;
}

inline QuantumState bell_state() {
  const double r = 1 / std::sqrt(2.0);
  return QuantumState{cd(r, 0), cd(0, 0), cd(0, 0), cd(r, 0)};
}

inline QuantumState uniform_state() { return QuantumState{0.5, 0.5, 0.5, 0.5}; }

inline QuantumState grover_post_oracle_state() { return QuantumState{0.5, 0.5, 0.5, -0.5}; }

/// The reference one-iteration Grover circuit in the circuit JSON format.
inline constexpr const char* kGroverJson =
    R"({"qubits":2,"gates":[{"name":"h","targets":[0]},{"name":"h","targets":[1]},{"name":"cz","targets":[0,1]},)"
    R"({"name":"h","targets":[0]},{"name":"h","targets":[1]},{"name":"x","targets":[0]},{"name":"x","targets":[1]},)"
    R"({"name":"cz","targets":[0,1]},{"name":"x","targets":[0]},{"name":"x","targets":[1]},{"name":"h","targets":[0]},)"
    R"({"name":"h","targets":[1]}]})";

}  // namespace venus::testing
