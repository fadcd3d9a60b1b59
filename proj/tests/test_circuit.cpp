#include "test_support.hpp"

#include "venus/circuit.hpp"
#include "venus/gates.hpp"

#include <gtest/gtest.h>

#include <random>

namespace venus {
namespace {

using testing::cd;

void expect_state_near(const QuantumState& s, std::initializer_list<cd> expected, double tol) {
  ASSERT_EQ(s.dimension(), static_cast<int>(expected.size()));
  int i = 0;
  for (const cd& e : expected) {
    EXPECT_NEAR(s[i].real(), e.real(), tol) << "amplitude " << i;
    EXPECT_NEAR(s[i].imag(), e.imag(), tol) << "amplitude " << i;
    ++i;
  }
}

TEST(Gates, NamesRoundTrip) {
  for (GateKind k : kAllGates) EXPECT_EQ(gate_from_name(gate_name(k)), k);
  EXPECT_EQ(gate_from_name("CNOT"), GateKind::CNOT);
  EXPECT_EQ(gate_from_name("Ry"), GateKind::RY);
  EXPECT_FALSE(gate_from_name("toffoli"));
}

TEST(Gates, MatrixExamples) {
  const auto id = gate_matrix(make_gate(GateKind::I, {0}), 1);
  EXPECT_TRUE(id.isApprox(GateMatrix<double>::Identity(2, 2)));

  const auto ry = apply_gate(QuantumState{1.0, 0.0}, make_gate(GateKind::RY, {0}, {M_PI}));
  expect_state_near(ry, {0.0, 1.0}, 1e-12);

  const auto cz = apply_gate(testing::uniform_state(), make_gate(GateKind::CZ, {0, 1}));
  expect_state_near(cz, {0.5, 0.5, 0.5, -0.5}, 1e-15);
}

TEST(Gates, ValidationErrors) {
  EXPECT_THROW(gate_matrix(make_gate(GateKind::RY, {0}), 1), GateError);
  EXPECT_THROW(gate_matrix(make_gate(GateKind::H, {0}, {1.0}), 1), GateError);
  EXPECT_THROW(gate_matrix(make_gate(GateKind::CZ, {0, 0}), 2), GateError);
  EXPECT_THROW(gate_matrix(make_gate(GateKind::X, {2}), 2), GateError);
  EXPECT_THROW(apply_gate(QuantumState{1.0, 0.0}, make_gate(GateKind::CNOT, {0, 1})), std::domain_error);
  EXPECT_THROW(apply_gate(QuantumState{1.0, 0.0}, make_gate(GateKind::X, {1})), std::domain_error);
}

TEST(Gates, ApplyExamples) {
  const double r = 1 / std::sqrt(2.0);
  expect_state_near(apply_gate(QuantumState{1.0, 0.0}, make_gate(GateKind::H, {0})), {r, r}, 1e-15);

  // Embedding angle from the first case-study feature.
  const auto embedded = apply_gate(QuantumState{1.0, 0.0}, make_gate(GateKind::RY, {0}, {1.4595 * 2}));
  expect_state_near(embedded, {0.11106670015984757, 0.9938129542904955}, 1e-12);

  const auto plus = apply_gate(QuantumState{1.0, 0.0}, make_gate(GateKind::H, {0}));
  const auto rotated = apply_gate(plus, make_gate(GateKind::RZ, {0}, {0.6797}));
  EXPECT_NEAR(probability(rotated, 0), 0.5, 1e-12);
  EXPECT_NEAR(probability(rotated, 1), 0.5, 1e-12);
  EXPECT_GT(std::abs(rotated[0].imag()), 0.1);
  EXPECT_GT(std::abs(rotated[1].imag()), 0.1);
}

TEST(Gates, CnotControlsOnFirstTarget) {
  // |10> -> |11> with control 0; |01> -> |11> with control 1.
  expect_state_near(apply_gate(QuantumState::basis(2, 2), make_gate(GateKind::CNOT, {0, 1})), {0, 0, 0, 1}, 0);
  expect_state_near(apply_gate(QuantumState::basis(2, 1), make_gate(GateKind::CNOT, {1, 0})), {0, 0, 0, 1}, 0);
  expect_state_near(apply_gate(QuantumState::basis(2, 1), make_gate(GateKind::CNOT, {0, 1})), {0, 1, 0, 0}, 0);
  expect_state_near(apply_gate(QuantumState::basis(2, 1), make_gate(GateKind::Swap, {0, 1})), {0, 0, 1, 0}, 0);
}

TEST(Circuit, EmptyCircuitHasOneFrame) {
  Circuit c;
  const auto frames = run(c);
  ASSERT_EQ(frames.size(), 1u);
  EXPECT_EQ(frames[0].step, 0);
  EXPECT_FALSE(frames[0].gate);
  expect_state_near(frames[0].state, {1.0, 0.0}, 0);
}

TEST(Circuit, GroverOneIteration) {
  const auto frames = run(grover_circuit(1));
  ASSERT_EQ(frames.size(), 13u);
  const auto& last = frames.back().state;
  EXPECT_NEAR(probability(last, 3), 1.0, 1e-9);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(probability(last, i), 0.0, 1e-9);
}

TEST(Circuit, GroverTwoIterations) {
  const auto frames = run(grover_circuit(2));
  ASSERT_EQ(frames.size(), 23u);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(probability(frames.back().state, i), 0.25, 1e-9);
}

TEST(Circuit, GroverMarkedStateIsTheOnlyNegativeAfterOracle) {
  const auto frames = run(grover_circuit(1));
  const QuantumState& after_oracle = frames[3].state;
  int negatives = 0;
  for (int i = 0; i < 4; ++i)
    if (after_oracle[i].real() < 0) ++negatives;
  EXPECT_EQ(negatives, 1);
  EXPECT_LT(after_oracle[3].real(), 0);
}

TEST(Circuit, ReportsFailingStep) {
  Circuit c;
  c.num_qubits = 1;
  c.gates = {make_gate(GateKind::H, {0}), make_gate(GateKind::X, {1})};
  try {
    run(c);
    FAIL() << "expected CircuitError";
  } catch (const CircuitError& e) {
    EXPECT_EQ(e.step(), 2);
  }
}

TEST(CircuitProperties, Unitarity) {
  std::mt19937_64 rng(21);
  for (int n = 0; n < 10000; ++n) {
    const int q = 1 + n % 2;
    const QuantumState s = testing::random_state(rng, q);
    const QuantumState out = apply_gate(s, testing::random_gate(rng, q));
    EXPECT_NEAR(out.amplitudes().squaredNorm(), 1.0, 1e-9);
  }
}

TEST(CircuitProperties, InversePairs) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> angle(-2 * M_PI, 2 * M_PI);
  for (int n = 0; n < 1000; ++n) {
    const QuantumState s = testing::random_state(rng, 1);
    const double theta = angle(rng);
    const auto back = apply_gate(apply_gate(s, make_gate(GateKind::RY, {0}, {theta})),
                                 make_gate(GateKind::RY, {0}, {-theta}));
    for (int i = 0; i < 2; ++i) EXPECT_LE(std::abs(back[i] - s[i]), 1e-9);
  }
  const auto h = gate_matrix(make_gate(GateKind::H, {0}), 1);
  EXPECT_LE((h * h - GateMatrix<double>::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(CircuitProperties, FrameCountContract) {
  std::mt19937_64 rng(23);
  for (int n = 0; n < 100; ++n) {
    Circuit c;
    c.num_qubits = 1 + n % 2;
    for (int g = 0; g < n % 17; ++g) c.gates.push_back(testing::random_gate(rng, c.num_qubits));
    const auto frames = run(c);
    ASSERT_EQ(frames.size(), c.gates.size() + 1);
    for (std::size_t k = 0; k < frames.size(); ++k) {
      EXPECT_EQ(frames[k].step, static_cast<int>(k));
      EXPECT_NEAR(frames[k].state.amplitudes().squaredNorm(), 1.0, 1e-9);
    }
  }
}

TEST(CircuitProperties, MatchesDenseMatrixChainOracle) {
  std::mt19937_64 rng(24);
  for (int n = 0; n < 2000; ++n) {
    Circuit c;
    c.num_qubits = 2;
    c.initial_state = testing::random_state(rng, 2);
    const int count = n % 7;
    for (int g = 0; g < count; ++g) c.gates.push_back(testing::random_gate(rng, 2));
    const auto expected = testing::oracle_run_two_qubit(c);
    const QuantumState got = run(c).back().state;
    for (int i = 0; i < 4; ++i) EXPECT_LE(std::abs(got[i] - expected[i]), 1e-9);
  }
}

}  // namespace
}  // namespace venus
