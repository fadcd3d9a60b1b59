// Pure one- and two-qubit states over Eigen fixed-capacity vectors.
//
// Basis indices are big-endian over the displayed qubit labels: index 0 is
// |00>, index 1 is |01> (first qubit 0, second qubit 1), index 3 is |11>.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace venus {

template <typename Scalar>
using Complex = std::complex<Scalar>;

/// Amplitude vector with room for at most four basis states.
template <typename Scalar>
using AmplitudeVector = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1, 0, 4, 1>;

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kConditionalFloor = 1e-12;

/// Which physical qubit is shown at each display position.
struct DisplayOrder {
  std::vector<int> permutation{0, 1};

  static DisplayOrder identity(int num_qubits) {
    DisplayOrder order;
    order.permutation.clear();
    for (int q = 0; q < num_qubits; ++q) order.permutation.push_back(q);
    return order;
  }
  static DisplayOrder swapped() { return DisplayOrder{{1, 0}}; }

  bool is_identity() const {
    for (std::size_t i = 0; i < permutation.size(); ++i)
      if (permutation[i] != static_cast<int>(i)) return false;
    return true;
  }

  bool is_valid_for(int num_qubits) const {
    if (static_cast<int>(permutation.size()) != num_qubits) return false;
    std::array<bool, 2> seen{};
    for (int q : permutation) {
      if (q < 0 || q >= num_qubits || seen[q]) return false;
      seen[q] = true;
    }
    return true;
  }

  friend bool operator==(const DisplayOrder&, const DisplayOrder&) = default;
};

template <typename Scalar>
class BasicQuantumState {
 public:
  using complex_type = Complex<Scalar>;
  using vector_type = AmplitudeVector<Scalar>;

  /// |0...0> on the given number of qubits.
  static BasicQuantumState zero(int num_qubits) {
    vector_type amps = vector_type::Zero(dimension_for(num_qubits));
    amps(0) = complex_type(1, 0);
    return BasicQuantumState(std::move(amps), Unchecked{});
  }

  static BasicQuantumState basis(int num_qubits, int index) {
    const int dim = dimension_for(num_qubits);
    if (index < 0 || index >= dim) throw std::domain_error("basis index out of range");
    vector_type amps = vector_type::Zero(dim);
    amps(index) = complex_type(1, 0);
    return BasicQuantumState(std::move(amps), Unchecked{});
  }

  /// Validating constructor: length 2 or 4, finite entries, unit norm within tolerance.
  explicit BasicQuantumState(vector_type amps) : amps_(std::move(amps)) {
    dimension_for_length(amps_.size());
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
      if (!std::isfinite(amps_(i).real()) || !std::isfinite(amps_(i).imag()))
        throw std::domain_error("amplitude " + std::to_string(i) + " is not finite");
    }
    const Scalar norm2 = amps_.squaredNorm();
    if (std::abs(norm2 - Scalar(1)) > Scalar(kNormTolerance))
      throw std::domain_error("state is not normalized (squared norm " + std::to_string(norm2) + ")");
  }

  BasicQuantumState(std::initializer_list<complex_type> amps)
      : BasicQuantumState(from_list(amps)) {}

  /// Skips the norm check. For intermediate results whose norm is guaranteed by construction.
  static BasicQuantumState unchecked(vector_type amps) {
    dimension_for_length(amps.size());
    return BasicQuantumState(std::move(amps), Unchecked{});
  }

  int num_qubits() const { return amps_.size() == 2 ? 1 : 2; }
  int dimension() const { return static_cast<int>(amps_.size()); }
  const vector_type& amplitudes() const { return amps_; }
  const complex_type& operator[](int i) const { return amps_(i); }

  friend bool operator==(const BasicQuantumState& a, const BasicQuantumState& b) {
    return a.amps_.size() == b.amps_.size() && a.amps_ == b.amps_;
  }

 private:
  struct Unchecked {};
  BasicQuantumState(vector_type amps, Unchecked) : amps_(std::move(amps)) {}

  static int dimension_for(int num_qubits) {
    if (num_qubits != 1 && num_qubits != 2) throw std::domain_error("only 1 or 2 qubits are supported");
    return 1 << num_qubits;
  }
  static void dimension_for_length(Eigen::Index n) {
    if (n != 2 && n != 4) throw std::domain_error("length must be 2 or 4");
  }
  static vector_type from_list(std::initializer_list<complex_type> amps) {
    vector_type v(static_cast<Eigen::Index>(amps.size()));
    Eigen::Index i = 0;
    for (const auto& a : amps) v(i++) = a;
    return v;
  }

  vector_type amps_;
};

using QuantumState = BasicQuantumState<double>;
using ComplexAmplitude = Complex<double>;

template <typename Scalar>
Scalar probability(const BasicQuantumState<Scalar>& state, int basis_index) {
  if (basis_index < 0 || basis_index >= state.dimension())
    throw std::domain_error("basis index " + std::to_string(basis_index) + " out of range");
  const auto& a = state[basis_index];
  return a.real() * a.real() + a.imag() * a.imag();
}

template <typename Scalar>
std::vector<Scalar> probabilities(const BasicQuantumState<Scalar>& state) {
  std::vector<Scalar> out;
  out.reserve(state.dimension());
  for (int i = 0; i < state.dimension(); ++i) out.push_back(probability(state, i));
  return out;
}

/// True iff the amplitudes' squared moduli sum to one within 1e-9.
template <typename Scalar>
bool validate_normalization(const AmplitudeVector<Scalar>& amps) {
  Scalar total = 0;
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    if (!std::isfinite(amps(i).real()) || !std::isfinite(amps(i).imag())) return false;
    total += std::norm(amps(i));
  }
  return std::abs(total - Scalar(1)) <= Scalar(kNormTolerance);
}

template <typename Scalar>
bool validate_normalization(const BasicQuantumState<Scalar>& state) {
  return validate_normalization<Scalar>(state.amplitudes());
}

/// Bit of `qubit` (0 = most significant) in a two-qubit basis index.
inline int qubit_bit(int basis_index, int qubit) { return (basis_index >> (1 - qubit)) & 1; }

/// P(display qubit `display_qubit` reads `bit`) after mapping through `order`.
template <typename Scalar>
Scalar marginal_probability(const BasicQuantumState<Scalar>& state, int display_qubit, int bit,
                            const DisplayOrder& order = DisplayOrder{}) {
  if (state.num_qubits() != 2) throw std::domain_error("marginal probability needs a 2-qubit state");
  if (display_qubit < 0 || display_qubit > 1) throw std::domain_error("display qubit out of range");
  if (bit != 0 && bit != 1) throw std::domain_error("bit must be 0 or 1");
  if (!order.is_valid_for(2)) throw std::domain_error("invalid display order");
  const int physical = order.permutation[display_qubit];
  Scalar total = 0;
  for (int i = 0; i < 4; ++i)
    if (qubit_bit(i, physical) == bit) total += probability(state, i);
  return total;
}

/// P(target = target_bit | given = given_bit); std::nullopt when the condition has
/// probability below 1e-12.
template <typename Scalar>
std::optional<Scalar> conditional_probability(const BasicQuantumState<Scalar>& state, int given_qubit,
                                              int given_bit, int target_qubit, int target_bit) {
  if (state.num_qubits() != 2) throw std::domain_error("conditional probability needs a 2-qubit state");
  if (given_qubit == target_qubit || given_qubit < 0 || given_qubit > 1 || target_qubit < 0 ||
      target_qubit > 1)
    throw std::domain_error("qubits must be distinct and in range");
  Scalar joint = 0;
  Scalar marginal = 0;
  for (int i = 0; i < 4; ++i) {
    if (qubit_bit(i, given_qubit) != given_bit) continue;
    marginal += probability(state, i);
    if (qubit_bit(i, target_qubit) == target_bit) joint += probability(state, i);
  }
  if (marginal < Scalar(kConditionalFloor)) return std::nullopt;
  return joint / marginal;
}

template <typename Scalar>
BasicQuantumState<Scalar> tensor_product(const BasicQuantumState<Scalar>& a,
                                         const BasicQuantumState<Scalar>& b) {
  if (a.num_qubits() != 1 || b.num_qubits() != 1)
    throw std::domain_error("tensor product takes two 1-qubit states");
  AmplitudeVector<Scalar> out(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out(2 * i + j) = a[i] * b[j];
  return BasicQuantumState<Scalar>::unchecked(std::move(out));
}

/// Relabels basis states so the displayed qubit k is physical qubit order[k].
template <typename Scalar>
BasicQuantumState<Scalar> reorder_qubits(const BasicQuantumState<Scalar>& state, const DisplayOrder& order) {
  if (!order.is_valid_for(state.num_qubits())) throw std::domain_error("invalid display order");
  if (order.is_identity()) return state;
  AmplitudeVector<Scalar> out(4);
  for (int i = 0; i < 4; ++i) {
    const int swapped = (qubit_bit(i, 1) << 1) | qubit_bit(i, 0);
    out(swapped) = state[i];
  }
  return BasicQuantumState<Scalar>::unchecked(std::move(out));
}

/// Pure-state concurrence 2|ad - bc|.
template <typename Scalar>
Scalar concurrence(const BasicQuantumState<Scalar>& state) {
  if (state.num_qubits() != 2) throw std::domain_error("concurrence needs a 2-qubit state");
  return Scalar(2) * std::abs(state[0] * state[3] - state[1] * state[2]);
}

}  // namespace venus
