// VENUS diagram layout.
//
// A state is drawn as a cascade of right triangles erected on a horizontal base of
// length `scale` (one unit of probability mass). Every right triangle is inscribed in
// the semicircle on its hypotenuse, so the semicircle drawn on a leg of length s*|amp|
// has area (pi/8) s^2 |amp|^2, proportional to that basis state's probability.
//
// Geometry is in a y-up frame with the base from A = (0, 0) to B = (scale, 0).

#pragma once

#include "venus/quantum_state.hpp"

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace venus {

using Point = Eigen::Vector2d;

inline constexpr double kCollapseEpsilon = 1e-6;
inline constexpr double kSignEpsilon = 1e-12;
inline constexpr double kDefaultScale = 320.0;

enum class ColorRole { Cyan, Red, Blue, Almond, Purple };

/// Role for a basis index: 1 qubit -> cyan, red; 2 qubits -> blue, red, almond, purple.
ColorRole color_role(int num_qubits, int basis_index);
std::string_view color_role_name(ColorRole role);

enum class AmplitudePart { Real, Imaginary };

/// Marginal or joint probabilities shown when hovering a white triangle.
struct TriangleTooltip {
  /// -1 for the base triangle; otherwise the value of the first display qubit above this branch.
  int branch = -1;
  /// Probability of each child leg: P(first = 0), P(first = 1) at level 0; joint P(branch, 0),
  /// P(branch, 1) at level 1.
  double p_zero = 0;
  double p_one = 0;
  /// Level 1 only: P(second = 0 | first = branch), P(second = 1 | first = branch).
  std::optional<double> cond_zero;
  std::optional<double> cond_one;
};

struct WhiteTriangle {
  std::array<Point, 3> vertices;  // hypotenuse endpoints, then right-angle vertex
  int level = 0;
  TriangleTooltip tooltip;
};

struct StateTriangle {
  std::array<Point, 3> vertices;  // hypotenuse endpoints, then right-angle vertex
  int basis_index = 0;
  ColorRole color_role = ColorRole::Cyan;
};

struct Semicircle {
  Point center;
  double radius = 0;
  /// Angle (radians, y-up) of the direction in which the arc bulges.
  double orientation = 0;
  int basis_index = 0;
  double area_value = 0;
  double probability = 0;
  ColorRole color_role = ColorRole::Cyan;
};

struct AmplitudeSegment {
  std::array<Point, 2> endpoints;
  AmplitudePart part = AmplitudePart::Real;
  bool negative = false;  // drawn as a double line
  int basis_index = 0;
};

struct ProbabilityLabel {
  Point anchor;
  std::string text;
  int basis_index = 0;
};

using Primitive = std::variant<WhiteTriangle, StateTriangle, Semicircle, AmplitudeSegment, ProbabilityLabel>;

struct Diagram {
  double scale = kDefaultScale;
  int num_qubits = 1;
  DisplayOrder order = DisplayOrder::identity(1);
  std::vector<Primitive> primitives;

  template <typename T>
  std::vector<T> collect() const {
    std::vector<T> out;
    for (const auto& p : primitives)
      if (const T* t = std::get_if<T>(&p)) out.push_back(*t);
    return out;
  }
};

enum class Collapse { Keep, Degenerate, Omit };

/// Omit when length/scale < 1e-6, keep otherwise.
Collapse collapse_policy(double length, double scale);
/// Three-way policy for a triangle with the given legs: omit when the hypotenuse
/// collapses, degenerate when one leg does, keep otherwise.
Collapse collapse_policy(double leg_a, double leg_b, double scale);

/// Layout of a normalized 1-qubit state. Throws std::domain_error on bad input.
Diagram layout_single(const QuantumState& state, double scale = kDefaultScale);

/// Layout of a normalized 2-qubit state shown in `order`. Basis indices in the returned
/// diagram refer to the displayed (reordered) labels.
Diagram layout_two(const QuantumState& state, double scale = kDefaultScale, const DisplayOrder& order = {});

/// Dispatches on the state's qubit count.
Diagram layout(const QuantumState& state, double scale = kDefaultScale, const DisplayOrder& order = {});

/// Right-angle vertex of the right triangle on hypotenuse p->q whose leg adjacent to p has
/// length `leg_p` and leg adjacent to q has length `leg_q`, on the side `side` (unit normal).
Point right_angle_vertex(const Point& p, const Point& q, double leg_p, double leg_q, const Point& side);

/// "0.25": two-decimal fixed point.
std::string format_probability(double p);

inline constexpr const char* kDiagramSchemaVersion = "venus-diagram/1";

nlohmann::ordered_json to_json(const Diagram& diagram);

}  // namespace venus
