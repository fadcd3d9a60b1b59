#include "venus/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace venus {

namespace {

/// Unit normal to the left of the directed edge p -> q. Children are always erected on
/// this side: with the base traversed A -> C -> B, the left side of each leg faces away
/// from the parent's interior.
Point left_normal(const Point& p, const Point& q) {
  const Point d = (q - p).normalized();
  return Point(-d.y(), d.x());
}

std::string basis_label(int num_qubits, int basis_index) {
  if (num_qubits == 1) return std::to_string(basis_index);
  return std::string{static_cast<char>('0' + ((basis_index >> 1) & 1)), static_cast<char>('0' + (basis_index & 1))};
}

void require_layout_input(const QuantumState& state, double scale) {
  if (!validate_normalization(state)) throw std::domain_error("state is not normalized");
  if (!(scale > 0) || !std::isfinite(scale)) throw std::domain_error("scale must be positive");
}

class Builder {
 public:
  Builder(const QuantumState& shown, double scale) : state_(shown), scale_(scale) {}

  /// State triangle, semicircle, segments and label for one basis state on the leg p -> q.
  void emit_state(const Point& p, const Point& q, int basis_index, std::vector<Primitive>& out) const {
    const auto& amp = state_[basis_index];
    const double re_len = scale_ * std::abs(amp.real());
    const double im_len = scale_ * std::abs(amp.imag());
    if (collapse_policy(re_len, im_len, scale_) == Collapse::Omit) return;

    const int n = state_.num_qubits();
    const ColorRole role = color_role(n, basis_index);
    const Point side = left_normal(p, q);

    // Real part hangs off the endpoint nearer the baseline.
    const bool real_at_p = std::abs(p.y()) <= std::abs(q.y());
    const Point& real_end = real_at_p ? p : q;
    const Point& imag_end = real_at_p ? q : p;
    const Point corner = real_at_p ? right_angle_vertex(p, q, re_len, im_len, side)
                                   : right_angle_vertex(p, q, im_len, re_len, side);

    out.push_back(StateTriangle{{p, q, corner}, basis_index, role});

    const double prob = probability(state_, basis_index);
    const double amp_len = scale_ * std::sqrt(prob);
    Semicircle arc;
    arc.center = (p + q) / 2;
    arc.radius = amp_len / 2;
    arc.orientation = std::atan2(side.y(), side.x());
    arc.basis_index = basis_index;
    arc.area_value = M_PI / 8 * scale_ * scale_ * prob;
    arc.probability = arc.area_value / (M_PI / 8 * scale_ * scale_);
    arc.color_role = role;
    out.push_back(arc);

    if (collapse_policy(re_len, scale_) == Collapse::Keep)
      out.push_back(AmplitudeSegment{{real_end, corner}, AmplitudePart::Real, amp.real() < -kSignEpsilon, basis_index});
    if (collapse_policy(im_len, scale_) == Collapse::Keep)
      out.push_back(
          AmplitudeSegment{{corner, imag_end}, AmplitudePart::Imaginary, amp.imag() < -kSignEpsilon, basis_index});

    const Point anchor = arc.center + side * (arc.radius + 0.04 * scale_);
    out.push_back(ProbabilityLabel{anchor, "P" + basis_label(n, basis_index) + ": " + format_probability(prob),
                                   basis_index});
  }

 private:
  const QuantumState& state_;
  double scale_;
};

}  // namespace

ColorRole color_role(int num_qubits, int basis_index) {
  if (num_qubits == 1) return basis_index == 0 ? ColorRole::Cyan : ColorRole::Red;
  static constexpr ColorRole kTwo[] = {ColorRole::Blue, ColorRole::Red, ColorRole::Almond, ColorRole::Purple};
  return kTwo[basis_index & 3];
}

std::string_view color_role_name(ColorRole role) {
  switch (role) {
    case ColorRole::Cyan: return "cyan";
    case ColorRole::Red: return "red";
    case ColorRole::Blue: return "blue";
    case ColorRole::Almond: return "almond";
    case ColorRole::Purple: return "purple";
  }
  return "?";
}

Collapse collapse_policy(double length, double scale) {
  return length / scale < kCollapseEpsilon ? Collapse::Omit : Collapse::Keep;
}

Collapse collapse_policy(double leg_a, double leg_b, double scale) {
  if (collapse_policy(std::hypot(leg_a, leg_b), scale) == Collapse::Omit) return Collapse::Omit;
  if (collapse_policy(leg_a, scale) == Collapse::Omit || collapse_policy(leg_b, scale) == Collapse::Omit)
    return Collapse::Degenerate;
  return Collapse::Keep;
}

Point right_angle_vertex(const Point& p, const Point& q, double leg_p, double leg_q, const Point& side) {
  // Thales: the foot of the altitude lies leg_p^2 / h from p, at height leg_p * leg_q / h.
  const double h = std::hypot(leg_p, leg_q);
  if (h == 0) return p;
  const Point dir = (q - p).normalized();
  return p + dir * (leg_p * leg_p / h) + side * (leg_p * leg_q / h);
}

std::string format_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", p + 0.0);
  return buf;
}

Diagram layout_single(const QuantumState& state, double scale) {
  if (state.num_qubits() != 1) throw std::domain_error("layout_single needs a 1-qubit state");
  require_layout_input(state, scale);

  Diagram d;
  d.scale = scale;
  d.num_qubits = 1;
  d.order = DisplayOrder::identity(1);

  const Point a(0, 0);
  const Point b(scale, 0);
  const double p0 = probability(state, 0);
  const double p1 = probability(state, 1);
  const double u = std::sqrt(p0);
  const double v = std::sqrt(p1);
  const Point c = right_angle_vertex(a, b, scale * u, scale * v, Point(0, 1));

  d.primitives.push_back(WhiteTriangle{{a, b, c}, 0, TriangleTooltip{-1, p0, p1, std::nullopt, std::nullopt}});

  Builder builder(state, scale);
  if (collapse_policy(scale * u, scale) == Collapse::Keep) builder.emit_state(a, c, 0, d.primitives);
  if (collapse_policy(scale * v, scale) == Collapse::Keep) builder.emit_state(c, b, 1, d.primitives);
  return d;
}

Diagram layout_two(const QuantumState& state, double scale, const DisplayOrder& order) {
  if (state.num_qubits() != 2) throw std::domain_error("layout_two needs a 2-qubit state");
  require_layout_input(state, scale);
  if (!order.is_valid_for(2)) throw std::domain_error("invalid display order");

  const QuantumState shown = reorder_qubits(state, order);
  Diagram d;
  d.scale = scale;
  d.num_qubits = 2;
  d.order = order;

  const Point a(0, 0);
  const Point b(scale, 0);
  const double first0 = marginal_probability(shown, 0, 0);
  const double first1 = marginal_probability(shown, 0, 1);
  const double m0 = std::sqrt(first0);
  const double m1 = std::sqrt(first1);
  const Point c = right_angle_vertex(a, b, scale * m0, scale * m1, Point(0, 1));

  d.primitives.push_back(WhiteTriangle{{a, b, c}, 0, TriangleTooltip{-1, first0, first1, std::nullopt, std::nullopt}});

  // Level-1 legs traversed A -> C -> B so basis states read 00, 01, 10, 11 left to right.
  const std::array<std::array<Point, 2>, 2> level0_legs{{{a, c}, {c, b}}};
  std::array<std::optional<std::array<Point, 3>>, 2> branches;
  for (int branch = 0; branch < 2; ++branch) {
    const double first_len = scale * std::abs(shown[2 * branch]);
    const double second_len = scale * std::abs(shown[2 * branch + 1]);
    if (collapse_policy(first_len, second_len, scale) == Collapse::Omit) continue;
    const auto& [p, q] = level0_legs[branch];
    const Point r = right_angle_vertex(p, q, first_len, second_len, left_normal(p, q));
    branches[branch] = {p, q, r};
    TriangleTooltip tip{branch, probability(shown, 2 * branch), probability(shown, 2 * branch + 1),
                        conditional_probability(shown, 0, branch, 1, 0),
                        conditional_probability(shown, 0, branch, 1, 1)};
    d.primitives.push_back(WhiteTriangle{{p, q, r}, 1, tip});
  }

  Builder builder(shown, scale);
  for (int branch = 0; branch < 2; ++branch) {
    if (!branches[branch]) continue;
    const auto& [p, q, r] = *branches[branch];
    if (collapse_policy(scale * std::abs(shown[2 * branch]), scale) == Collapse::Keep)
      builder.emit_state(p, r, 2 * branch, d.primitives);
    if (collapse_policy(scale * std::abs(shown[2 * branch + 1]), scale) == Collapse::Keep)
      builder.emit_state(r, q, 2 * branch + 1, d.primitives);
  }
  return d;
}

Diagram layout(const QuantumState& state, double scale, const DisplayOrder& order) {
  if (state.num_qubits() == 1) return layout_single(state, scale);
  return layout_two(state, scale, order);
}

namespace {

nlohmann::ordered_json point_json(const Point& p) { return nlohmann::ordered_json::array({p.x(), p.y()}); }

template <std::size_t N>
nlohmann::ordered_json points_json(const std::array<Point, N>& pts) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& p : pts) arr.push_back(point_json(p));
  return arr;
}

nlohmann::ordered_json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

struct PrimitiveToJson {
  nlohmann::ordered_json operator()(const WhiteTriangle& t) const {
    nlohmann::ordered_json j;
    j["kind"] = "white_triangle";
    j["level"] = t.level;
    j["vertices"] = points_json(t.vertices);
    nlohmann::ordered_json tip;
    tip["branch"] = t.tooltip.branch < 0 ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(t.tooltip.branch);
    tip["p_zero"] = t.tooltip.p_zero;
    tip["p_one"] = t.tooltip.p_one;
    if (t.level > 0) {
      tip["cond_zero"] = optional_json(t.tooltip.cond_zero);
      tip["cond_one"] = optional_json(t.tooltip.cond_one);
    }
    j["tooltip"] = std::move(tip);
    return j;
  }
  nlohmann::ordered_json operator()(const StateTriangle& t) const {
    nlohmann::ordered_json j;
    j["kind"] = "state_triangle";
    j["basis_index"] = t.basis_index;
    j["color_role"] = std::string(color_role_name(t.color_role));
    j["vertices"] = points_json(t.vertices);
    return j;
  }
  nlohmann::ordered_json operator()(const Semicircle& s) const {
    nlohmann::ordered_json j;
    j["kind"] = "semicircle";
    j["basis_index"] = s.basis_index;
    j["color_role"] = std::string(color_role_name(s.color_role));
    j["center"] = point_json(s.center);
    j["radius"] = s.radius;
    j["orientation"] = s.orientation;
    j["area_value"] = s.area_value;
    j["probability"] = s.probability;
    return j;
  }
  nlohmann::ordered_json operator()(const AmplitudeSegment& s) const {
    nlohmann::ordered_json j;
    j["kind"] = "amplitude_segment";
    j["basis_index"] = s.basis_index;
    j["part"] = s.part == AmplitudePart::Real ? "real" : "imaginary";
    j["negative"] = s.negative;
    j["endpoints"] = points_json(s.endpoints);
    return j;
  }
  nlohmann::ordered_json operator()(const ProbabilityLabel& l) const {
    nlohmann::ordered_json j;
    j["kind"] = "probability_label";
    j["basis_index"] = l.basis_index;
    j["anchor"] = point_json(l.anchor);
    j["text"] = l.text;
    return j;
  }
};

}  // namespace

nlohmann::ordered_json to_json(const Diagram& diagram) {
  nlohmann::ordered_json j;
  j["schema_version"] = kDiagramSchemaVersion;
  j["num_qubits"] = diagram.num_qubits;
  j["scale"] = diagram.scale;
  j["order"] = diagram.order.permutation;
  auto prims = nlohmann::ordered_json::array();
  for (const auto& p : diagram.primitives) prims.push_back(std::visit(PrimitiveToJson{}, p));
  j["primitives"] = std::move(prims);
  return j;
}

}  // namespace venus
