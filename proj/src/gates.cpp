#include "venus/gates.hpp"

#include <algorithm>
#include <cctype>

namespace venus {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::I: return "i";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::T: return "t";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::Phase: return "phase";
    case GateKind::CNOT: return "cnot";
    case GateKind::CZ: return "cz";
    case GateKind::Swap: return "swap";
  }
  return "?";
}

std::optional<GateKind> gate_from_name(std::string_view name) {
  std::string lowered(name);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (GateKind kind : kAllGates)
    if (gate_name(kind) == lowered) return kind;
  return std::nullopt;
}

}  // namespace venus
