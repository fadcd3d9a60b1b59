// SVG output for diagrams. Output is byte-deterministic: fixed attribute order and
// 6-decimal coordinates, y flipped from the geometry's y-up frame.

#pragma once

#include "venus/circuit.hpp"
#include "venus/geometry.hpp"

#include <map>
#include <string>
#include <vector>

namespace venus {

struct RenderTheme {
  std::map<ColorRole, std::string> color_map{{ColorRole::Cyan, "#24C2CB"},
                                             {ColorRole::Red, "#E35D5D"},
                                             {ColorRole::Blue, "#4C78C9"},
                                             {ColorRole::Almond, "#EFDECD"},
                                             {ColorRole::Purple, "#8E6BC0"}};
  std::string white = "#FFFFFF";
  std::string real_segment = "#000000";
  std::string imaginary_segment = "#8A8A8A";
  double stroke_width = 2.0;
  double double_line_gap = 3.0;
  double font_size = 14.0;

  /// Throws std::invalid_argument unless every color is #RRGGBB and the gap is positive.
  void validate() const;
};

bool is_hex_color(const std::string& s);

std::string render(const Diagram& diagram, const RenderTheme& theme = {});

/// One document per frame, in frame order.
std::vector<std::string> render_frames(const std::vector<Frame>& frames, const RenderTheme& theme = {},
                                       double scale = kDefaultScale, const DisplayOrder& order = {});

/// "frame_0007.svg"
std::string frame_filename(int step);

/// "%.6f" with negative zero folded to zero.
std::string format_coord(double v);

}  // namespace venus
