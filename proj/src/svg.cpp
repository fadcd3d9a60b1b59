#include "venus/svg.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace venus {

namespace {

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Document coordinates: y down.
Point flip(const Point& p) { return Point(p.x(), -p.y()); }

std::string xy(const Point& p) {
  const Point f = flip(p);
  return format_coord(f.x()) + "," + format_coord(f.y());
}

struct Bounds {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void add(const Point& p, double pad = 0) {
    min_x = std::min(min_x, p.x() - pad);
    max_x = std::max(max_x, p.x() + pad);
    min_y = std::min(min_y, p.y() - pad);
    max_y = std::max(max_y, p.y() + pad);
  }
};

Bounds diagram_bounds(const Diagram& d) {
  Bounds b;
  b.add(Point(0, 0));
  b.add(Point(d.scale, 0));
  for (const auto& prim : d.primitives) {
    if (auto* t = std::get_if<WhiteTriangle>(&prim)) {
      for (const auto& v : t->vertices) b.add(v);
    } else if (auto* s = std::get_if<StateTriangle>(&prim)) {
      for (const auto& v : s->vertices) b.add(v);
    } else if (auto* c = std::get_if<Semicircle>(&prim)) {
      b.add(c->center, c->radius);
    } else if (auto* g = std::get_if<AmplitudeSegment>(&prim)) {
      for (const auto& v : g->endpoints) b.add(v);
    } else if (auto* l = std::get_if<ProbabilityLabel>(&prim)) {
      b.add(l->anchor);
    }
  }
  return b;
}

class SvgWriter {
 public:
  SvgWriter(const RenderTheme& theme, std::ostringstream& out) : theme_(theme), out_(out) {}

  void operator()(const WhiteTriangle& t) const {
    out_ << "<polygon class=\"white-triangle\" data-level=\"" << t.level << "\" points=\"" << xy(t.vertices[0]) << ' '
         << xy(t.vertices[2]) << ' ' << xy(t.vertices[1]) << "\" fill=\"" << theme_.white << "\" stroke=\""
         << theme_.real_segment << "\" stroke-width=\"" << format_coord(theme_.stroke_width / 2) << "\"><title>"
         << escape_xml(tooltip_text(t)) << "</title></polygon>\n";
  }

  void operator()(const StateTriangle& t) const {
    out_ << "<polygon class=\"state-triangle\" data-basis=\"" << t.basis_index << "\" points=\"" << xy(t.vertices[0])
         << ' ' << xy(t.vertices[2]) << ' ' << xy(t.vertices[1]) << "\" fill=\"" << color(t.color_role)
         << "\" fill-opacity=\"0.85\" stroke=\"none\"/>\n";
  }

  void operator()(const Semicircle& s) const {
    const Point normal(std::cos(s.orientation), std::sin(s.orientation));
    const Point along(normal.y(), -normal.x());
    const Point start = s.center - along * s.radius;
    const Point end = s.center + along * s.radius;
    const Point fs = flip(start);
    const Point fe = flip(end);
    const std::string r = format_coord(s.radius);
    // The bulge is the left normal of start->end in the y-up frame, which after the flip
    // is always the positive-angle (sweep = 1) arc.
    out_ << "<path class=\"semicircle\" data-basis=\"" << s.basis_index << "\" d=\"M " << format_coord(fs.x()) << ' '
         << format_coord(fs.y()) << " A " << r << ' ' << r << " 0 0 1 " << format_coord(fe.x()) << ' '
         << format_coord(fe.y()) << " Z\" fill=\"" << color(s.color_role)
         << "\" fill-opacity=\"0.35\" stroke=\"none\"><title>" << format_probability(s.probability)
         << "</title></path>\n";
  }

  void operator()(const AmplitudeSegment& g) const {
    const bool real = g.part == AmplitudePart::Real;
    const std::string cls = std::string("segment ") + (real ? "real" : "imaginary");
    const std::string& stroke = real ? theme_.real_segment : theme_.imaginary_segment;
    if (!g.negative) {
      line(cls, g.basis_index, g.endpoints[0], g.endpoints[1], stroke);
      return;
    }
    const Point d = g.endpoints[1] - g.endpoints[0];
    const double len = d.norm();
    const Point offset = len > 0 ? Point(-d.y() / len, d.x() / len) * (theme_.double_line_gap / 2) : Point(0, 0);
    out_ << "<g class=\"" << cls << " negative\" data-basis=\"" << g.basis_index << "\">\n";
    line(cls, g.basis_index, g.endpoints[0] + offset, g.endpoints[1] + offset, stroke);
    line(cls, g.basis_index, g.endpoints[0] - offset, g.endpoints[1] - offset, stroke);
    out_ << "</g>\n";
  }

  void operator()(const ProbabilityLabel& l) const {
    const Point a = flip(l.anchor);
    out_ << "<text class=\"probability-label\" data-basis=\"" << l.basis_index << "\" x=\"" << format_coord(a.x())
         << "\" y=\"" << format_coord(a.y()) << "\" font-size=\"" << format_coord(theme_.font_size)
         << "\" font-family=\"sans-serif\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << escape_xml(l.text)
         << "</text>\n";
  }

 private:
  const std::string& color(ColorRole role) const {
    auto it = theme_.color_map.find(role);
    return it == theme_.color_map.end() ? theme_.white : it->second;
  }

  void line(const std::string& cls, int basis, const Point& a, const Point& b, const std::string& stroke) const {
    const Point fa = flip(a);
    const Point fb = flip(b);
    out_ << "<line class=\"" << cls << "\" data-basis=\"" << basis << "\" x1=\"" << format_coord(fa.x()) << "\" y1=\""
         << format_coord(fa.y()) << "\" x2=\"" << format_coord(fb.x()) << "\" y2=\"" << format_coord(fb.y())
         << "\" stroke=\"" << stroke << "\" stroke-width=\"" << format_coord(theme_.stroke_width)
         << "\" stroke-linecap=\"round\"/>\n";
  }

  static std::string tooltip_text(const WhiteTriangle& t) {
    const auto& tip = t.tooltip;
    if (tip.branch < 0)
      return "P(first qubit = 0) = " + format_probability(tip.p_zero) +
             "; P(first qubit = 1) = " + format_probability(tip.p_one);
    const std::string b = std::to_string(tip.branch);
    return "P(" + b + "0) = " + format_probability(tip.p_zero) + "; P(" + b + "1) = " + format_probability(tip.p_one);
  }

  const RenderTheme& theme_;
  std::ostringstream& out_;
};

}  // namespace

bool is_hex_color(const std::string& s) {
  return s.size() == 7 && s[0] == '#' &&
         std::all_of(s.begin() + 1, s.end(), [](unsigned char c) { return std::isxdigit(c) != 0; });
}

void RenderTheme::validate() const {
  for (const auto& [role, hex] : color_map)
    if (!is_hex_color(hex)) throw std::invalid_argument("bad color for " + std::string(color_role_name(role)));
  for (const auto* hex : {&white, &real_segment, &imaginary_segment})
    if (!is_hex_color(*hex)) throw std::invalid_argument("bad color " + *hex);
  if (!(double_line_gap > 0)) throw std::invalid_argument("double_line_gap must be positive");
}

std::string format_coord(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
  return s;
}

std::string render(const Diagram& diagram, const RenderTheme& theme) {
  const Bounds b = diagram_bounds(diagram);
  const double w = b.max_x - b.min_x;
  const double h = b.max_y - b.min_y;
  const double margin = 0.05 * std::max(w, h);
  const double vx = b.min_x - margin;
  const double vy = -(b.max_y + margin);
  const double vw = w + 2 * margin;
  const double vh = h + 2 * margin;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_coord(vx) << ' ' << format_coord(vy) << ' '
      << format_coord(vw) << ' ' << format_coord(vh) << "\" width=\"" << format_coord(vw) << "\" height=\""
      << format_coord(vh) << "\">\n";
  SvgWriter writer(theme, out);
  for (const auto& prim : diagram.primitives) std::visit(writer, prim);
  out << "</svg>\n";
  return out.str();
}

std::vector<std::string> render_frames(const std::vector<Frame>& frames, const RenderTheme& theme, double scale,
                                       const DisplayOrder& order) {
  std::vector<std::string> docs;
  docs.reserve(frames.size());
  for (const auto& frame : frames) docs.push_back(render(layout(frame.state, scale, order), theme));
  return docs;
}

std::string frame_filename(int step) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "frame_%04d.svg", step);
  return buf;
}

}  // namespace venus
