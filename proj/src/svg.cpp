#include <cmath>
#include <cstdio>
#include <string>

#include "arclabel/io.hpp"

namespace arclabel {
namespace {

std::string escape_xml(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

class Canvas {
 public:
  Canvas(const BoundingBox& box, double width_px) : box_(box) {
    const double w = std::max(box.width(), 1e-12);
    scale_ = width_px / w;
  }

  double width() const { return box_.width() * scale_ + 2 * kMargin; }
  double height() const { return box_.height() * scale_ + 2 * kMargin; }
  double scale() const { return scale_; }

  double sx(Point p) const { return (p.x - box_.min.x) * scale_ + kMargin; }
  double sy(Point p) const { return (box_.max.y - p.y) * scale_ + kMargin; }
  std::string xy(Point p) const { return num(sx(p)) + " " + num(sy(p)); }

  // Arc of `radius` around `center` from angle a0 to a1 (map radians).
  // Continues an open path, so starts with the arc command itself.
  std::string arc_to(Point center, double radius, double a0, double a1) const {
    std::string d;
    const double span = a1 - a0;
    const int pieces = std::abs(span) > kPi ? 2 : 1;
    for (int i = 1; i <= pieces; ++i) {
      const double to = a0 + span * i / pieces;
      // Map counter-clockwise is screen clockwise once y is flipped.
      const char* sweep = span > 0.0 ? "0" : "1";
      d += " A " + num(radius * scale_) + " " + num(radius * scale_) + " 0 0 " + sweep + " " +
           xy({center.x + radius * std::cos(to), center.y + radius * std::sin(to)});
    }
    return d;
  }

 private:
  static constexpr double kMargin = 10.0;
  BoundingBox box_;
  double scale_ = 1.0;
};

std::string ring_path(const Canvas& canvas, const Ring& ring) {
  std::string d;
  for (std::size_t i = 0; i < ring.size(); ++i) d += (i == 0 ? "M " : " L ") + canvas.xy(ring[i]);
  return d + " Z";
}

Point polar(const Circle& c, double radius, double theta) {
  return {c.center.x + radius * std::cos(theta), c.center.y + radius * std::sin(theta)};
}

}  // namespace

bool text_runs_clockwise(const Placement& placement) {
  return std::sin(placement.center_angle) >= 0.0;
}

std::string write_svg(const Dataset& dataset, std::span<const ResultRecord> records,
                      const SvgOptions& options) {
  BoundingBox box;
  for (const AreaRecord& a : dataset.areas) {
    box.extend(a.shape.bounds().min);
    box.extend(a.shape.bounds().max);
  }
  if (box.empty()) box.extend({0.0, 0.0});
  const Canvas canvas(box, options.width_px);

  std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" xmlns:xlink=\"http://www.w3.org/1999/xlink\" "
         "version=\"1.1\" width=\"" + num(canvas.width()) + "\" height=\"" +
         num(canvas.height()) + "\">\n";
  svg += "<g id=\"areas\" fill=\"#f2efe6\" stroke=\"#6b6b6b\" stroke-width=\"0.5\" "
         "fill-rule=\"evenodd\">\n";
  for (const AreaRecord& a : dataset.areas) {
    std::string d = ring_path(canvas, a.shape.outer());
    for (const Ring& h : a.shape.holes()) d += " " + ring_path(canvas, h);
    svg += "<path id=\"area-" + escape_xml(a.id) + "\" d=\"" + d + "\"/>\n";
  }
  svg += "</g>\n<g id=\"labels\">\n";

  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!records[i].placement) continue;
    const Placement& p = *records[i].placement;
    const Circle& c = p.circle;
    const double a0 = p.center_angle - 0.5 * p.extent;
    const double a1 = p.center_angle + 0.5 * p.extent;
    const double inner = c.radius - 0.5 * p.height;
    const double outer = c.radius + 0.5 * p.height;

    if (options.draw_support_circles) {
      svg += "<circle cx=\"" + num(canvas.sx(c.center)) + "\" cy=\"" + num(canvas.sy(c.center)) +
             "\" r=\"" +
             num(c.radius * canvas.scale()) +
             "\" fill=\"none\" stroke=\"#9ab\" stroke-width=\"0.3\"/>\n";
    }
    const std::string band = "M " + canvas.xy(polar(c, inner, a0)) +
                              canvas.arc_to(c.center, inner, a0, a1) + " L " +
                              canvas.xy(polar(c, outer, a1)) +
                              canvas.arc_to(c.center, outer, a1, a0) + " Z";
    svg += "<path class=\"band\" d=\"" + band + "\" fill=\"#c9dbef\" fill-opacity=\"0.6\"/>\n";
    svg += "<path class=\"support\" d=\"M " + canvas.xy(polar(c, c.radius, a0)) +
           canvas.arc_to(c.center, c.radius, a0, a1) +
           "\" fill=\"none\" stroke=\"#3a6ea5\" stroke-width=\"0.6\"/>\n";

    // Glyph tops face away from the centre on the upper half of the
    // circle and towards it on the lower half, so the text arc sits on
    // the matching side of the band.
    const bool clockwise = text_runs_clockwise(p);
    const double text_radius = clockwise ? c.radius - 0.3 * p.height : c.radius + 0.3 * p.height;
    const double from = clockwise ? a1 : a0;
    const double to = clockwise ? a0 : a1;
    const std::string path_id = "baseline-" + std::to_string(i);
    svg += "<path id=\"" + path_id + "\" d=\"M " + canvas.xy(polar(c, text_radius, from)) +
           canvas.arc_to(c.center, text_radius, from, to) + "\" fill=\"none\"/>\n";
    svg += "<text font-family=\"sans-serif\" font-size=\"" + num(0.7 * p.height * canvas.scale()) +
           "\" fill=\"#1d2b3a\"><textPath xlink:href=\"#" + path_id +
           "\" startOffset=\"50%\" text-anchor=\"middle\">" + escape_xml(records[i].name) +
           "</textPath></text>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace arclabel
