#include "pctaxicab/render.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pctaxicab/chords.hpp"

namespace pct {

namespace {

const std::array<std::string, 10> kPalette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                           "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

// Coordinates are carried in quarter lattice units so Bézier control points stay exact.
struct Quarter {
  Int x4;
  Int y4;
};

class Canvas {
 public:
  explicit Canvas(const Scene& scene) : box_(scene.viewport), scale_(scene.scale) {}

  Int width() const { return (box_.max_x - box_.min_x) * scale_; }
  Int height() const { return (box_.max_y - box_.min_y) * scale_; }

  std::string px(Quarter q) const {
    return fmt((q.x4 - 4 * box_.min_x) * scale_) + ' ' + fmt((4 * box_.max_y - q.y4) * scale_);
  }
  std::string cx(Int x) const { return fmt(4 * (x - box_.min_x) * scale_); }
  std::string cy(Int y) const { return fmt(4 * (box_.max_y - y) * scale_); }

 private:
  // Value in quarter pixels, printed exactly.
  static std::string fmt(Int quarters) {
    std::ostringstream os;
    const bool neg = quarters < 0;
    const Int a = neg ? -quarters : quarters;
    if (neg) os << '-';
    os << a / 4;
    switch (a % 4) {
      case 1: os << ".25"; break;
      case 2: os << ".5"; break;
      case 3: os << ".75"; break;
      default: break;
    }
    return os.str();
  }

  Box box_;
  Int scale_;
};

Quarter quarter(Point p) { return {4 * p.x, 4 * p.y}; }

std::string arc_path(const Canvas& canvas, const ParabolaArc& arc) {
  std::ostringstream os;
  os << "M " << canvas.px(quarter(parabola_point(arc.m, arc.t_lo)));
  for (Int t = arc.t_lo; t < arc.t_hi; ++t) {
    // control = P(t) + P'(t)/2 with P'(t) = (t + 1/2, t - 1/2)
    const Quarter start = quarter(parabola_point(arc.m, t));
    const Quarter control{start.x4 + 2 * t + 1, start.y4 + 2 * t - 1};
    os << " Q " << canvas.px(control) << ' ' << canvas.px(quarter(parabola_point(arc.m, t + 1)));
  }
  return os.str();
}

std::string class_for_index(const std::string& prefix, Int index) {
  return prefix + std::to_string(index);
}

Int floor_mod(Int v, Int n) { return ((v % n) + n) % n; }

}  // namespace

const std::string& palette_color(Int index) {
  return kPalette[static_cast<std::size_t>(floor_mod(index, static_cast<Int>(kPalette.size())))];
}

Box fit_viewport(const std::vector<StyledPoint>& points, Int margin) {
  if (points.empty()) return {-margin, margin, -margin, margin};
  Box box{points.front().p.x, points.front().p.x, points.front().p.y, points.front().p.y};
  for (const auto& sp : points) {
    box.min_x = std::min(box.min_x, sp.p.x);
    box.max_x = std::max(box.max_x, sp.p.x);
    box.min_y = std::min(box.min_y, sp.p.y);
    box.max_y = std::max(box.max_y, sp.p.y);
  }
  return {box.min_x - margin, box.max_x + margin, box.min_y - margin, box.max_y + margin};
}

std::string to_svg(const Scene& scene) {
  const Canvas canvas(scene);
  const Box& vb = scene.viewport;
  const Int marker_r = std::max<Int>(1, scene.scale / 3);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << canvas.width()
     << "\" height=\"" << canvas.height() << "\" viewBox=\"0 0 " << canvas.width() << ' '
     << canvas.height() << "\">\n";
  os << "<title>" << scene.title << "</title>\n";
  os << "<style type=\"text/css\"><![CDATA[\n"
     << ".axis{stroke:#000000;stroke-width:1}\n"
     << ".arc{fill:none;stroke:#555555;stroke-width:1}\n"
     << ".stair{fill:none;stroke:#d62728;stroke-width:2}\n";
  for (const auto& [cls, css] : scene.styles) os << '.' << cls << '{' << css << "}\n";
  os << "]]></style>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  if (scene.axes) {
    os << "<g id=\"axes\">\n";
    if (vb.min_y <= 0 && 0 <= vb.max_y) {
      os << "<line class=\"axis\" x1=\"0\" y1=\"" << canvas.cy(0) << "\" x2=\"" << canvas.width()
         << "\" y2=\"" << canvas.cy(0) << "\"/>\n";
    }
    if (vb.min_x <= 0 && 0 <= vb.max_x) {
      os << "<line class=\"axis\" x1=\"" << canvas.cx(0) << "\" y1=\"0\" x2=\"" << canvas.cx(0)
         << "\" y2=\"" << canvas.height() << "\"/>\n";
    }
    os << "</g>\n";
  }
  if (!scene.arcs.empty()) {
    os << "<g id=\"arcs\">\n";
    for (const auto& arc : scene.arcs) {
      os << "<path class=\"arc " << arc.cls << "\" data-m=\"" << arc.m.m << "\" d=\""
         << arc_path(canvas, arc) << "\"/>\n";
    }
    os << "</g>\n";
  }
  if (!scene.polylines.empty()) {
    os << "<g id=\"polylines\">\n";
    for (const auto& line : scene.polylines) {
      os << "<polyline class=\"" << line.cls << "\" points=\"";
      for (std::size_t i = 0; i < line.vertices.size(); ++i) {
        if (i > 0) os << ' ';
        os << canvas.cx(line.vertices[i].x) << ',' << canvas.cy(line.vertices[i].y);
      }
      os << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "<g id=\"points\">\n";
  for (const auto& sp : scene.points) {
    os << "<circle class=\"" << sp.cls << "\" cx=\"" << canvas.cx(sp.p.x) << "\" cy=\""
       << canvas.cy(sp.p.y) << "\" r=\"" << marker_r << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string render_ball(Int r, const std::vector<Int>& highlight_radii, const std::vector<Point>& centers,
                        const BfsOptions& options) {
  for (Int h : highlight_radii) {
    if (h < 0 || h > r) throw std::invalid_argument("render_ball: highlighted radius outside [0, r]");
  }
  const DistanceField field = bfs_ball(centers, r, options);

  Scene scene;
  scene.title = "parabolic-taxicab ball, radius " + std::to_string(r);
  scene.styles.emplace_back("ball", "fill:#c7c7c7");
  for (std::size_t i = 0; i < highlight_radii.size(); ++i) {
    scene.styles.emplace_back(class_for_index("r", highlight_radii[i]),
                              "fill:" + palette_color(static_cast<Int>(i)));
  }
  const std::set<Int> highlighted(highlight_radii.begin(), highlight_radii.end());
  for (const auto& [p, d] : field.sorted_entries()) {
    scene.points.push_back({p, highlighted.contains(d) ? class_for_index("r", d) : "ball"});
  }
  scene.viewport = fit_viewport(scene.points);
  return to_svg(scene);
}

std::string render_parabolas(Int m_lo, Int m_hi, const Box& box, std::optional<Point> stairway_start,
                             std::size_t stairway_steps) {
  if (box.min_x > box.max_x || box.min_y > box.max_y) {
    throw std::invalid_argument("render_parabolas: empty box");
  }
  Scene scene;
  scene.title = "parabola partition";
  scene.viewport = {box.min_x - kDefaultMargin, box.max_x + kDefaultMargin, box.min_y - kDefaultMargin,
                    box.max_y + kDefaultMargin};
  if (m_lo > m_hi) return to_svg(scene);

  std::set<Int> used;
  for (Int x = box.min_x; x <= box.max_x; ++x) {
    for (Int y = box.min_y; y <= box.max_y; ++y) {
      const Int m = parabola_index({x, y}).m;
      used.insert(m);
      scene.points.push_back({{x, y}, class_for_index("m", m)});
    }
  }
  for (Int m : used) scene.styles.emplace_back(class_for_index("m", m), "fill:" + palette_color(m));

  // |t| = |x - y| never exceeds the box's span along the anti-diagonal.
  const Int t_bound = (box.max_x - box.min_y) + (box.max_y - box.min_x) + 1;
  for (Int m = m_lo; m <= m_hi; ++m) {
    std::optional<Int> lo, hi;
    for (Int t = -t_bound; t <= t_bound; ++t) {
      if (!box.contains(parabola_point({m}, t))) continue;
      if (!lo) lo = t;
      hi = t;
    }
    if (lo && *lo < *hi) scene.arcs.push_back({{m}, *lo, *hi, class_for_index("m", m)});
  }
  if (stairway_start) {
    scene.polylines.push_back({stairway(*stairway_start, Operator::Lp, stairway_steps), "stair"});
  }
  return to_svg(scene);
}

std::string render_chords(Int r, Point base, const BfsOptions& options) {
  const BoundaryChords chords(r, options);
  const std::vector<Int> dist = chords.distances_from(base);

  Scene scene;
  scene.title = "chord distances on the boundary of radius " + std::to_string(r);
  std::set<Int> used;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] == 0) continue;
    used.insert(dist[i]);
    scene.points.push_back({chords.boundary()[i], class_for_index("d", dist[i])});
  }
  scene.points.push_back({base, "base"});
  for (Int d : used) scene.styles.emplace_back(class_for_index("d", d), "fill:" + palette_color(d));
  scene.styles.emplace_back("base", "fill:#000000;stroke:#000000;stroke-width:3");
  scene.viewport = fit_viewport(scene.points);
  return to_svg(scene);
}

}  // namespace pct
