#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pctaxicab/oracle.hpp"

namespace pct {

/// Inclusive integer box in lattice units.
struct Box {
  Int min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool contains(Point p) const { return min_x <= p.x && p.x <= max_x && min_y <= p.y && p.y <= max_y; }
  friend bool operator==(const Box&, const Box&) = default;
};

struct StyledPoint {
  Point p;
  std::string cls;
};

struct Polyline {
  std::vector<Point> vertices;
  std::string cls;
};

/// The arc of parabola `m` between parameters t_lo and t_hi (t = x - y).
struct ParabolaArc {
  ParabolaIndex m;
  Int t_lo = 0;
  Int t_hi = 0;
  std::string cls;
};

struct Scene {
  std::string title;
  std::vector<StyledPoint> points;
  std::vector<Polyline> polylines;
  std::vector<ParabolaArc> arcs;
  std::vector<std::pair<std::string, std::string>> styles;  // class -> css declarations
  Box viewport;
  Int scale = 12;
  bool axes = true;
};

inline constexpr Int kDefaultScale = 12;
inline constexpr Int kDefaultMargin = 2;

/// Fill color for a class index; the palette is fixed.
const std::string& palette_color(Int index);

/// Bounding box of `points` grown by `margin` on every side.
Box fit_viewport(const std::vector<StyledPoint>& points, Int margin = kDefaultMargin);

/// SVG 1.1 text. One <circle> marker per styled point, in scene order.
std::string to_svg(const Scene& scene);

/// Ball around `centers` (default O); points at a highlighted distance get class "r<d>".
/// Throws std::invalid_argument for a highlight outside [0, r].
std::string render_ball(Int r, const std::vector<Int>& highlight_radii,
                        const std::vector<Point>& centers = {kOrigin}, const BfsOptions& options = {});

/// Lattice points of `box` colored by parabola index ("m<idx>") and arcs for
/// every m in [m_lo, m_hi]. An empty m range (m_lo > m_hi) emits axes only.
/// With `stairway_start`, adds the alternating L'/L'' polyline of `stairway_steps` steps.
std::string render_parabolas(Int m_lo, Int m_hi, const Box& box,
                             std::optional<Point> stairway_start = std::nullopt,
                             std::size_t stairway_steps = 8);

/// Boundary of radius r colored by d_pc from `base` ("d<dist>"); base marked "base".
std::string render_chords(Int r, Point base, const BfsOptions& options = {});

}  // namespace pct
