#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "pctaxicab/lattice.hpp"

namespace pct {

/// Default cap on the number of visited points held by a single BFS.
inline constexpr std::size_t kDefaultMemCap = 200'000'000;

/// Reads PCM_MEM_CAP from the environment, falling back to kDefaultMemCap.
/// Throws std::invalid_argument on a malformed value.
std::size_t mem_cap_from_env();

/// The BFS exceeded its visited-set budget. `reached_radius` is the last
/// radius whose layer was completed.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, Int reached_radius)
      : std::runtime_error(what), reached_radius_(reached_radius) {}
  Int reached_radius() const noexcept { return reached_radius_; }

 private:
  Int reached_radius_;
};

struct BfsOptions {
  std::size_t max_points = kDefaultMemCap;
};

/// Exact parabolic-taxicab distances from a center set, for every point of the
/// closed ball of the given radius.
class DistanceField {
 public:
  const std::vector<Point>& centers() const { return centers_; }
  Int radius() const { return radius_; }
  std::size_t size() const { return dist_.size(); }

  std::optional<Int> distance(Point p) const;
  bool contains(Point p) const { return dist_.contains(p); }

  /// Points at distance exactly r, sorted lexicographically.
  /// Throws std::out_of_range unless 0 <= r <= radius().
  const std::vector<Point>& boundary(Int r) const;

  /// Every point of the ball, sorted by (d, x, y).
  std::vector<std::pair<Point, Int>> sorted_entries() const;

 private:
  friend DistanceField bfs_ball(std::span<const Point>, Int, const BfsOptions&);

  std::vector<Point> centers_;
  Int radius_ = 0;
  std::unordered_map<Point, Int, PointHash> dist_;
  std::vector<std::vector<Point>> layers_;
};

/// Level-synchronous BFS from all centers over the six generator edges.
/// Throws std::invalid_argument for an empty center set or negative radius,
/// ResourceError when the visited set would exceed options.max_points.
DistanceField bfs_ball(std::span<const Point> centers, Int radius, const BfsOptions& options = {});

/// Exact d_pc(p, q) when it is at most `cutoff`, std::nullopt otherwise.
std::optional<Int> pc_distance(Point p, Point q, Int cutoff, const BfsOptions& options = {});

struct BallSummary {
  Int radius = 0;
  Int ball_count = 0;
  Int boundary_count = 0;
  Int min_x = 0, max_x = 0, min_y = 0, max_y = 0;

  friend bool operator==(const BallSummary&, const BallSummary&) = default;
};

/// One summary per radius 0..field.radius(); bounding boxes are of the
/// cumulative ball.
std::vector<BallSummary> ball_summary(const DistanceField& field);
std::vector<BallSummary> ball_summary(std::span<const Point> centers, Int radius,
                                      const BfsOptions& options = {});

/// `x,y,d` rows sorted by (d, x, y).
void write_csv(std::ostream& out, const DistanceField& field);
/// JSON array of {"x","y","d"} objects in the same order.
void write_json(std::ostream& out, const DistanceField& field);

}  // namespace pct
