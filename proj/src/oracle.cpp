#include "pctaxicab/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "json.hpp"

namespace pct {

std::size_t mem_cap_from_env() {
  const char* raw = std::getenv("PCM_MEM_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultMemCap;
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(raw, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("PCM_MEM_CAP is not a number: ") + raw);
  }
  if (used != std::string(raw).size() || value == 0) {
    throw std::invalid_argument(std::string("PCM_MEM_CAP must be a positive integer: ") + raw);
  }
  return static_cast<std::size_t>(value);
}

std::optional<Int> DistanceField::distance(Point p) const {
  if (auto it = dist_.find(p); it != dist_.end()) return it->second;
  return std::nullopt;
}

const std::vector<Point>& DistanceField::boundary(Int r) const {
  if (r < 0 || r > radius_) throw std::out_of_range("boundary: radius outside the field");
  return layers_[static_cast<std::size_t>(r)];
}

std::vector<std::pair<Point, Int>> DistanceField::sorted_entries() const {
  std::vector<std::pair<Point, Int>> out;
  out.reserve(dist_.size());
  for (Int d = 0; d <= radius_; ++d) {
    for (const Point& p : layers_[static_cast<std::size_t>(d)]) out.emplace_back(p, d);
  }
  return out;
}

DistanceField bfs_ball(std::span<const Point> centers, Int radius, const BfsOptions& options) {
  if (centers.empty()) throw std::invalid_argument("bfs_ball: empty center set");
  if (radius < 0) throw std::invalid_argument("bfs_ball: negative radius");

  DistanceField field;
  field.centers_.assign(centers.begin(), centers.end());
  std::sort(field.centers_.begin(), field.centers_.end());
  field.centers_.erase(std::unique(field.centers_.begin(), field.centers_.end()), field.centers_.end());
  field.radius_ = radius;

  if (field.centers_.size() > options.max_points) {
    throw ResourceError("bfs_ball: center set exceeds memory cap", -1);
  }
  std::vector<Point> frontier = field.centers_;
  for (const Point& c : frontier) field.dist_.emplace(c, 0);
  field.layers_.push_back(frontier);

  for (Int d = 1; d <= radius; ++d) {
    std::vector<Point> next;
    for (const Point& p : frontier) {
      for (Operator op : kGenerators) {
        const Point q = apply(op, p);
        if (field.dist_.try_emplace(q, d).second) {
          if (field.dist_.size() > options.max_points) {
            throw ResourceError("bfs_ball: visited set exceeds memory cap of " +
                                    std::to_string(options.max_points) + " points",
                                d - 1);
          }
          next.push_back(q);
        }
      }
    }
    std::sort(next.begin(), next.end());
    field.layers_.push_back(next);
    frontier = std::move(next);
  }
  return field;
}

std::optional<Int> pc_distance(Point p, Point q, Int cutoff, const BfsOptions& options) {
  if (cutoff < 0) throw std::invalid_argument("pc_distance: negative cutoff");
  if (p == q) return 0;
  std::unordered_map<Point, Int, PointHash> seen{{p, 0}};
  std::vector<Point> frontier{p};
  for (Int d = 1; d <= cutoff && !frontier.empty(); ++d) {
    std::vector<Point> next;
    for (const Point& a : frontier) {
      for (Operator op : kGenerators) {
        const Point b = apply(op, a);
        if (b == q) return d;
        if (seen.try_emplace(b, d).second) {
          if (seen.size() > options.max_points) {
            throw ResourceError("pc_distance: visited set exceeds memory cap", d - 1);
          }
          next.push_back(b);
        }
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::vector<BallSummary> ball_summary(const DistanceField& field) {
  std::vector<BallSummary> out;
  BallSummary acc;
  bool first = true;
  for (Int r = 0; r <= field.radius(); ++r) {
    const auto& layer = field.boundary(r);
    acc.radius = r;
    acc.boundary_count = static_cast<Int>(layer.size());
    acc.ball_count += acc.boundary_count;
    for (const Point& p : layer) {
      if (first) {
        acc.min_x = acc.max_x = p.x;
        acc.min_y = acc.max_y = p.y;
        first = false;
      }
      acc.min_x = std::min(acc.min_x, p.x);
      acc.max_x = std::max(acc.max_x, p.x);
      acc.min_y = std::min(acc.min_y, p.y);
      acc.max_y = std::max(acc.max_y, p.y);
    }
    out.push_back(acc);
  }
  return out;
}

std::vector<BallSummary> ball_summary(std::span<const Point> centers, Int radius,
                                      const BfsOptions& options) {
  return ball_summary(bfs_ball(centers, radius, options));
}

void write_csv(std::ostream& out, const DistanceField& field) {
  for (const auto& [p, d] : field.sorted_entries()) out << p.x << ',' << p.y << ',' << d << '\n';
}

void write_json(std::ostream& out, const DistanceField& field) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [p, d] : field.sorted_entries()) arr.push_back({{"x", p.x}, {"y", p.y}, {"d", d}});
  out << arr.dump() << '\n';
}

}  // namespace pct
