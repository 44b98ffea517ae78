#pragma once

#include <map>
#include <ostream>
#include <vector>

#include "pctaxicab/oracle.hpp"

namespace pct {

/// Distances from one boundary point to every other point of the same boundary.
struct ChordHistogram {
  Int r = 0;
  Point base;
  std::map<Int, Int> counts;  // d_pc -> number of boundary points; 0 excluded

  Int total() const;
  friend bool operator==(const ChordHistogram&, const ChordHistogram&) = default;
};

struct Chord {
  Point p;
  Point q;
  Int length = 0;
  friend bool operator==(const Chord&, const Chord&) = default;
};

struct ParityReport {
  Int r = 0;
  bool all_even = true;
  std::vector<Chord> odd_witnesses;
};

/// Boundary points of the ball around O together with per-base distance fields.
/// Each base point gets one BFS of radius 2r, since d_pc(p, q) <= d_pc(p, O) + d_pc(O, q).
/// The all-pairs table is cached lazily; one instance is not safe for concurrent use.
class BoundaryChords {
 public:
  /// Throws std::invalid_argument for r < 1.
  explicit BoundaryChords(Int r, const BfsOptions& options = {});

  Int radius() const { return r_; }
  const std::vector<Point>& boundary() const { return boundary_; }
  bool on_boundary(Point p) const;

  /// Throws std::invalid_argument when p is not on the boundary.
  ChordHistogram histogram(Point p) const;

  /// Max chord length over all boundary pairs.
  Int diameter() const;
  Int antipode_count(Point p) const;
  ParityReport parity() const;

  /// d_pc from p to each point of boundary(), in the same order.
  std::vector<Int> distances_from(Point p) const;

 private:
  const std::vector<std::vector<Int>>& all_pairs() const;

  Int r_;
  BfsOptions options_;
  std::vector<Point> boundary_;
  mutable std::vector<std::vector<Int>> pairs_;
};

ChordHistogram chord_histogram(Int r, Point p, const BfsOptions& options = {});
Int pc_diameter(Int r, const BfsOptions& options = {});
ParityReport parity_scan(Int r, const BfsOptions& options = {});
Int antipode_count(Int r, Point p, const BfsOptions& options = {});

/// `r,px,py,distance,count` rows in increasing distance.
void write_histogram_csv(std::ostream& out, const ChordHistogram& h);
/// {"schema":1,"r":..,"all_even":..,"witnesses":[{"p":[x,y],"q":[x,y],"d":..}]}
void write_parity_json(std::ostream& out, const ParityReport& report);

}  // namespace pct
