#include "pctaxicab/chords.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "json.hpp"

namespace pct {

Int ChordHistogram::total() const {
  Int n = 0;
  for (const auto& [d, count] : counts) n += count;
  return n;
}

BoundaryChords::BoundaryChords(Int r, const BfsOptions& options) : r_(r), options_(options) {
  if (r < 1) throw std::invalid_argument("chords: radius must be at least 1");
  const std::array<Point, 1> origin{kOrigin};
  boundary_ = bfs_ball(origin, r, options_).boundary(r);
}

bool BoundaryChords::on_boundary(Point p) const {
  return std::binary_search(boundary_.begin(), boundary_.end(), p);
}

std::vector<Int> BoundaryChords::distances_from(Point p) const {
  if (!on_boundary(p)) throw std::invalid_argument("chords: point is not on the boundary");
  const std::array<Point, 1> base{p};
  const DistanceField field = bfs_ball(base, 2 * r_, options_);
  std::vector<Int> out;
  out.reserve(boundary_.size());
  for (const Point& q : boundary_) {
    const auto d = field.distance(q);
    if (!d) throw std::logic_error("chords: boundary point beyond 2r from a boundary point");
    out.push_back(*d);
  }
  return out;
}

const std::vector<std::vector<Int>>& BoundaryChords::all_pairs() const {
  if (pairs_.empty()) {
    pairs_.reserve(boundary_.size());
    for (const Point& p : boundary_) pairs_.push_back(distances_from(p));
  }
  return pairs_;
}

ChordHistogram BoundaryChords::histogram(Point p) const {
  if (!on_boundary(p)) throw std::invalid_argument("chord_histogram: point is not on the boundary");
  ChordHistogram h{r_, p, {}};
  for (Int d : distances_from(p)) {
    if (d > 0) ++h.counts[d];
  }
  return h;
}

Int BoundaryChords::diameter() const {
  Int best = 0;
  for (const auto& row : all_pairs()) best = std::max(best, *std::max_element(row.begin(), row.end()));
  return best;
}

Int BoundaryChords::antipode_count(Point p) const {
  if (!on_boundary(p)) throw std::invalid_argument("antipode_count: point is not on the boundary");
  const Int diam = diameter();
  const auto idx = static_cast<std::size_t>(
      std::lower_bound(boundary_.begin(), boundary_.end(), p) - boundary_.begin());
  const auto& row = all_pairs()[idx];
  return std::count(row.begin(), row.end(), diam);
}

ParityReport BoundaryChords::parity() const {
  ParityReport report{r_, true, {}};
  const auto& pairs = all_pairs();
  for (std::size_t i = 0; i < boundary_.size(); ++i) {
    for (std::size_t j = i + 1; j < boundary_.size(); ++j) {
      if (pairs[i][j] % 2 != 0) report.odd_witnesses.push_back({boundary_[i], boundary_[j], pairs[i][j]});
    }
  }
  report.all_even = report.odd_witnesses.empty();
  return report;
}

ChordHistogram chord_histogram(Int r, Point p, const BfsOptions& options) {
  return BoundaryChords(r, options).histogram(p);
}

Int pc_diameter(Int r, const BfsOptions& options) { return BoundaryChords(r, options).diameter(); }

ParityReport parity_scan(Int r, const BfsOptions& options) { return BoundaryChords(r, options).parity(); }

Int antipode_count(Int r, Point p, const BfsOptions& options) {
  return BoundaryChords(r, options).antipode_count(p);
}

void write_histogram_csv(std::ostream& out, const ChordHistogram& h) {
  for (const auto& [d, count] : h.counts) {
    out << h.r << ',' << h.base.x << ',' << h.base.y << ',' << d << ',' << count << '\n';
  }
}

void write_parity_json(std::ostream& out, const ParityReport& report) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const Chord& w : report.odd_witnesses) {
    witnesses.push_back({{"p", {w.p.x, w.p.y}}, {"q", {w.q.x, w.q.y}}, {"d", w.length}});
  }
  const nlohmann::json doc{
      {"schema", 1}, {"r", report.r}, {"all_even", report.all_even}, {"witnesses", witnesses}};
  out << doc.dump() << '\n';
}

}  // namespace pct
