#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pctaxicab/lattice.hpp"

namespace pct {

/// Closed integer interval [lo, hi]. The empty interval is canonically (0, -1).
struct IntInterval {
  Int lo = 0;
  Int hi = -1;

  static constexpr IntInterval empty() { return {0, -1}; }
  constexpr bool is_empty() const { return lo > hi; }
  constexpr Int size() const { return is_empty() ? 0 : hi - lo + 1; }
  constexpr bool contains(Int x) const { return lo <= x && x <= hi; }

  friend constexpr bool operator==(const IntInterval&, const IntInterval&) = default;
};

/// Minkowski shift a + I. Shifting the empty interval yields the empty interval.
IntInterval operator+(IntInterval iv, Int a);
inline IntInterval operator+(Int a, IntInterval iv) { return iv + a; }

/// Sorts, drops empties, and merges overlapping or adjacent intervals.
std::vector<IntInterval> normalize(std::vector<IntInterval> parts);

/// x-coordinates of the boundary of the radius-r ball around O on the line y = x + c.
struct CrossSection {
  Int r = 0;
  Int c = 0;
  std::vector<IntInterval> parts;  // disjoint, sorted, maximal; at most two

  bool is_empty() const { return parts.empty(); }
  Int size() const;
  bool contains(Int x) const;
  /// Every member in increasing order.
  std::vector<Int> members() const;

  friend bool operator==(const CrossSection&, const CrossSection&) = default;
};

/// C(n, 2) = n(n-1)/2. Throws std::invalid_argument for n < 0.
Int binom2(Int n);

/// The exact set Sa(r, c). Throws std::invalid_argument for r < 0.
CrossSection cross_section(Int r, Int c);

/// The strictly negative part S-(r, c): a single interval or empty.
std::vector<IntInterval> neg_section(Int r, Int c);

/// z(x) = eps(x)(|x| + 1), eps(x) = -1 for x > 0 and 1 otherwise. Never 0.
Int zf(Int x);

/// k-fold composition of zf, computed by iteration. Throws for k < 0.
Int zk(Int x, Int k);

/// Closed form of zk: (-1)^k (x + k) for x > 0, (-1)^(k-1) (k - x) for x <= 0, k >= 1.
Int zk_closed(Int x, Int k);

/// S-(r, c) computed by unfolding the one-step recursion in r down to |c'| = r'.
/// Requires |c| <= r and c = r (mod 2); throws std::invalid_argument otherwise.
std::vector<IntInterval> neg_section_recursive(Int r, Int c);

/// Number of points at distance exactly r from O, from the ceiling formula.
Int boundary_count(Int r);
/// Same count via the even/odd split (1; 5r^2/2 - r + 2; (5r^2 + 5)/2 - r).
Int boundary_count_by_parity(Int r);
/// Number of points at distance at most r from O.
Int ball_count(Int r);

/// |F(r, c)| predicted line by line: 2r - 2k off the extremal lines,
/// C(r+1, 2) + 1 on c = +-r, 0 where Sa is empty.
Int line_count(Int r, Int c);

struct DiameterData {
  Int r = 0;
  Point q;        // (r(r+1)/2, r(r-1)/2)
  Point p;        // (x(r), x(r) + c(r))
  Int c_of_r = 0;
  Int diam_sq = 0;

  friend bool operator==(const DiameterData&, const DiameterData&) = default;
};

DiameterData diameter_data(Int r);

/// The square of the radical closed form for the Euclidean diameter,
/// evaluated with both floor terms as exact integers.
Int diameter_sq_closed_form(Int r);

/// Squared Euclidean width, 2r^2.
Int width_sq(Int r);

enum class SequenceKind { Ball, Boundary, COfR, AbsX, AbsY, DiamSq };

std::optional<SequenceKind> parse_sequence_kind(std::string_view name);
std::string_view to_string(SequenceKind kind);

/// Values for r = 0..r_max. Throws std::invalid_argument for r_max < 0.
std::vector<Int> sequence_export(SequenceKind kind, Int r_max);

/// `r,value` rows.
void write_sequence_csv(std::ostream& out, const std::vector<Int>& values);
/// `r,c` followed by `lo,hi` pairs.
void write_section_csv(std::ostream& out, const CrossSection& s);
/// "[lo,hi] ∪ [lo,hi]", or "∅" when empty.
std::string format_intervals(const std::vector<IntInterval>& parts);

}  // namespace pct
