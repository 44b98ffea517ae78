#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "pctaxicab/checked.hpp"

namespace pct {

/// A point of the integer lattice. Ordered lexicographically (x, then y).
struct Point {
  Int x = 0;
  Int y = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {checked_add(a.x, b.x), checked_add(a.y, b.y)}; }
inline Point operator-(Point a, Point b) { return {checked_sub(a.x, b.x), checked_sub(a.y, b.y)}; }

inline constexpr Point kOrigin{0, 0};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    // splitmix64 finalizer over the packed pair
    auto h = static_cast<std::uint64_t>(p.x) * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(p.y);
    h ^= h >> 30;
    h *= 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 27;
    h *= 0x94D049BB133111EBULL;
    h ^= h >> 31;
    return static_cast<std::size_t>(h);
  }
};

/// The seven generators. Lp/Lpp are the parabolic involutions
/// L'(x,y) = (-x+2y+1, y) and L''(x,y) = (x, 2x-y+1); Mr/Ml/Mu/Md are the unit
/// moves right/left/up/down.
enum class Operator { Id, Lp, Lpp, Mr, Ml, Mu, Md };

/// The six non-identity generators, i.e. the edge set of the lattice graph.
inline constexpr std::array<Operator, 6> kGenerators{Operator::Lp, Operator::Lpp, Operator::Mr,
                                                     Operator::Ml, Operator::Mu,  Operator::Md};

std::string_view to_string(Operator op);

Point apply(Operator op, Point p);

/// Applies a word right to left: apply_word({F1,...,Fn}, p) = F1(...(Fn(p))).
Point apply_word(const std::vector<Operator>& word, Point p);

/// The mirror pairing Lp<->Lpp, Mr<->Mu, Ml<->Md.
constexpr Operator tilde(Operator op) {
  switch (op) {
    case Operator::Lp: return Operator::Lpp;
    case Operator::Lpp: return Operator::Lp;
    case Operator::Mr: return Operator::Mu;
    case Operator::Mu: return Operator::Mr;
    case Operator::Ml: return Operator::Md;
    case Operator::Md: return Operator::Ml;
    case Operator::Id: break;
  }
  return Operator::Id;
}

constexpr Point reflect_diag(Point p) { return {p.y, p.x}; }

struct ParabolaIndex {
  Int m = 0;
  friend constexpr auto operator<=>(const ParabolaIndex&, const ParabolaIndex&) = default;
};

/// The m with x + y + 2m = (x - y)^2. (x-y)^2 - x - y is always even.
ParabolaIndex parabola_index(Point p);

/// The lattice point of parabola m at parameter t = x - y.
/// Every integer t gives a lattice point and every lattice point arises this way.
Point parabola_point(ParabolaIndex m, Int t);

/// [p, F1(p), F2F1(p), ...] with n steps, alternating between Lp and Lpp
/// starting with `first`. Throws std::invalid_argument unless first is Lp or Lpp.
std::vector<Point> stairway(Point p, Operator first, std::size_t n);

}  // namespace pct

template <>
struct std::hash<pct::Point> : pct::PointHash {};
