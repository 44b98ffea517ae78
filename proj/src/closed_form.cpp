#include "pctaxicab/closed_form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pct {

namespace {

Int abs_checked(Int v) { return v < 0 ? checked_neg(v) : v; }

bool same_parity(Int a, Int b) { return checked_sub(a, b) % 2 == 0; }

bool is_odd(Int v) { return v % 2 != 0; }

void require_radius(Int r, const char* what) {
  if (r < 0) throw std::invalid_argument(std::string(what) + ": negative radius");
}

IntInterval interval(Int lo, Int hi) { return lo <= hi ? IntInterval{lo, hi} : IntInterval::empty(); }

// S-(r, c) for |c| <= r - 2, c = r (mod 2).
IntInterval interior_negative_part(Int r, Int c, Int k) {
  if (c <= 0) {
    if (is_odd(k)) {
      return interval(k - r, -1) + checked_sub(checked_mul(c, k - 1), binom2(k));
    }
    return interval(0, r - k - 1) + checked_sub(checked_mul(c, k), binom2(k + 1));
  }
  if (is_odd(k)) {
    return interval(0, r - k - 1) + checked_sub(checked_neg(checked_mul(c, k + 1)), binom2(k + 1));
  }
  return interval(k - r, -1) + checked_sub(checked_neg(checked_mul(c, k)), binom2(k));
}

// Sa(r, c) intersected with the non-negative integers, same range as above.
IntInterval interior_nonnegative_part(Int r, Int c, Int k) {
  if (c >= 0) return interval(binom2(r - 1 - k) + k, binom2(r - k) + k);
  return interval(binom2(r - k) + 1, binom2(r - k + 1));
}

// Extremal lines c = +-r.
IntInterval extremal_section(Int r, Int c) {
  return c == r ? interval(-r, binom2(r)) : interval(0, binom2(r + 1));
}

std::vector<IntInterval> negative_of(IntInterval iv) {
  if (iv.is_empty() || iv.lo >= 0) return {};
  return {interval(iv.lo, std::min<Int>(iv.hi, -1))};
}

bool outside_support(Int r, Int c) { return abs_checked(c) > r || !same_parity(r, c); }

}  // namespace

IntInterval operator+(IntInterval iv, Int a) {
  if (iv.is_empty()) return IntInterval::empty();
  return {checked_add(iv.lo, a), checked_add(iv.hi, a)};
}

std::vector<IntInterval> normalize(std::vector<IntInterval> parts) {
  std::erase_if(parts, [](const IntInterval& iv) { return iv.is_empty(); });
  std::sort(parts.begin(), parts.end(), [](const IntInterval& a, const IntInterval& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  });
  std::vector<IntInterval> out;
  for (const IntInterval& iv : parts) {
    if (!out.empty() && iv.lo <= checked_add(out.back().hi, 1)) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

Int CrossSection::size() const {
  Int n = 0;
  for (const auto& iv : parts) n += iv.size();
  return n;
}

bool CrossSection::contains(Int x) const {
  return std::any_of(parts.begin(), parts.end(), [x](const IntInterval& iv) { return iv.contains(x); });
}

std::vector<Int> CrossSection::members() const {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (const auto& iv : parts) {
    for (Int x = iv.lo; x <= iv.hi; ++x) out.push_back(x);
  }
  return out;
}

Int binom2(Int n) {
  if (n < 0) throw std::invalid_argument("binom2: negative argument");
  return exact_div(checked_mul(n, n - 1), 2, "binom2");
}

CrossSection cross_section(Int r, Int c) {
  require_radius(r, "cross_section");
  CrossSection out{r, c, {}};
  if (outside_support(r, c)) return out;
  if (abs_checked(c) == r) {
    out.parts = normalize({extremal_section(r, c)});
    return out;
  }
  const Int k = (r - abs_checked(c)) / 2;
  out.parts = normalize({interior_negative_part(r, c, k), interior_nonnegative_part(r, c, k)});
  return out;
}

std::vector<IntInterval> neg_section(Int r, Int c) {
  require_radius(r, "neg_section");
  if (outside_support(r, c)) return {};
  if (abs_checked(c) == r) return negative_of(extremal_section(r, c));
  const Int k = (r - abs_checked(c)) / 2;
  return negative_of(interior_negative_part(r, c, k));
}

Int zf(Int x) {
  const Int magnitude = checked_add(abs_checked(x), 1);
  return x > 0 ? -magnitude : magnitude;
}

Int zk(Int x, Int k) {
  if (k < 0) throw std::invalid_argument("zk: negative iteration count");
  for (Int i = 0; i < k; ++i) x = zf(x);
  return x;
}

Int zk_closed(Int x, Int k) {
  if (k < 0) throw std::invalid_argument("zk_closed: negative iteration count");
  if (k == 0) return x;
  if (x > 0) {
    const Int v = checked_add(x, k);
    return is_odd(k) ? -v : v;
  }
  const Int v = checked_sub(k, x);
  return is_odd(k - 1) ? -v : v;
}

std::vector<IntInterval> neg_section_recursive(Int r, Int c) {
  require_radius(r, "neg_section_recursive");
  if (abs_checked(c) > r) throw std::invalid_argument("neg_section_recursive: |c| > r");
  if (!same_parity(r, c)) throw std::invalid_argument("neg_section_recursive: parity mismatch");

  if (abs_checked(c) == r) return negative_of(extremal_section(r, c));

  // Each step: S-(r, c) = S-(r-1, z(c)) [+ z(c) - c when c > 0].
  Int shift = 0;
  while (abs_checked(c) < r) {
    const Int next = zf(c);
    if (c > 0) shift = checked_add(shift, checked_sub(next, c));
    c = next;
    --r;
  }
  // Terminal line |c| = r >= 1: the points of F(r, +-r) off the first quadrant.
  const IntInterval base = c == r ? interval(-r, -1) : interval(0, r - 1);
  return {base + shift};
}

Int boundary_count(Int r) {
  require_radius(r, "boundary_count");
  const Int quad = exact_div(checked_sub(checked_mul(5, checked_mul(r, r)), r), 2, "boundary_count");
  return quad - ceil_div(r - 1, 2) + ceil_div(r, r + 1) + 1;
}

Int boundary_count_by_parity(Int r) {
  require_radius(r, "boundary_count_by_parity");
  if (r == 0) return 1;
  const Int five_r2 = checked_mul(5, checked_mul(r, r));
  if (is_odd(r)) return exact_div(five_r2 + 5, 2, "boundary_count_by_parity") - r;
  return exact_div(five_r2, 2, "boundary_count_by_parity") - r + 2;
}

Int ball_count(Int r) {
  require_radius(r, "ball_count");
  const Int r2 = checked_mul(r, r);
  const Int r3 = checked_mul(r2, r);
  Int num = checked_mul(10, r3);
  num = checked_add(num, checked_mul(9, r2));
  num = checked_add(num, checked_mul(23, r));
  num = checked_add(num, checked_mul(6, ceil_div(r, 2)));
  num = checked_add(num, 12);
  return exact_div(num, 12, "ball_count");
}

Int line_count(Int r, Int c) {
  require_radius(r, "line_count");
  if (outside_support(r, c)) return 0;
  if (abs_checked(c) == r) return binom2(r + 1) + 1;
  const Int k = (r - abs_checked(c)) / 2;
  return 2 * r - 2 * k;
}

DiameterData diameter_data(Int r) {
  require_radius(r, "diameter_data");
  DiameterData d;
  d.r = r;
  d.q = {binom2(r + 1), binom2(r)};
  d.c_of_r = r - 2 * floor_div(r, 3);
  const Int x = checked_neg(floor_div(checked_mul(r + 1, r + 2), 6));
  d.p = {x, checked_add(x, d.c_of_r)};
  const Int dx = checked_sub(d.q.x, d.p.x);
  const Int dy = checked_sub(d.q.y, d.p.y);
  d.diam_sq = checked_add(checked_mul(dx, dx), checked_mul(dy, dy));
  return d;
}

Int diameter_sq_closed_form(Int r) {
  require_radius(r, "diameter_sq_closed_form");
  const Int sixth = floor_div(checked_mul(r + 1, r + 2), 6);
  const Int a = checked_add(exact_div(checked_mul(r, r + 1), 2, "diameter"), sixth);
  const Int b = checked_add(checked_add(exact_div(checked_mul(r, r - 3), 2, "diameter"), sixth),
                            checked_mul(2, floor_div(r, 3)));
  return checked_add(checked_mul(a, a), checked_mul(b, b));
}

Int width_sq(Int r) {
  require_radius(r, "width_sq");
  return checked_mul(2, checked_mul(r, r));
}

std::optional<SequenceKind> parse_sequence_kind(std::string_view name) {
  if (name == "ball") return SequenceKind::Ball;
  if (name == "boundary") return SequenceKind::Boundary;
  if (name == "c_of_r") return SequenceKind::COfR;
  if (name == "abs_x") return SequenceKind::AbsX;
  if (name == "abs_y") return SequenceKind::AbsY;
  if (name == "diam_sq") return SequenceKind::DiamSq;
  return std::nullopt;
}

std::string_view to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::Ball: return "ball";
    case SequenceKind::Boundary: return "boundary";
    case SequenceKind::COfR: return "c_of_r";
    case SequenceKind::AbsX: return "abs_x";
    case SequenceKind::AbsY: return "abs_y";
    case SequenceKind::DiamSq: return "diam_sq";
  }
  return "?";
}

std::vector<Int> sequence_export(SequenceKind kind, Int r_max) {
  if (r_max < 0) throw std::invalid_argument("sequence_export: negative r_max");
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(r_max) + 1);
  for (Int r = 0; r <= r_max; ++r) {
    switch (kind) {
      case SequenceKind::Ball: out.push_back(ball_count(r)); break;
      case SequenceKind::Boundary: out.push_back(boundary_count(r)); break;
      case SequenceKind::COfR: out.push_back(diameter_data(r).c_of_r); break;
      case SequenceKind::AbsX: out.push_back(abs_checked(diameter_data(r).p.x)); break;
      case SequenceKind::AbsY: out.push_back(abs_checked(diameter_data(r).p.y)); break;
      case SequenceKind::DiamSq: out.push_back(diameter_data(r).diam_sq); break;
    }
  }
  return out;
}

void write_sequence_csv(std::ostream& out, const std::vector<Int>& values) {
  for (std::size_t r = 0; r < values.size(); ++r) out << r << ',' << values[r] << '\n';
}

void write_section_csv(std::ostream& out, const CrossSection& s) {
  out << s.r << ',' << s.c;
  for (const auto& iv : s.parts) out << ',' << iv.lo << ',' << iv.hi;
  out << '\n';
}

std::string format_intervals(const std::vector<IntInterval>& parts) {
  if (parts.empty()) return "∅";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) os << " ∪ ";
    os << '[' << parts[i].lo << ',' << parts[i].hi << ']';
  }
  return os.str();
}

}  // namespace pct
