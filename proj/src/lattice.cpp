#include "pctaxicab/lattice.hpp"

#include <stdexcept>

namespace pct {

std::string_view to_string(Operator op) {
  switch (op) {
    case Operator::Id: return "Id";
    case Operator::Lp: return "Lp";
    case Operator::Lpp: return "Lpp";
    case Operator::Mr: return "Mr";
    case Operator::Ml: return "Ml";
    case Operator::Mu: return "Mu";
    case Operator::Md: return "Md";
  }
  return "?";
}

Point apply(Operator op, Point p) {
  switch (op) {
    case Operator::Id: return p;
    case Operator::Lp: return {checked_add(checked_sub(checked_mul(2, p.y), p.x), 1), p.y};
    case Operator::Lpp: return {p.x, checked_add(checked_sub(checked_mul(2, p.x), p.y), 1)};
    case Operator::Mr: return {checked_add(p.x, 1), p.y};
    case Operator::Ml: return {checked_sub(p.x, 1), p.y};
    case Operator::Mu: return {p.x, checked_add(p.y, 1)};
    case Operator::Md: return {p.x, checked_sub(p.y, 1)};
  }
  return p;
}

Point apply_word(const std::vector<Operator>& word, Point p) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = apply(*it, p);
  return p;
}

ParabolaIndex parabola_index(Point p) {
  const Int d = checked_sub(p.x, p.y);
  const Int num = checked_sub(checked_mul(d, d), checked_add(p.x, p.y));
  return {exact_div(num, 2, "parabola_index")};
}

Point parabola_point(ParabolaIndex m, Int t) {
  // x + y = t^2 - 2m and x - y = t; t(t+1) is always even.
  const Int sum = checked_sub(checked_mul(t, t), checked_mul(2, m.m));
  const Int x = exact_div(checked_add(sum, t), 2, "parabola_point");
  return {x, checked_sub(x, t)};
}

std::vector<Point> stairway(Point p, Operator first, std::size_t n) {
  if (first != Operator::Lp && first != Operator::Lpp) {
    throw std::invalid_argument("stairway: first operator must be Lp or Lpp");
  }
  std::vector<Point> out;
  out.reserve(n + 1);
  out.push_back(p);
  Operator op = first;
  for (std::size_t i = 0; i < n; ++i) {
    p = apply(op, p);
    out.push_back(p);
    op = tilde(op);
  }
  return out;
}

}  // namespace pct
