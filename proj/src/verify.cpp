#include "pctaxicab/verify.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <tuple>

#include "json.hpp"
#include "pctaxicab/closed_form.hpp"

namespace pct {

namespace {

std::vector<IntInterval> runs_of(const std::vector<Int>& sorted_xs) {
  std::vector<IntInterval> parts;
  for (Int x : sorted_xs) parts.push_back({x, x});
  return normalize(std::move(parts));
}

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  template <typename T>
  void expect(const std::string& check, Int r, std::optional<Int> c, const T& expected, const T& actual) {
    ++report_.checks_run;
    if (expected == actual) return;
    report_.failures.push_back({check, r, c, show(expected), show(actual)});
  }

 private:
  static std::string show(Int v) { return std::to_string(v); }
  static std::string show(const std::vector<IntInterval>& v) { return format_intervals(v); }

  VerifyReport& report_;
};

Int squared_distance(Point a, Point b) {
  const Int dx = checked_sub(a.x, b.x);
  const Int dy = checked_sub(a.y, b.y);
  return checked_add(checked_mul(dx, dx), checked_mul(dy, dy));
}

void check_radius(Recorder& rec, const DistanceField& field, Int r, Int running_ball) {
  const auto& layer = field.boundary(r);
  rec.expect("ball_count", r, std::nullopt, ball_count(r), running_ball);
  rec.expect("boundary_count", r, std::nullopt, boundary_count(r), static_cast<Int>(layer.size()));
  rec.expect("boundary_count_parity", r, std::nullopt, boundary_count(r), boundary_count_by_parity(r));

  std::map<Int, std::vector<Int>> by_line;
  for (const Point& p : layer) by_line[p.y - p.x].push_back(p.x);  // layer is sorted, so xs are too

  for (Int c = -r - 2; c <= r + 2; ++c) {
    const auto it = by_line.find(c);
    const std::vector<Int> xs = it == by_line.end() ? std::vector<Int>{} : it->second;
    const std::vector<IntInterval> oracle = runs_of(xs);
    rec.expect("cross_section", r, c, cross_section(r, c).parts, oracle);
    rec.expect("line_count", r, c, line_count(r, c), static_cast<Int>(xs.size()));

    std::vector<Int> negative;
    std::copy_if(xs.begin(), xs.end(), std::back_inserter(negative), [](Int x) { return x < 0; });
    const auto neg = neg_section(r, c);
    rec.expect("neg_section", r, c, neg, runs_of(negative));
    if (std::abs(c) <= r && (r - c) % 2 == 0) {
      rec.expect("neg_recursion", r, c, neg, neg_section_recursive(r, c));
    }
  }
  for (const auto& [c, xs] : by_line) {
    if (c < -r - 2 || c > r + 2) {
      rec.expect("cross_section", r, c, cross_section(r, c).parts, runs_of(xs));
    }
  }
}

}  // namespace

VerifyReport run_verify(Int r_max, const BfsOptions& options) {
  if (r_max < 0) throw std::invalid_argument("verify: negative radius");
  VerifyReport report;
  report.r_max = r_max;
  Recorder rec(report);

  const std::array<Point, 1> origin{kOrigin};
  std::optional<DistanceField> field;
  try {
    field.emplace(bfs_ball(origin, r_max, options));
  } catch (const ResourceError& e) {
    ++report.checks_run;
    report.failures.push_back({"oracle", e.reached_radius() + 1, std::nullopt, "ball within memory cap",
                               e.what()});
    return report;
  }

  Int running = 0;
  Int max_diag = 0;
  Int min_diag = 0;
  for (Int r = 0; r <= r_max; ++r) {
    running += static_cast<Int>(field->boundary(r).size());
    check_radius(rec, *field, r, running);

    for (const Point& p : field->boundary(r)) {
      max_diag = std::max(max_diag, p.y - p.x);
      min_diag = std::min(min_diag, p.y - p.x);
    }
    rec.expect("tangency_max", r, std::nullopt, r, max_diag);
    rec.expect("tangency_min", r, std::nullopt, -r, min_diag);
    // Distance between the supporting lines y = x + min and y = x + max, squared.
    const Int spread = max_diag - min_diag;
    rec.expect("width_sq", r, std::nullopt, width_sq(r), exact_div(spread * spread, 2, "width"));

    const DiameterData diam = diameter_data(r);
    rec.expect("diameter_closed_form", r, std::nullopt, diameter_sq_closed_form(r), diam.diam_sq);
    if (r <= kDiameterBruteForceMax) {
      std::vector<Point> ball;
      for (Int d = 0; d <= r; ++d) {
        const auto& layer = field->boundary(d);
        ball.insert(ball.end(), layer.begin(), layer.end());
      }
      Int best = 0;
      for (std::size_t i = 0; i < ball.size(); ++i) {
        for (std::size_t j = i + 1; j < ball.size(); ++j) best = std::max(best, squared_distance(ball[i], ball[j]));
      }
      rec.expect("diameter_brute_force", r, std::nullopt, diam.diam_sq, best);
    }
  }

  std::sort(report.failures.begin(), report.failures.end(), [](const VerifyFailure& a, const VerifyFailure& b) {
    return std::tie(a.check, a.r, a.c) < std::tie(b.check, b.r, b.c);
  });
  return report;
}

void write_report_json(std::ostream& out, const VerifyReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    nlohmann::json row{{"check", f.check}, {"r", f.r}, {"expected", f.expected}, {"actual", f.actual}};
    row["c"] = f.c ? nlohmann::json(*f.c) : nlohmann::json(nullptr);
    failures.push_back(row);
  }
  const nlohmann::json doc{{"schema", 1},
                           {"r_max", report.r_max},
                           {"checks_run", report.checks_run},
                           {"ok", report.ok()},
                           {"failures", failures}};
  out << doc.dump(2) << '\n';
}

void write_report_text(std::ostream& out, const VerifyReport& report) {
  out << "verified r <= " << report.r_max << ": " << report.checks_run << " checks, " << report.failures.size()
      << " failures\n";
  for (const auto& f : report.failures) {
    out << "FAIL " << f.check << " r=" << f.r;
    if (f.c) out << " c=" << *f.c;
    out << " expected " << f.expected << " got " << f.actual << '\n';
  }
}

}  // namespace pct
