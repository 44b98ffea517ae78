#include "pctaxicab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pctaxicab/chords.hpp"
#include "pctaxicab/closed_form.hpp"
#include "pctaxicab/oracle.hpp"
#include "pctaxicab/render.hpp"
#include "pctaxicab/verify.hpp"

namespace pct {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Int parse_int(std::string_view s, const std::string& what) {
  Int v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw UsageError("invalid integer for " + what + ": '" + std::string(s) + "'");
  return v;
}

std::pair<Int, Int> parse_pair(const std::string& s, const std::string& what) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError(what + " must be written as a,b: '" + s + "'");
  return {parse_int(std::string_view(s).substr(0, comma), what),
          parse_int(std::string_view(s).substr(comma + 1), what)};
}

Point parse_point(const std::string& s, const std::string& what) {
  const auto [x, y] = parse_pair(s, what);
  return {x, y};
}

std::vector<Point> parse_centers(const std::vector<std::string>& raw) {
  std::vector<Point> centers;
  for (const auto& s : raw) centers.push_back(parse_point(s, "--center"));
  if (centers.empty()) centers.push_back(kOrigin);
  return centers;
}

void require_non_negative(Int v, const std::string& what) {
  if (v < 0) throw UsageError(what + " must be non-negative");
}

nlohmann::json interval_json(const std::vector<IntInterval>& parts) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& iv : parts) arr.push_back({iv.lo, iv.hi});
  return arr;
}

// Sink for `render --out`; writes to the file or falls back to `out`.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + path + "'");
  file << text;
}

struct Options {
  // ball
  Int radius = 0;
  std::vector<std::string> centers;
  std::string ball_format = "summary";
  std::string section_format = "text";
  std::string sequence_format = "list";
  std::string chord_format = "csv";
  // section
  Int intercept = 0;
  bool check = false;
  // verify
  Int max_radius = 20;
  bool json = false;
  // sequences
  std::string kind;
  // chords
  std::string point;
  bool parity = false;
  bool diameter = false;
  // render
  std::string what;
  std::vector<Int> highlight;
  bool highlight_given = false;
  Int seq_max_radius = 0;
  Int m_min = -2;
  Int m_max = 2;
  std::string box = "-6,6";
  std::string stairway;
  std::size_t steps = 8;
  std::string out_path;
};

int cmd_ball(const Options& o, std::ostream& out, const BfsOptions& bfs) {
  require_non_negative(o.radius, "--radius");
  const DistanceField field = bfs_ball(parse_centers(o.centers), o.radius, bfs);
  const auto summary = ball_summary(field);
  if (o.ball_format == "csv") {
    write_csv(out, field);
  } else if (o.ball_format == "json") {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& [p, d] : field.sorted_entries()) points.push_back({{"x", p.x}, {"y", p.y}, {"d", d}});
    nlohmann::json centers = nlohmann::json::array();
    for (const Point& c : field.centers()) centers.push_back({c.x, c.y});
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& s : summary) {
      rows.push_back({{"radius", s.radius},
                      {"ball_count", s.ball_count},
                      {"boundary_count", s.boundary_count},
                      {"min_x", s.min_x},
                      {"max_x", s.max_x},
                      {"min_y", s.min_y},
                      {"max_y", s.max_y}});
    }
    out << nlohmann::json{{"schema", 1}, {"radius", o.radius}, {"centers", centers}, {"points", points},
                          {"summary", rows}}
               .dump()
        << '\n';
  } else {
    out << "radius " << o.radius << ", centers " << field.centers().size() << ", points " << field.size()
        << '\n';
    out << "r,boundary,ball,min_x,max_x,min_y,max_y\n";
    for (const auto& s : summary) {
      out << s.radius << ',' << s.boundary_count << ',' << s.ball_count << ',' << s.min_x << ',' << s.max_x
          << ',' << s.min_y << ',' << s.max_y << '\n';
    }
  }
  return kExitOk;
}

int cmd_section(const Options& o, std::ostream& out, const BfsOptions& bfs) {
  require_non_negative(o.radius, "--radius");
  const CrossSection s = cross_section(o.radius, o.intercept);
  if (o.section_format == "csv") {
    write_section_csv(out, s);
  } else if (o.section_format == "json") {
    out << nlohmann::json{{"schema", 1},
                          {"r", s.r},
                          {"c", s.c},
                          {"parts", interval_json(s.parts)},
                          {"negative", interval_json(neg_section(s.r, s.c))}}
               .dump()
        << '\n';
  } else {
    out << format_intervals(s.parts) << '\n';
  }
  if (!o.check) return kExitOk;

  const std::array<Point, 1> origin{kOrigin};
  const DistanceField field = bfs_ball(origin, o.radius, bfs);
  std::vector<IntInterval> oracle;
  for (const Point& p : field.boundary(o.radius)) {
    if (p.y - p.x == o.intercept) oracle.push_back({p.x, p.x});
  }
  oracle = normalize(std::move(oracle));
  if (oracle == s.parts) {
    out << "oracle: match\n";
    return kExitOk;
  }
  out << "oracle: MISMATCH " << format_intervals(oracle) << '\n';
  return kExitVerifyFailed;
}

int cmd_verify(const Options& o, std::ostream& out, const BfsOptions& bfs) {
  require_non_negative(o.max_radius, "--max-radius");
  const VerifyReport report = run_verify(o.max_radius, bfs);
  if (o.json) {
    write_report_json(out, report);
  } else {
    write_report_text(out, report);
    if (report.ok()) {
      out << "ball(" << o.max_radius << ") = " << ball_count(o.max_radius);
      for (Int r = std::max<Int>(0, o.max_radius - 3); r < o.max_radius; ++r) {
        out << ", boundary(" << r << ") = " << boundary_count(r);
      }
      out << '\n';
    }
  }
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_sequences(const Options& o, std::ostream& out) {
  require_non_negative(o.seq_max_radius, "--max-radius");
  const auto kind = parse_sequence_kind(o.kind);
  if (!kind) throw UsageError("unknown sequence kind '" + o.kind + "'");
  const auto values = sequence_export(*kind, o.seq_max_radius);
  if (o.sequence_format == "csv") {
    write_sequence_csv(out, values);
  } else if (o.sequence_format == "json") {
    out << nlohmann::json{{"schema", 1}, {"kind", o.kind}, {"values", values}}.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    out << '\n';
  }
  return kExitOk;
}

int cmd_chords(const Options& o, std::ostream& out, const BfsOptions& bfs) {
  if (o.radius < 1) throw UsageError("--radius must be at least 1");
  const BoundaryChords chords(o.radius, bfs);
  if (o.parity) {
    write_parity_json(out, chords.parity());
    return kExitOk;
  }
  if (o.diameter) {
    out << "diameter " << chords.diameter() << '\n';
    if (!o.point.empty()) {
      const Point p = parse_point(o.point, "--point");
      if (!chords.on_boundary(p)) throw UsageError("--point is not on the boundary");
      out << "antipodes " << chords.antipode_count(p) << '\n';
    }
    return kExitOk;
  }
  if (o.point.empty()) throw UsageError("chords needs --point, --parity, or --diameter");
  const Point p = parse_point(o.point, "--point");
  if (!chords.on_boundary(p)) throw UsageError("--point is not on the boundary");
  const ChordHistogram h = chords.histogram(p);
  if (o.chord_format == "text") {
    for (const auto& [d, count] : h.counts) out << "d=" << d << ": " << count << '\n';
  } else {
    write_histogram_csv(out, h);
  }
  return kExitOk;
}

int cmd_render(const Options& o, std::ostream& out, const BfsOptions& bfs) {
  std::string svg;
  if (o.what == "ball") {
    require_non_negative(o.radius, "--radius");
    const std::vector<Int> highlight = o.highlight_given ? o.highlight : std::vector<Int>{o.radius};
    for (Int h : highlight) {
      if (h < 0 || h > o.radius) throw UsageError("--highlight must lie in [0, radius]");
    }
    svg = render_ball(o.radius, highlight, parse_centers(o.centers), bfs);
  } else if (o.what == "chords") {
    if (o.radius < 1) throw UsageError("--radius must be at least 1");
    if (o.point.empty()) throw UsageError("render --what chords needs --point");
    const Point p = parse_point(o.point, "--point");
    if (!BoundaryChords(o.radius, bfs).on_boundary(p)) throw UsageError("--point is not on the boundary");
    svg = render_chords(o.radius, p, bfs);
  } else if (o.what == "parabolas") {
    const auto [lo, hi] = parse_pair(o.box, "--box");
    if (lo > hi) throw UsageError("--box must satisfy lo <= hi");
    std::optional<Point> start;
    if (!o.stairway.empty()) start = parse_point(o.stairway, "--stairway");
    svg = render_parabolas(o.m_min, o.m_max, {lo, hi, lo, hi}, start, o.steps);
  } else {
    throw UsageError("unknown --what '" + o.what + "'");
  }
  emit(o.out_path, svg, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parabolic-taxicab metric on the integer lattice", "pctaxicab"};
  app.require_subcommand(1);
  Options o;

  auto* ball = app.add_subcommand("ball", "Enumerate a closed ball by BFS");
  ball->add_option("--radius", o.radius, "Ball radius")->required();
  ball->add_option("--center", o.centers, "Center x,y (repeatable, default 0,0)")->allow_extra_args(false);
  ball->add_option("--format", o.ball_format, "summary | csv | json")
      ->capture_default_str()
      ->check(CLI::IsMember({"summary", "csv", "json"}));

  auto* section = app.add_subcommand("section", "Closed-form cross-section on the line y = x + c");
  section->add_option("--radius", o.radius)->required();
  section->add_option("--intercept", o.intercept)->required();
  section->add_flag("--check", o.check, "Compare against the BFS oracle");
  section->add_option("--format", o.section_format)->capture_default_str()->check(CLI::IsMember({"text", "csv", "json"}));

  auto* verify = app.add_subcommand("verify", "Check every closed form against the oracle");
  verify->add_option("--max-radius", o.max_radius)->capture_default_str();
  verify->add_flag("--json", o.json, "Machine-readable report");

  auto* sequences = app.add_subcommand("sequences", "Print closed-form integer sequences");
  sequences->add_option("--kind", o.kind, "ball | boundary | c_of_r | abs_x | abs_y | diam_sq")->required();
  sequences->add_option("--max-radius", o.seq_max_radius)->required();
  sequences->add_option("--format", o.sequence_format)->capture_default_str()->check(CLI::IsMember({"list", "csv", "json"}));

  auto* chords = app.add_subcommand("chords", "Chord distances on the boundary of a ball around O");
  chords->add_option("--radius", o.radius)->required();
  chords->add_option("--point", o.point, "Base point x,y on the boundary");
  chords->add_flag("--parity", o.parity, "Report chord-length parity as JSON");
  chords->add_flag("--diameter", o.diameter, "Report the boundary diameter");
  chords->add_option("--format", o.chord_format)->capture_default_str()->check(CLI::IsMember({"csv", "text"}));

  auto* render = app.add_subcommand("render", "Write an SVG figure");
  render->add_option("--what", o.what, "ball | chords | parabolas")->required();
  render->add_option("--radius", o.radius);
  auto* highlight = render->add_option("--highlight", o.highlight, "Highlighted radii (ball; default the radius itself)");
  render->add_option("--center", o.centers, "Ball center x,y (repeatable)")->allow_extra_args(false);
  render->add_option("--point", o.point, "Chord base point x,y");
  render->add_option("--m-min", o.m_min);
  render->add_option("--m-max", o.m_max);
  render->add_option("--box", o.box, "Square box lo,hi for the parabola figure");
  render->add_option("--stairway", o.stairway, "Stairway start x,y");
  render->add_option("--steps", o.steps);
  render->add_option("--out", o.out_path, "Output path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  o.highlight_given = highlight->count() > 0;
  try {
    BfsOptions bfs;
    bfs.max_points = mem_cap_from_env();
    if (*ball) return cmd_ball(o, out, bfs);
    if (*section) return cmd_section(o, out, bfs);
    if (*verify) return cmd_verify(o, out, bfs);
    if (*sequences) return cmd_sequences(o, out);
    if (*chords) return cmd_chords(o, out, bfs);
    if (*render) return cmd_render(o, out, bfs);
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << " (last complete radius " << e.reached_radius() << ")\n";
    return kExitResource;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << '\n';
    return kExitResource;
  }
  return kExitUsage;
}

}  // namespace pct
