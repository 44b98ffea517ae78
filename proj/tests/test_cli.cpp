#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "pctaxicab/checked.hpp"
#include "pctaxicab/cli.hpp"

using namespace pct;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + needle.size())) ++n;
  return n;
}

}  // namespace

TEST_CASE("ball") {
  auto r = run({"ball", "--radius", "13"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("points 1987") != std::string::npos);
  CHECK(r.out.find("\n12,350,1575,") != std::string::npos);

  r = run({"ball", "--radius", "0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("points 1\n") != std::string::npos);

  r = run({"ball", "--radius", "0", "--format", "csv"});
  CHECK(r.out == "0,0,0\n");

  r = run({"ball", "--radius", "4", "--center", "3,-3", "--center", "-3,3", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["centers"].size() == 2);
  std::set<std::pair<Int, Int>> pts;
  for (const auto& p : doc["points"]) pts.insert({p["x"].get<Int>(), p["y"].get<Int>()});
  for (const auto& [x, y] : pts) REQUIRE(pts.contains({y, x}));
  CHECK(doc["summary"].back()["ball_count"] == static_cast<Int>(pts.size()));
}

TEST_CASE("section") {
  auto r = run({"section", "--radius", "9", "--intercept", "5"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "[-18,-12] ∪ [17,23]\n");
  CHECK(run({"section", "--radius", "9", "--intercept", "-9"}).out == "[0,45]\n");
  CHECK(run({"section", "--radius", "7", "--intercept", "4"}).out == "∅\n");
  CHECK(run({"section", "--radius", "9", "--intercept", "5", "--format", "csv"}).out == "9,5,-18,-12,17,23\n");

  r = run({"section", "--radius", "9", "--intercept", "-5", "--check"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "[-13,-7] ∪ [22,28]\noracle: match\n");

  r = run({"section", "--radius", "9", "--intercept", "5", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["negative"] == nlohmann::json::parse("[[-18,-12]]"));
}

TEST_CASE("verify") {
  auto r = run({"verify", "--max-radius", "13"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find(" 0 failures") != std::string::npos);
  CHECK(r.out.find("ball(13) = 1987, boundary(10) = 242, boundary(11) = 294, boundary(12) = 350") !=
        std::string::npos);

  r = run({"verify", "--max-radius", "0", "--json"});
  CHECK(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["ok"] == true);
  CHECK(doc["failures"].empty());
  CHECK(doc["checks_run"].get<Int>() > 0);
}

TEST_CASE("sequences") {
  auto r = run({"sequences", "--kind", "diam_sq", "--max-radius", "9"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "0,4,26,106,306,680,1384,2500,4122,6570\n");
  CHECK(run({"sequences", "--kind", "ball", "--max-radius", "2", "--format", "csv"}).out == "0,1\n1,5\n2,15\n");
  const auto doc = nlohmann::json::parse(run({"sequences", "--kind", "c_of_r", "--max-radius", "3", "--format", "json"}).out);
  CHECK(doc["values"] == nlohmann::json::parse("[0,1,2,1]"));
}

TEST_CASE("chords") {
  auto r = run({"chords", "--radius", "6", "--point", "-6,-6"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "6,-6,-6,2,7\n6,-6,-6,4,13\n6,-6,-6,6,32\n6,-6,-6,8,29\n6,-6,-6,10,4\n");

  r = run({"chords", "--radius", "6", "--diameter", "--point", "-6,-6"});
  CHECK(r.out == "diameter 10\nantipodes 4\n");

  r = run({"chords", "--radius", "3", "--parity"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["all_even"] == true);
  CHECK(doc["r"] == 3);
}

TEST_CASE("render") {
  const auto path = std::filesystem::temp_directory_path() / "pctaxicab_b6.svg";
  std::filesystem::remove(path);
  auto r = run({"render", "--what", "ball", "--radius", "6", "--out", path.string()});
  CHECK(r.code == kExitOk);
  std::ifstream in(path);
  const std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(count_of(svg, "<circle ") == 221);
  std::filesystem::remove(path);

  r = run({"render", "--what", "chords", "--radius", "6", "--point", "2,8"});
  CHECK(r.code == kExitOk);
  CHECK(count_of(r.out, "<circle ") == 86);

  r = run({"render", "--what", "parabolas", "--box", "-6,6", "--m-min", "1", "--m-max", "0"});
  CHECK(r.code == kExitOk);
  CHECK(count_of(r.out, "<circle ") == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"ball"}).code == kExitUsage);
  CHECK(run({"ball", "--radius", "-1"}).code == kExitUsage);
  CHECK(run({"ball", "--radius", "2", "--center", "3;4"}).code == kExitUsage);
  CHECK(run({"ball", "--radius", "2", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"sequences", "--kind", "area", "--max-radius", "3"}).code == kExitUsage);
  CHECK(run({"chords", "--radius", "6", "--point", "0,0"}).code == kExitUsage);
  CHECK(run({"chords", "--radius", "6"}).code == kExitUsage);
  CHECK(run({"render", "--what", "movie"}).code == kExitUsage);
  CHECK(run({"render", "--what", "ball", "--radius", "3", "--highlight", "5"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
}

TEST_CASE("resource errors exit with 3") {
  ::setenv("PCM_MEM_CAP", "100", 1);
  auto r = run({"ball", "--radius", "10"});
  CHECK(r.code == kExitResource);
  CHECK(r.err.find("resource error") != std::string::npos);

  r = run({"verify", "--max-radius", "10", "--json"});
  CHECK(r.code == kExitVerifyFailed);
  CHECK(nlohmann::json::parse(r.out)["failures"][0]["check"] == "oracle");
  ::unsetenv("PCM_MEM_CAP");
}
