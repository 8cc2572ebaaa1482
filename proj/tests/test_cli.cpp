#include "catch_amalgamated.hpp"

#include "okb/cli.hpp"
#include "okb/figure.hpp"
#include "okb/io.hpp"
#include "okb/okounkov.hpp"

#include <sstream>

using namespace okb;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command_line(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(invoke({"seshadri", "-n", "8"}).code == kExitOk);
  CHECK(invoke({"seshadri", "-n", "8"}).out == "6/17\n");

  const Outcome not_big = invoke({"body", "-n", "4", "-D", "1,1/2,1/2,1/2,1/2"});
  CHECK(not_big.code == kExitMath);
  CHECK_FALSE(not_big.err.empty());

  const Outcome bad_n = invoke({"curves", "-n", "12"});
  CHECK(bad_n.code == kExitUsage);
  CHECK(bad_n.err.find("12") != std::string::npos);

  const Outcome bad_class = invoke({"zariski", "-n", "2", "-D", "1,1/2,zz"});
  CHECK(bad_class.code == kExitUsage);
  CHECK(bad_class.err.find("zz") != std::string::npos);

  const Outcome wrong_len = invoke({"test", "-n", "3", "-D", "1,0", "--nef"});
  CHECK(wrong_len.code == kExitUsage);

  CHECK(invoke({"frobnicate"}).code == kExitUsage);
  CHECK(invoke({"test", "-n", "2", "-D", "1,0,0"}).code == kExitUsage);
  CHECK(invoke({"test", "-n", "2", "-D", "1,0,0", "--nef", "--big"}).code == kExitUsage);
  CHECK(invoke({"body", "-n", "2", "-D", "1,0,0", "-d", "3", "-m", "1"}).code == kExitUsage);
  CHECK(invoke({"nagata", "-n", "8", "-d", "3", "-m", "1"}).code == kExitUsage);

  const Outcome help = invoke({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("dissect") != std::string::npos);
}

TEST_CASE("curves and cone tests") {
  const Outcome c = invoke({"curves", "-n", "8", "--histogram"});
  REQUIRE(c.code == kExitOk);
  CHECK(c.out.find("240 classes") != std::string::npos);
  CHECK(c.out.find("degree 6: 8") != std::string::npos);
  CHECK(invoke({"curves", "-n", "7", "--oracle"}).out.find("56 classes") != std::string::npos);

  const json j = json::parse(invoke({"curves", "-n", "6", "--histogram", "--json"}).out);
  CHECK(j["classes"].size() == 27);

  CHECK(invoke({"test", "-n", "5", "-D", "1,2/5,2/5,2/5,2/5,2/5", "--nef"}).out.rfind("true", 0) == 0);
  CHECK(invoke({"test", "-n", "5", "-D", "1,2/5,2/5,2/5,2/5,2/5", "--ample"}).out.rfind("false", 0) == 0);
  CHECK(invoke({"test", "-n", "3", "-D", "-1,0,0,0", "--psef"}).out.rfind("false", 0) == 0);
}

TEST_CASE("zariski and body output") {
  const Outcome z = invoke({"zariski", "-n", "2", "-D", "1/2,1/3,1/3", "--json"});
  REQUIRE(z.code == kExitOk);
  const json zj = json::parse(z.out);
  CHECK(zj["negative"].size() == 1);
  CHECK(zj["negative"][0]["coeff"] == "1/6");

  const Outcome b = invoke({"body", "-n", "2", "-d", "3", "-m", "1", "--json"});
  REQUIRE(b.code == kExitOk);
  const auto payload = rational_polygon_from_json(json::parse(b.out));
  CHECK(payload.n == 2);
  CHECK(payload.polygon == body_L(2, Rational(3), Rational(1)));

  const Outcome b9 = invoke({"body", "-n", "9", "-D", "3,1,1,1,1,1,1,1,1,1"});
  CHECK(b9.code == kExitOk);
  CHECK(b9.out == "(0, 0)\n(0, 3)\n");
  CHECK(invoke({"body", "-n", "9", "-D", "3,1,1,1,1,1,1,1,1,0"}).code != kExitOk);
}

TEST_CASE("nagata output") {
  const Outcome n10 = invoke({"nagata", "-n", "10", "-d", "4", "-m", "1", "--json"});
  REQUIRE(n10.code == kExitOk);
  const auto payload = quadratic_polygon_from_json(json::parse(n10.out));
  CHECK(payload.polygon.conjectural());
  CHECK(payload.polygon == nagata_strip(10, Rational(4), Rational(1)));
  CHECK(invoke({"nagata", "-n", "10", "-d", "3", "-m", "1"}).code == kExitMath);
}

TEST_CASE("polygon JSON round trips") {
  const RationalPolygon body = okounkov_body(DivisorClass::uniform(7, Rational(1), make_rational(1, 3)));
  const auto back = rational_polygon_from_json(json::parse(polygon_to_json(7, body).dump()));
  CHECK(back.n == 7);
  CHECK(back.polygon == body);

  const QuadraticPolygon strip = nagata_strip(11, Rational(7), Rational(2));
  const auto qback = quadratic_polygon_from_json(json::parse(polygon_to_json(11, strip).dump()));
  CHECK(qback.polygon == strip);
  CHECK(qback.polygon.conjectural());
}

TEST_CASE("dissection figures") {
  const Outcome dj = invoke({"dissect", "--format", "json"});
  REQUIRE(dj.code == kExitOk);
  const json arr = json::parse(dj.out);
  REQUIRE(arr.size() == 10);
  const Dissection d = dissection();
  for (std::size_t i = 0; i < arr.size(); ++i) CHECK(rational_polygon_from_json(arr[i]).polygon == d.bodies[i].body);

  const Outcome tikz = invoke({"dissect", "--format", "tikz", "--eps", "1/3", "--scale", "10.2"});
  REQUIRE(tikz.code == kExitOk);
  CHECK(tikz.out.find("\\draw [dashed]") != std::string::npos);
  CHECK(tikz.out.find("% n=9") != std::string::npos);

  const Outcome svg = invoke({"dissect"});
  REQUIRE(svg.code == kExitOk);
  CHECK(svg.out.rfind("<svg", 0) == 0);

  const Outcome quarter = invoke({"dissect", "--eps", "1/4", "--format", "json"});
  CHECK(quarter.code == kExitOk);
  CHECK(quarter.err.find("warning") != std::string::npos);
  CHECK(invoke({"dissect", "--format", "text"}).code == kExitUsage);

  const FigureTicks ticks = figure_ticks(d.bodies);
  CHECK(ticks.x.front() == make_rational(1, 17));
  CHECK(ticks.x.back() == 1);
  CHECK(ticks.y.back() == 1);
  CHECK(format_coordinate(3.4) == "3.4");
  CHECK(format_coordinate(10.2 * 17.0 / 18.0) == "9.6333");

  const std::string axes = emit_figure({}, FigureFormat::kTikz);
  CHECK(axes.find("polygon") == std::string::npos);
  CHECK(axes.find("\\draw") != std::string::npos);
}

TEST_CASE("verify is deterministic in the seed") {
  const Outcome a = invoke({"verify", "--suite", "weyl", "--seed", "5"});
  const Outcome b = invoke({"verify", "--suite", "weyl", "--seed", "5"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(invoke({"verify", "--suite", "nope"}).code == kExitUsage);
}
