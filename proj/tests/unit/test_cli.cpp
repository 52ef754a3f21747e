#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "../fixtures.hpp"
#include "splitquat/cli/app.hpp"
#include "splitquat/cli/emit.hpp"
#include "splitquat/cli/parse.hpp"
#include "splitquat/cli/svg.hpp"
#include "splitquat/errors.hpp"

using namespace splitquat;
using namespace splitquat::cli;
using fixtures::qt;

namespace {

const char* kExample2 = "t^2 - (2+j+2k)t + (1-2i+j+2k)";
const char* kExample1 = "t^2 - (2+j+2k)t + (1+2i+j+2k)";

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "splitquat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& text, const std::string& what) {
  std::size_t n = 0;
  for (auto p = text.find(what); p != std::string::npos; p = text.find(what, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("parse polynomials") {
  CHECK(parse_poly(kExample2, Signature::Split, Backend::Exact) == fixtures::example2());
  CHECK(parse_poly(kExample1, Signature::Hamiltonian, Backend::Exact) == fixtures::example1());
  QuatPoly p = parse_poly("t^2+1", Signature::Split, Backend::Exact);
  CHECK(p.is_monic());
  CHECK(p.coeff(1).is_zero());
  CHECK(parse_poly("t^2 - 3/2 i t + 1/2 k", Signature::Split, Backend::Exact).coeff(0) ==
        qt(0, 0, 0, mpq_class(1, 2)));
  CHECK(parse_poly("-(1+j)t", Signature::Split, Backend::Exact).coeff(1) == qt(-1, 0, -1, 0));
  CHECK(parse_poly(kExample2, Signature::Split, Backend::Float).backend() == Backend::Float);
}

TEST_CASE("printing a parsed polynomial round-trips") {
  for (const char* text : {kExample2, "t^2 + 3/4it - 2", "t - 1 - 8/5j - 6/5k"}) {
    QuatPoly p = parse_poly(text, Signature::Split, Backend::Exact);
    CHECK(parse_poly(p.to_string(), Signature::Split, Backend::Exact) == p);
  }
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_poly("t^2 + (1+j", Signature::Split, Backend::Exact);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 10);
  }
  CHECK_THROWS_AS(parse_poly("t^2 + 1/0", Signature::Split, Backend::Exact), ParseError);
  CHECK_THROWS_AS(parse_poly("t^2 + x", Signature::Split, Backend::Exact), ParseError);
  CHECK_THROWS_AS(parse_poly("", Signature::Split, Backend::Exact), ParseError);
}

TEST_CASE("parse points and ranges") {
  CHECK(parse_point("[i+3j+k]", Signature::Split, Backend::Exact) == ProjPoint(qt(0, 1, 3, 1)));
  CHECK(parse_point("1,3,1", Signature::Split, Backend::Exact) == ProjPoint(qt(0, 1, 3, 1)));
  CHECK_THROWS_AS(parse_point("1+i", Signature::Split, Backend::Exact), ParseError);
  CHECK_THROWS_AS(parse_point("0,0,0", Signature::Split, Backend::Exact), ParseError);
  auto [a, b] = parse_range("-1/2:3", Backend::Exact);
  CHECK(a == Scalar::rational(-1, 2));
  CHECK(b == Scalar(3L));
}

TEST_CASE("JSON codec round-trips exact values") {
  FactorizationSet fs = factorize(fixtures::example2());
  Json j = Json::parse(factor_report(fs).dump());
  REQUIRE(j["factorizations"].size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(quaternion_from_json(j["factorizations"][i]["h1"], Signature::Split) == fs.factorizations[i].h1);
    CHECK(quaternion_from_json(j["factorizations"][i]["h2"], Signature::Split) == fs.factorizations[i].h2);
  }
  CHECK(to_json(Scalar::rational(-8, 5)) == "-8/5");
  CHECK(scalar_from_json(to_json(Scalar::rational(-8, 5))) == Scalar::rational(-8, 5));
  CHECK(to_json(ProjPoint(qt(0, mpq_class(1, 2), mpq_class(3, 2), mpq_class(1, 2)))) == Json::array({1, 3, 1}));
}

TEST_CASE("factor subcommand") {
  Result r = invoke({"factor", "--algebra", "split", kExample2});
  CHECK(r.code == kOk);
  Json j = Json::parse(r.out);
  CHECK(j["factorizations"].size() == 6);
  CHECK(j["norm"]["text"] == "t^4 - 4t^3 + t^2 + 6t");
  CHECK(j["genericity"]["verdict"] == true);

  Result csv = invoke({"factor", kExample2, "--format", "csv"});
  CHECK(csv.code == kOk);
  CHECK(count(csv.out, "\n") == 7);
  CHECK(csv.out.find("1+j,1+2k") != std::string::npos);

  Result h = invoke({"factor", "--algebra", "hamilton", kExample1});
  CHECK(Json::parse(h.out)["factorizations"].size() == 2);
}

TEST_CASE("exit codes") {
  Result ng = invoke({"factor", "t^2+1"});
  CHECK(ng.code == kNonGeneric);
  CHECK(Json::parse(ng.err)["error"]["type"] == "NonGeneric");
  CHECK(invoke({"factor", "--algebra", "hamilton", "t^2 - 2i t - 1"}).code == kNonGeneric);
  CHECK(invoke({"factor", "--format", "csv", "t^2+1"}).err.rfind("splitquat: NonGeneric", 0) == 0);

  Result bad = invoke({"factor", "t^2 + (1"});
  CHECK(bad.code == kUsage);
  CHECK(Json::parse(bad.err)["error"]["type"] == "ParseError");
  CHECK(invoke({"factor", "t^3 + 1"}).code == kUsage);
  CHECK(invoke({"factor"}).code == kUsage);
  CHECK(invoke({"frobnicate", "t"}).code == kUsage);
  CHECK(invoke({"factor", "--algebra", "octonion", kExample2}).code == kUsage);
  CHECK(invoke({"norm", "--format", "svg", kExample2}).code == kUsage);
  CHECK(invoke({"--help"}).code == kOk);
}

TEST_CASE("norm, linkage and verify subcommands") {
  Result n = invoke({"norm", kExample2});
  CHECK(n.code == kOk);
  CHECK(Json::parse(n.out)["roots"]["real"] == Json::array({"-1", "0", "2", "3"}));

  Result l = invoke({"linkage", kExample2});
  CHECK(l.code == kOk);
  Json lj = Json::parse(l.out);
  CHECK(lj["legs"].size() == 6);
  CHECK(lj["pairs"].size() == 3);
  CHECK(lj["pairs"][0]["conic"]["null_tangent_params"] == Json::array({"-1", "0", "2", "3"}));
  CHECK(lj["pairs"][0]["conic"]["focal_points"].size() == 6);

  Result v = invoke({"verify", "--algebra", "split", kExample2});
  CHECK(v.code == kOk);
  CHECK(Json::parse(v.out)["passed"] == true);
  Result vr = invoke({"verify", kExample2, "--t-range=-3:5", "--samples", "9"});
  CHECK(vr.code == kOk);
  CHECK(invoke({"verify", "--backend", "float", kExample2}).code == kOk);
  CHECK(invoke({"verify", "--algebra", "hamilton", kExample1}).code == kOk);
}

TEST_CASE("linkage svg") {
  Result r = invoke({"linkage", kExample2, "--format", "svg"});
  CHECK(r.code == kOk);
  CHECK(count(r.out, "class=\"joint fixed\"") == 6);
  CHECK(count(r.out, "class=\"joint moving\"") == 6);
  CHECK(count(r.out, "class=\"tangent\"") == 4);
  CHECK(count(r.out, "class=\"null\"") == 1);
  for (const char* id : {"A12", "A13", "A14", "A23", "A24", "A34", "B12", "B34"})
    CHECK(r.out.find(std::string("id=\"") + id + "\"") != std::string::npos);
  CHECK(r.out == invoke({"linkage", kExample2, "--format", "svg"}).out);

  Result h = invoke({"linkage", "--algebra", "hamilton", kExample1, "--format", "svg"});
  CHECK(count(h.out, "class=\"null\"") == 0);
  CHECK(count(h.out, "class=\"joint fixed\"") == 2);
}

TEST_CASE("unit circle is the null conic in the chart") {
  // A null point [1, cos a, sin a] lands on the drawn circle.
  FourBar fb = build_linkage(fixtures::example2());
  std::string svg = linkage_svg(fb, {});
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, std::regex("<circle class=\"null\" cx=\"([0-9.]+)\" cy=\"([0-9.]+)\" r=\"([0-9.]+)\"")));
  double r = std::stod(m[3]);
  CHECK(r > 0);
  CHECK(is_null(ProjPoint(qt(0, 5, 3, 4))));
}

TEST_CASE("simulate subcommand") {
  Result j = invoke({"simulate", kExample2, "--samples", "5", "--t-range=-1:3", "--tracer", "[j]"});
  CHECK(j.code == kOk);
  Json tj = Json::parse(j.out);
  CHECK(tj["rows"].size() == 5);
  CHECK(tj["rows"][0]["t"] == "-1");
  CHECK(tj["rows"][0]["null_position"] == true);

  Result csv = invoke({"simulate", kExample2, "--samples", "11", "--format", "csv", "--tracer", "0,1,0"});
  CHECK(csv.code == kOk);
  CHECK(count(csv.out, "\n") == 12);
  CHECK(csv.out.rfind("t,null_position,B34_x1", 0) == 0);

  Result svg = invoke({"simulate", kExample2, "--format", "svg"});
  CHECK(svg.code == kOk);
  CHECK(count(svg.out, "id=\"path-B") == 6);
  CHECK(invoke({"simulate", kExample2, "--samples", "1"}).code == kUsage);
}

TEST_CASE("midpoints and quad subcommands") {
  Result m = invoke({"midpoints", "[j]", "[k]"});
  CHECK(m.code == kOk);
  Json mj = Json::parse(m.out);
  REQUIRE(mj["midpoints"].size() == 2);
  CHECK(mj["midpoints"][0]["quadrance_to_a"] == "1/2");

  Result q = invoke({"quad", "[j]", "[i+3j+k]", "[4j+3k]"});
  CHECK(q.code == kOk);
  for (const auto& s : Json::parse(q.out)["solutions"]) {
    CHECK(s["q_a12_a34"] == s["q_b12_b34"]);
    CHECK(s["q_a12_b12"] == s["q_a34_b34"]);
  }
  CHECK(invoke({"midpoints", "[j]"}).code == kUsage);
}

TEST_CASE("--out writes the report to a file") {
  auto path = std::filesystem::temp_directory_path() / "splitquat_cli_test.json";
  Result r = invoke({"factor", kExample2, "--out", path.string()});
  CHECK(r.code == kOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(Json::parse(text.str())["factorizations"].size() == 6);
  std::filesystem::remove(path);
  CHECK(invoke({"factor", kExample2, "--out", "/nonexistent/dir/x.json"}).code == kUsage);
}

TEST_CASE("--tol does not leak into later invocations") {
  double before = tolerance();
  invoke({"factor", "--backend", "float", "--tol", "1e-6", kExample2});
  CHECK(tolerance() == before);
}
