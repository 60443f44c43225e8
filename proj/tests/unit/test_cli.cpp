#include "cli/commands.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace curvefol;
using namespace curvefol::cli;

namespace {

std::string special_spec(std::size_t n, unsigned k) {
  auto f = fixtures::special_family(n, k);
  std::string text = "dimension: " + std::to_string(n) + "\ndegree: " + std::to_string(k) + "\nvariables: [";
  for (std::size_t i = 0; i < n; ++i) text += (i ? ", " : "") + f.ring().name(i);
  text += "]\ncomponents:\n";
  for (const auto& c : f.components()) text += "  - \"" + c.to_string() + "\"\n";
  text += "curve:\n  normal: [";
  for (std::size_t i = 0; i + 1 < n; ++i) text += (i ? ", " : "") + f.ring().name(i);
  text += "]\n  axis: " + f.ring().name(n - 1) + "\n";
  return text;
}

int error_line(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const SpecError& e) {
    return e.line();
  }
  return -1;
}

int build_error_line(const std::string& text) {
  try {
    build_foliation(parse_spec(text));
  } catch (const SpecError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("spec errors carry line numbers") {
  CHECK(error_line("dimension: 3\ndegre: 2\n") == 2);
  CHECK(error_line("dimension: 3\nvariables: [a, b]\n") == 2);
  CHECK(error_line("variables: [a, b]\ncomponents: [\"a\"]\n") == 2);
  CHECK(error_line("curves:\n  - {d: 1, g: 0}\n") == 2);
  CHECK(error_line("curves:\n  - {d: 0, g: 0, ell: 1}\n") == 2);
  CHECK(error_line("degree: two\n") == 1);
  CHECK(error_line("variables: [a, 2b]\n") == 1);
  CHECK(error_line("dimension: [3\n") > 0);
  CHECK(build_error_line("degree: 1\nvariables: [a, b]\ncomponents:\n  - \"a\"\n  - \"b + q\"\n") == 5);
  CHECK(build_error_line("degree: 0\nvariables: [a, b]\ncomponents:\n  - \"a\"\n  - \"2*b\"\n") == 4);
}

TEST_CASE("spec parsing") {
  auto spec = parse_spec(
      "dimension: 3\ndegree: 2\ncurves:\n  - {d: 2, g: 1, ell: 0, branches: [2, 3]}\n"
      "deformation:\n  model_variables: [w1, w2, w3]\n  P: [w1, w2, w3]\n  f: [z1, z2]\n  h: [\"0\", \"1\"]\n"
      "  t_samples: [\"1/2\", 3]\n");
  CHECK(require_dimension(spec) == 3);
  CHECK(require_degree(spec) == 2);
  REQUIRE(spec.curves.size() == 1);
  CHECK(spec.curves[0].branches == std::vector<long>{2, 3});
  REQUIRE(spec.deformation);
  CHECK(spec.deformation->t_samples == std::vector<Rational>{Rational(1, 2), Rational(3)});
  CHECK(parse_spec("").curves.empty());
}

TEST_CASE("ranges") {
  CHECK(parse_range("3") == std::vector<long>{3});
  CHECK(parse_range("1..4") == std::vector<long>{1, 2, 3, 4});
  CHECK(parse_range("0,2,7") == std::vector<long>{0, 2, 7});
  CHECK_THROWS_AS(parse_range("4..1"), ValidationError);
  CHECK_THROWS_AS(parse_range("1,,2"), ValidationError);
  CHECK_THROWS_AS(parse_range(""), ValidationError);
}

TEST_CASE("json helpers") {
  CHECK(integer_json(Integer(42)) == Json(42));
  CHECK(integer_json(Integer("123456789012345678901234567890")) == Json("123456789012345678901234567890"));
  CHECK(rational_json(parse_rational("-3/6")) == Json("-1/2"));
  CHECK(order_json(AxisOrder::infinity()) == Json("inf"));
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("formulas report") {
  auto r = cmd_formulas(parse_spec("dimension: 3\ndegree: 2\ncurves:\n  - {d: 1, g: 0, ell: 1}\n"));
  CHECK(r.results["curves"][0]["corollary_isolated"] == 3);
  CHECK(r.results["theorem1_total"] == 3);
  CHECK(render_json(r).find("\"corollary_isolated\": 3") != std::string::npos);
  auto twice = cmd_formulas(parse_spec("dimension: 3\ndegree: 2\ncurves:\n  - {d: 1, g: 0, ell: 1}\n  - {d: 1, g: 0, ell: 1}\n"));
  CHECK(twice.results["theorem1_total"] == -9);
  CHECK(twice.warnings.size() == 1);
  CHECK(twice.exit_code == kSuccess);
}

TEST_CASE("analyze and count on the special family") {
  for (unsigned k : {2u, 3u}) {
    auto spec = parse_spec(special_spec(3, k));
    auto a = cmd_analyze(spec);
    CHECK(a.results["special"] == true);
    CHECK(a.results["ell"] == k - 1);
    auto c = cmd_count(spec);
    CHECK(c.results["milnor"]["total"] == k + 1);
    CHECK(c.results["exceptional"]["total"] == 2 * (k + 1));
    CHECK(c.results["exceptional"]["scope"] == "projective");
  }
}

TEST_CASE("blowup report") {
  auto spec = parse_spec(special_spec(3, 2));
  auto r = cmd_blowup(spec, 1);
  CHECK(r.results["pullback_identity"] == true);
  CHECK(r.results["exceptional"] == "u1");
  CHECK(r.results["divided_power"] == 1);
  CHECK_THROWS_AS(cmd_blowup(spec, 0), ValidationError);
  CHECK_THROWS_AS(cmd_blowup(spec, 3), ValidationError);
}

TEST_CASE("chow-verify on the default grid") {
  auto r = cmd_chow_verify(GridRanges{}, std::nullopt);
  CHECK(r.results["points"] == 960);
  CHECK(r.results["mismatches"] == 0);
  CHECK(r.exit_code == kSuccess);
  CHECK(r.digest == sha256_hex(r.options.dump()));
}

TEST_CASE("deform report and exit code") {
  const std::string base = "variables: [z1, z2, z3]\ndeformation:\n  model_variables: [w1, w2, w3]\n";
  auto good = cmd_deform(parse_spec(base +
                                    "  P: [\"w1^2 + w2^2\", \"w1*w2\", \"w1*(1 + w3) + w2*(2 - w3)\"]\n"
                                    "  f: [z1, z2]\n  h: [z3, \"1\"]\n"));
  CHECK(good.results["passed"] == true);
  CHECK(good.results["samples"].size() == 3);
  CHECK(good.exit_code == kSuccess);
  auto bad = cmd_deform(parse_spec(base + "  P: [w1, w2, w3]\n  f: [z1, z2]\n  h: [\"0\", \"0\"]\n"));
  CHECK(bad.results["passed"] == false);
  CHECK(bad.exit_code == kMismatch);
  CHECK_THROWS_AS(cmd_deform(parse_spec(base + "  P: [w1, w2, w3]\n  f: [z1, z2]\n  h: [\"z3^2\", \"0\"]\n")),
                  SpecError);
}

TEST_CASE("reports are deterministic") {
  auto spec = parse_spec(special_spec(3, 2));
  CHECK(render_json(cmd_count(spec)) == render_json(cmd_count(spec)));
  CHECK(render_text(cmd_analyze(spec)) == render_text(cmd_analyze(spec)));
  CHECK(cmd_analyze(spec).digest == sha256_hex(special_spec(3, 2)));
}

TEST_CASE("count after a coordinate change fixing the curve") {
  auto spec = parse_spec(special_spec(3, 2) + "  coordinate_change: [\"z1 + z2\", \"z2\", \"z3 + z1\"]\n");
  auto a = cmd_analyze(spec);
  CHECK(a.results["coordinate_change"] == true);
  CHECK(a.results["special"] == true);
  auto c = cmd_count(spec);
  CHECK(c.results["milnor"]["total"] == 3);
  CHECK(c.results["exceptional"]["scope"] == "affine");
  CHECK(c.results["exceptional"]["total"] == 3);
  CHECK(c.warnings.size() == 1);
  auto bad = parse_spec(special_spec(3, 2) + "  coordinate_change: [\"z1*z2\", \"z2\", \"z3\"]\n");
  CHECK_THROWS_AS(cmd_analyze(bad), SpecError);
}
