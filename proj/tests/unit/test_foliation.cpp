#include "curvefol/foliation.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace curvefol;

namespace {

AffineFoliation field(std::vector<std::string> comps, unsigned k) {
  return parse_foliation({"z1", "z2", "z3"}, comps, k);
}

std::vector<std::string> texts(const AffineFoliation& f) {
  std::vector<std::string> out;
  for (const auto& c : f.components()) out.push_back(c.to_string());
  return out;
}

}  // namespace

TEST_CASE("degree validator") {
  CHECK_NOTHROW(field({"z1", "z2", "z3"}, 1));
  CHECK_NOTHROW(field({"1 + z1^2", "z1*z2", "z1*z3"}, 1));  // top layer z1 * radial
  CHECK_THROWS_AS(field({"z1^3", "0", "0"}, 1), ValidationError);
  CHECK_THROWS_AS(field({"z1^2", "0", "0"}, 1), ValidationError);  // not radial
  CHECK_THROWS_AS(field({"0", "0", "0"}, 1), ValidationError);
  CHECK_THROWS_AS(parse_foliation({"z1", "z2", "z3"}, {"z1", "z2"}, 1), ValidationError);
  auto f = field({"1 + z1^2", "z1*z2", "z1*z3"}, 1);
  CHECK(f.radial_factor().to_string() == "z1");
}

TEST_CASE("sing_ideal_chart") {
  CHECK(colength(sing_ideal_chart(field({"z1", "z2", "z3"}, 1))) == 1);
  CHECK(colength(sing_ideal_chart(field({"z1^2", "z2^2", "z3^2"}, 2))) == 8);

  auto f = fixtures::special_family(3, 2);
  auto ideal = sing_ideal_chart(f);
  PolyRing r = f.ring();
  auto axis = buchberger(Ideal(r, {MultiPoly::variable(r, "z1"), MultiPoly::variable(r, "z2")}),
                         MonomialOrder::degrevlex(r));
  // Every generator vanishes on the z3-axis.
  CHECK(contains(axis, ideal));
}

TEST_CASE("chart transitions") {
  ProjectiveFoliation radial(field({"z1", "z2", "z3"}, 1));
  auto c1 = radial.chart(1);
  CHECK(c1.ring().names() == std::vector<std::string>{"x0", "x2", "x3"});
  CHECK(texts(c1) == std::vector<std::string>{"-x0", "0", "0"});
  CHECK(c1.degree() == 1);

  ProjectiveFoliation constant(field({"1", "0", "0"}, 0));
  auto k1 = constant.chart(1);
  CHECK(texts(k1) == std::vector<std::string>{"-x0", "-x2", "-x3"});
  for (const auto& c : k1.components()) CHECK(c.total_degree() <= 2);
  CHECK(k1.radial_factor().to_string() == "-1");

  auto f = fixtures::special_family(3, 2);
  ProjectiveFoliation pf(f);
  CHECK(texts(pf.chart(0)) == texts(f));
  CHECK_THROWS_AS(pf.chart(4), ValidationError);
}

TEST_CASE("homogeneous model restricts back to chart 0") {
  auto f = field({"1 + z2 + z1*(z1 - z3)", "z3 + z2*(z1 - z3)", "z1 - z2 + z3*(z1 - z3)"}, 1);
  ProjectiveFoliation pf(f);
  auto F = pf.homogeneous_field();
  for (const auto& c : F) CHECK(c.total_degree() <= 1);
  // chart 0 component i is F_i - x_i F_0 at x0 = 1, renamed.
  for (std::size_t i = 0; i < 3; ++i) {
    auto g = pf.dehomogenize(F[i + 1] - MultiPoly::variable(pf.homogeneous_ring(), i + 1) * F[0], 0);
    CHECK(g == f.component(i));
  }
}

TEST_CASE("homogenize") {
  auto f = parse_foliation({"a", "b"}, {"1", "2"}, 0);
  ProjectiveFoliation pf(f);
  const auto& R = pf.homogeneous_ring();
  CHECK(pf.homogenize(parse_poly("a^2 - 3*b + 2", f.ring())) == parse_poly("x1^2 - 3*x0*x2 + 2*x0^2", R));
  CHECK(pf.homogenize(parse_poly("0", f.ring())).is_zero());
  for (const char* text : {"a*b - b^3 + 7", "a", "5", "a^4 + a*b^2"}) {
    auto p = parse_poly(text, f.ring());
    CHECK(pf.dehomogenize(pf.homogenize(p), 0) == p);
  }
  CHECK_THROWS_AS(pf.homogenize(parse_poly("x1", R)), RingMismatch);
}

TEST_CASE("chart fields agree on overlaps") {
  // Homogenizing the chart-c field to degree k+1 must give
  // x_c F_i - x_i F_c, the homogeneous field in chart-c coordinates.
  auto f = field({"2 + z2 + z1*(z3 - z1)", "z3 + 5 + z2*(z3 - z1)", "z1 - 3*z2 + z3*(z3 - z1)"}, 1);
  ProjectiveFoliation pf(f);
  for (std::size_t c = 1; c <= 3; ++c) {
    auto g = pf.chart(c);
    const PolyRing& h = pf.homogeneous_ring();
    std::vector<MultiPoly> lift;
    for (std::size_t i = 0; i <= 3; ++i)
      if (i != c) lift.push_back(MultiPoly::variable(h, i));
    MultiPoly xc = MultiPoly::variable(h, c);
    const unsigned k = pf.degree();
    std::size_t slot = 0;
    for (std::size_t i = 0; i <= 3; ++i) {
      if (i == c) continue;
      MultiPoly hom(h);
      for (unsigned j = 0; j <= k + 1; ++j) {
        MultiPoly layer = g.component(slot).homogeneous_part(j);
        if (!layer.is_zero()) hom += xc.pow(k + 1 - j) * substitute(layer, lift);
      }
      auto F = pf.homogeneous_field();
      CHECK(hom == F[i] * xc - MultiPoly::variable(h, i) * F[c]);
      ++slot;
    }
  }
}

TEST_CASE("total_isolated_milnor on fields without curves") {
  ProjectiveFoliation constant(field({"1", "0", "0"}, 0));
  auto single = total_isolated_milnor(constant, {});
  CHECK(single.total == 1);

  // Generic linear field: 1 + 1 + 1 + 1 points, all in chart 0.
  ProjectiveFoliation linear(field({"1 + 2*z1 - z2 + 3*z3 + z1*(z1 - 2*z2 + z3)",
                                    "-2 + z1 + 4*z2 - z3 + z2*(z1 - 2*z2 + z3)",
                                    "3 - z1 + z2 + 2*z3 + z3*(z1 - 2*z2 + z3)"},
                                   1));
  auto four = total_isolated_milnor(linear, {});
  CHECK(four.total == 4);
  CHECK(four.charts[0].new_length == 4);

  // Without a radial part the same linear field also has points at infinity.
  ProjectiveFoliation affine_linear(field({"1 + 2*z1 - z2 + 3*z3", "-2 + z1 + 4*z2 - z3", "3 - z1 + z2 + 2*z3"}, 1));
  auto spread = total_isolated_milnor(affine_linear, {});
  CHECK(spread.total == 4);
  CHECK(spread.charts[0].new_length == 1);

  ProjectiveFoliation quadratic(field({"1 + z1 - 2*z2*z3 + 3*z1^2 - z3^2", "z2 - 2 + z1*z3 - z2^2 + 2*z1",
                                       "z3 + z1*z2 - 3*z3^2 + 1 - z1"},
                                      2));
  CHECK(total_isolated_milnor(quadratic, {}).total == 15);
}

TEST_CASE("total_isolated_milnor on the special family") {
  for (auto [k, expected] : {std::pair{2u, 3u}, std::pair{3u, 4u}}) {
    ProjectiveFoliation pf(fixtures::special_family(3, k));
    Ideal line = fixtures::axis_line(pf);
    CAPTURE(k);
    CHECK(total_isolated_milnor(pf, std::vector<Ideal>{line}).total == expected);
  }
}

TEST_CASE("total_isolated_milnor invariances and errors") {
  ProjectiveFoliation pf(fixtures::special_family(3, 2));
  const PolyRing& h = pf.homogeneous_ring();
  auto x = [&](std::size_t i) { return MultiPoly::variable(h, i); };
  Ideal line(h, {x(1), x(2)});
  Ideal fat(h, {x(1) * x(1), x(1) * x(2), x(2) * x(2)});
  Ideal other(h, {x(1), x(2) * x(2)});
  CHECK(total_isolated_milnor(pf, std::vector<Ideal>{fat}).total == 3);
  CHECK(total_isolated_milnor(pf, std::vector<Ideal>{line, other}).total ==
        total_isolated_milnor(pf, std::vector<Ideal>{other, line}).total);

  // Forgetting the curve leaves a positive-dimensional residue.
  try {
    total_isolated_milnor(pf, {});
    FAIL("expected a dimension error");
  } catch (const DimensionError& e) {
    CHECK(std::string(e.what()).find("chart 0") != std::string::npos);
  }
}
