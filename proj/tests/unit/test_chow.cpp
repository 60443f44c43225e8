#include "curvefol/chow.hpp"
#include "curvefol/counts.hpp"
#include "curvefol/errors.hpp"
#include "doctest.h"

using namespace curvefol;

namespace {

BlowupGeometry geom(long n, long k, long ell, long d, long g) { return BlowupGeometry{n, d, g, k, ell}; }

EMixedClass zeta(unsigned a, CurveClass beta = CurveClass::none) { return EMixedClass::monomial(a, beta); }
PtMixedClass hE(unsigned a, unsigned b, CurveClass beta = CurveClass::none) {
  return PtMixedClass::monomial(a, b, beta);
}

Rational coeff(const EMixedClass& c, unsigned a, CurveClass beta) {
  auto it = c.terms().find({a, beta});
  return it == c.terms().end() ? Rational(0) : it->second;
}

Rational coeff(const PtMixedClass& c, unsigned a, unsigned b, CurveClass beta) {
  auto it = c.terms().find({a, b, beta});
  return it == c.terms().end() ? Rational(0) : it->second;
}

}  // namespace

TEST_CASE("integration on E") {
  auto line = geom(3, 2, 1, 1, 0);
  CHECK(integrate_E(zeta(2), line) == -2);
  CHECK(integrate_E(zeta(1, CurveClass::canonical), line) == -2);
  CHECK(integrate_E(zeta(1, CurveClass::normal), line) == -2);
  CHECK(integrate_E(zeta(1, CurveClass::hyperplane), geom(3, 2, 1, 5, 0)) == -5);
  auto two_classes = zeta(0, CurveClass::normal) * zeta(0, CurveClass::canonical);
  CHECK(two_classes.is_zero());
  CHECK(integrate_E(two_classes, line) == 0);
  CHECK(integrate_E(zeta(3), geom(4, 1, 0, 2, 1)) == Rational(5 * 2 - 2 + 2));

  CHECK_THROWS_AS(integrate_E(zeta(1), line), DegreeError);
  CHECK_THROWS_AS(integrate_E(zeta(2, CurveClass::normal), line), DegreeError);
}

TEST_CASE("integration on the blowup") {
  for (long n : {3, 4, 5}) CHECK(integrate_Pt(hE(static_cast<unsigned>(n), 0), geom(n, 1, 0, 1, 0)) == 1);
  CHECK(integrate_Pt(hE(0, 3), geom(3, 1, 0, 1, 0)) == -2);
  // H E^2 pushes to (H.C) zeta on E with no sign, so it integrates to -d.
  for (long d : {1, 2, 3}) CHECK(integrate_Pt(hE(1, 2), geom(3, 1, 0, d, 0)) == -d);
  CHECK(integrate_Pt(hE(2, 1), geom(3, 1, 0, 2, 0)) == 0);
  CHECK(integrate_Pt(hE(1, 1, CurveClass::normal), geom(3, 1, 0, 2, 0)) == 0);
  CHECK(integrate_Pt(hE(0, 2, CurveClass::canonical), geom(3, 1, 0, 2, 1)) == -(2 - 2 * 1));

  for (auto [a, b] : {std::pair{2u, 0u}, {0u, 2u}, {3u, 1u}, {1u, 4u}})
    CHECK_THROWS_AS(integrate_Pt(hE(a, b), geom(3, 1, 0, 1, 0)), DegreeError);
  CHECK_THROWS_AS(PtMixedClass::monomial(1, 0, CurveClass::normal), ValidationError);
}

TEST_CASE("relation zeta^(n-1) = N zeta^(n-2) under integration") {
  for (long n : {3, 4, 5, 6})
    for (long d : {1, 3})
      for (long g : {0, 2}) {
        auto rel = zeta(static_cast<unsigned>(n - 1)) - zeta(static_cast<unsigned>(n - 2), CurveClass::normal);
        CHECK(integrate_E(rel, geom(n, 2, 1, d, g)) == 0);
        auto scaled = zeta(1) * (zeta(static_cast<unsigned>(n - 2)) - zeta(static_cast<unsigned>(n - 3), CurveClass::normal));
        CHECK(integrate_E(scaled, geom(n, 2, 1, d, g)) == 0);
      }
}

TEST_CASE("Chern classes of the blowup") {
  auto g3 = geom(3, 2, 1, 1, 0);
  CHECK(chern_blowup(0, g3) == PtMixedClass::one());
  CHECK(chern_blowup(1, g3) == hE(1, 0) * Rational(4) + hE(0, 1) * Rational(-1));
  for (long n : {3, 4, 5, 6}) {
    auto c = chern_blowup(static_cast<unsigned>(n), geom(n, 1, 0, 1, 0));
    CHECK(coeff(c, 0, static_cast<unsigned>(n), CurveClass::none) == (n % 2 == 1 ? 1 : -1));
    CHECK(coeff(c, static_cast<unsigned>(n), 0, CurveClass::none) == n + 1);
  }
  CHECK_THROWS_AS(chern_blowup(4, g3), ValidationError);
}

TEST_CASE("Chern classes of E") {
  auto g3 = geom(3, 2, 1, 1, 0);
  CHECK(chern_E(0, g3) == EMixedClass::one());
  CHECK(chern_E(1, g3) == zeta(0, CurveClass::hyperplane) * Rational(4) + zeta(1) * Rational(-2));
  for (long n : {3, 4, 5, 6, 7})
    for (long i = 0; i < n; ++i) {
      auto g = geom(n, 1, 0, 1, 0);
      auto c = chern_E(static_cast<unsigned>(i), g);
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n - 1), static_cast<unsigned long>(i));
      CHECK(coeff(c, static_cast<unsigned>(i), CurveClass::none) == Rational(i % 2 == 0 ? binom : -binom));
      CAPTURE(n);
      CAPTURE(i);
      CHECK(c == chern_E_by_restriction(static_cast<unsigned>(i), g));
    }
  CHECK_THROWS_AS(chern_E(3, g3), ValidationError);
}

TEST_CASE("Baum-Bott integrals") {
  auto g = geom(3, 2, 1, 1, 0);
  CHECK(baum_bott_E(g) == 6);
  CHECK(baum_bott_Pt(g) - baum_bott_E(g) == 3);
  // At ell = 0 the genus term (2 - 2g) still survives on E.
  CHECK(baum_bott_Pt(geom(3, 1, 0, 1, 0)) == 6);
  CHECK(baum_bott_E(geom(3, 1, 0, 1, 0)) == 2 + 2);
  CHECK_THROWS_AS(baum_bott_E(geom(3, 1, 0, 0, 0)), ValidationError);
  CHECK_THROWS_AS(baum_bott_Pt(geom(2, 1, 0, 1, 0)), ValidationError);
}

TEST_CASE("Baum-Bott integrals match the closed forms on a sample") {
  for (long n : {3, 4, 6})
    for (long k : {0, 1, 4})
      for (long ell : {0, 2})
        for (long d : {1, 3})
          for (long g : {0, 5}) {
            auto geo = geom(n, k, ell, d, g);
            CHECK(baum_bott_E(geo) == thmA_count(n, k, ell, d, g));
            CHECK(baum_bott_Pt(geo) == thmB_count(n, k, ell, d, g));
          }
}
