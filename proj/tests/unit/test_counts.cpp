#include "curvefol/counts.hpp"
#include "curvefol/errors.hpp"
#include "doctest.h"

using namespace curvefol;

TEST_CASE("baum_bott_total") {
  CHECK(baum_bott_total(3, 2) == 15);
  CHECK(baum_bott_total(3, 0) == 1);
  CHECK(baum_bott_total(7, 0) == 1);
  CHECK(baum_bott_total(3, 1) == 4);
  CHECK_THROWS_AS(baum_bott_total(2, 1), ValidationError);
}

TEST_CASE("thmA_count") {
  CHECK(thmA_count(3, 2, 1, 1, 0) == 6);
  CHECK(thmA_count(3, 3, 2, 1, 0) == 8);
  CHECK(thmA_count(4, 2, 1, 1, 0) == 14);
  // The special family on a line: 2 * sum_{i=0}^{n-2} k^i.
  for (long n = 3; n <= 6; ++n)
    for (long k = 2; k <= 5; ++k) {
      Integer expected = 0, term = 1;
      for (long i = 0; i <= n - 2; ++i, term *= k) expected += 2 * term;
      CHECK(thmA_count(n, k, k - 1, 1, 0) == expected);
    }
}

TEST_CASE("thmB_count") {
  CHECK(thmB_count(3, 2, 1, 1, 0) == 9);
  CHECK(thmB_count(3, 1, 0, 1, 0) == 6);
  CHECK(thmA_count(3, 1, 0, 1, 0) == 4);
}

TEST_CASE("corollary counts") {
  CHECK(corollary_isolated(3, 2, 1, 1, 0) == 3);
  CHECK(corollary_isolated(3, 3, 2, 1, 0) == 4);
  CHECK(corollary_isolated(4, 2, 1, 1, 0) == 7);
}

TEST_CASE("thmB = thmA + corollary on the grid") {
  for (long n = 3; n <= 5; ++n)
    for (long k = 1; k <= 5; ++k)
      for (long ell = 0; ell <= 3; ++ell)
        for (long d = 1; d <= 4; ++d)
          for (long g = 0; g <= 3; ++g)
            CHECK(thmB_count(n, k, ell, d, g) == thmA_count(n, k, ell, d, g) + corollary_isolated(n, k, ell, d, g));
}

TEST_CASE("nu_curve and branch corrections") {
  for (long ell = 0; ell <= 3; ++ell) {
    CurveData smooth{2, 1, ell, {}};
    CHECK(nu_curve(4, 3, smooth) == corollary_isolated(4, 3, ell, 2, 1) - baum_bott_total(4, 3));
    CurveData node{2, 1, ell, {2}};
    Integer l1 = ell + 1;
    CHECK(nu_curve(4, 3, smooth) - nu_curve(4, 3, node) == Integer(ell * ell + ell + 1) * l1 * l1);
    CurveData cusp{2, 1, ell, {1}};
    CHECK(nu_curve(4, 3, cusp) == nu_curve(4, 3, smooth));
  }
  CHECK_THROWS_AS(nu_curve(3, 2, CurveData{1, 0, 1, {0}}), ValidationError);
}

TEST_CASE("theorem1_total") {
  CurveData line{1, 0, 1, {}};
  auto single = theorem1_total(3, 2, {line});
  CHECK(single.total == corollary_isolated(3, 2, 1, 1, 0));
  CHECK(single.warnings.empty());
  CHECK(theorem1_total(3, 2, {}).total == 15);
  auto twice = theorem1_total(3, 2, {line, line});
  CHECK(twice.total == -9);
  CHECK(twice.warnings.size() == 1);
}

TEST_CASE("large inputs stay exact") {
  CHECK(baum_bott_total(40, 9).get_str() == "166284933091139163730593611482181209801");
  CHECK(thmA_count(30, 7, 20, 9, 4) == thmB_count(30, 7, 20, 9, 4) - corollary_isolated(30, 7, 20, 9, 4));
}
