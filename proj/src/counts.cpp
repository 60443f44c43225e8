#include "curvefol/counts.hpp"

#include "curvefol/errors.hpp"

namespace curvefol {

namespace {

void check_range(long n, long k) {
  if (n < 3) throw ValidationError("the counting formulas need n >= 3");
  if (k < 0) throw ValidationError("foliation degree must be non-negative");
}

void check_curve(long ell, long d, long g) {
  if (d < 1) throw ValidationError("curve degree must be at least 1");
  if (g < 0 || ell < 0) throw ValidationError("g and ell must be non-negative");
}

Integer power(const Integer& base, long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

// sum_{i=0}^{top} base^i, zero when top < 0.
Integer geometric(const Integer& base, long top) {
  Integer sum = 0, term = 1;
  for (long i = 0; i <= top; ++i, term *= base) sum += term;
  return sum;
}

}  // namespace

void CurveData::validate() const {
  check_curve(ell, d, g);
  for (long b : branches)
    if (b < 1) throw ValidationError("branch counts must be at least 1");
}

Integer baum_bott_total(long n, long k) {
  check_range(n, k);
  return geometric(k, n);
}

Integer thmA_count(long n, long k, long ell, long d, long g) {
  check_range(n, k);
  check_curve(ell, d, g);
  const Integer l1 = ell + 1, two_g = 2 - 2 * Integer(g);
  return two_g * geometric(l1, n - 3) +
         power(l1, n - 2) * (two_g * l1 - Integer(n + 1) * d * ell + Integer(k - 1) * d * (n - 1));
}

Integer thmB_count(long n, long k, long ell, long d, long g) {
  check_range(n, k);
  check_curve(ell, d, g);
  const Integer l = ell, l1 = ell + 1, two_g = 2 - 2 * Integer(g);
  return geometric(k, n) + two_g * geometric(l1, n - 3) +
         power(l1, n - 2) *
             (Integer(n + 1) * d * (l * l - l) - two_g * l * l - Integer(k - 1) * d * (Integer(n) * l - n + 2));
}

Integer corollary_isolated(long n, long k, long ell, long d, long g) {
  check_range(n, k);
  check_curve(ell, d, g);
  return geometric(k, n) + nu_curve(n, k, CurveData{d, g, ell, {}});
}

Integer nu_curve(long n, long k, const CurveData& curve) {
  check_range(n, k);
  curve.validate();
  const Integer l = curve.ell;
  Integer genus_term = 2 * Integer(curve.g) - 2;
  for (long b : curve.branches) genus_term -= b - 1;
  return power(l + 1, n - 2) * (genus_term * (l * l + l + 1) + Integer(n + 1) * curve.d * l * l -
                                Integer(k - 1) * curve.d * (Integer(n) * l + 1));
}

Theorem1Total theorem1_total(long n, long k, const std::vector<CurveData>& curves) {
  Theorem1Total out{baum_bott_total(n, k), {}};
  for (const auto& c : curves) out.total += nu_curve(n, k, c);
  if (out.total < 0)
    out.warnings.push_back("negative total " + out.total.get_str() +
                           ": no foliation has this singular data, check the curve parameters");
  return out;
}

}  // namespace curvefol
