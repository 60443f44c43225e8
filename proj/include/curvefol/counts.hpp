#pragma once

#include <string>
#include <vector>

#include "curvefol/rational.hpp"

namespace curvefol {

/// A curve in the singular locus: degree, arithmetic genus, tangency
/// exponent of the foliation along it, and branch counts at its singular
/// points (empty when smooth).
struct CurveData {
  long d = 1;
  long g = 0;
  long ell = 0;
  std::vector<long> branches;

  /// Throws ValidationError unless d >= 1, g >= 0, ell >= 0, every b >= 1.
  void validate() const;
};

/// 1 + k + ... + k^n.
Integer baum_bott_total(long n, long k);
Integer thmA_count(long n, long k, long ell, long d, long g);
Integer thmB_count(long n, long k, long ell, long d, long g);
Integer corollary_isolated(long n, long k, long ell, long d, long g);
/// Contribution of one curve, with the genus term corrected by the branches.
Integer nu_curve(long n, long k, const CurveData& curve);

struct Theorem1Total {
  Integer total;
  std::vector<std::string> warnings;
};

/// baum_bott_total plus nu_curve over pairwise disjoint curves. A negative
/// total cannot come from a real foliation and is reported as a warning.
Theorem1Total theorem1_total(long n, long k, const std::vector<CurveData>& curves);

}  // namespace curvefol
