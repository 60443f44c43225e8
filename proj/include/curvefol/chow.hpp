#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>

#include "curvefol/rational.hpp"

namespace curvefol {

/// Blowup of P^n along a smooth curve of degree d and genus g, with a
/// foliation of degree k and tangency exponent ell.
struct BlowupGeometry {
  long n = 3;
  long d = 1;
  long g = 0;
  long k = 1;
  long ell = 0;

  /// Throws ValidationError unless n >= 3, d >= 1, g >= 0, k >= 0, ell >= 0.
  void validate() const;
  /// (n+1)d - 2 + 2g, the degree of c_1 of the normal bundle.
  Integer normal_degree() const;
};

/// Classes pulled back from the curve. Any product of two of them is zero.
enum class CurveClass { none, normal, canonical, hyperplane };

std::string to_string(CurveClass c);

/// Formal sum of zeta^a * beta on E with beta a single curve class.
class EMixedClass {
 public:
  using Key = std::pair<unsigned, CurveClass>;

  EMixedClass() = default;
  static EMixedClass one() { return monomial(0, CurveClass::none); }
  static EMixedClass monomial(unsigned zeta_power, CurveClass beta, const Rational& coefficient = 1);

  const std::map<Key, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  EMixedClass& operator+=(const EMixedClass& other);
  friend EMixedClass operator+(EMixedClass a, const EMixedClass& b) { return a += b; }
  friend EMixedClass operator-(EMixedClass a, const EMixedClass& b) { return a += b * Rational(-1); }
  friend EMixedClass operator*(const EMixedClass& a, const EMixedClass& b);
  friend EMixedClass operator*(EMixedClass a, const Rational& s);
  EMixedClass pow(unsigned exponent) const;

  friend bool operator==(const EMixedClass&, const EMixedClass&) = default;

 private:
  void add(const Key& key, const Rational& value);
  std::map<Key, Rational> terms_;
};

/// Formal sum of H^a * E^b * beta on the blowup, where beta is none, the
/// normal class or the canonical class and needs b >= 1.
class PtMixedClass {
 public:
  using Key = std::tuple<unsigned, unsigned, CurveClass>;

  PtMixedClass() = default;
  static PtMixedClass one() { return monomial(0, 0, CurveClass::none); }
  static PtMixedClass monomial(unsigned h_power, unsigned e_power, CurveClass beta, const Rational& coefficient = 1);

  const std::map<Key, Rational>& terms() const noexcept { return terms_; }

  PtMixedClass& operator+=(const PtMixedClass& other);
  friend PtMixedClass operator+(PtMixedClass a, const PtMixedClass& b) { return a += b; }
  friend PtMixedClass operator*(const PtMixedClass& a, const PtMixedClass& b);
  friend PtMixedClass operator*(PtMixedClass a, const Rational& s);
  PtMixedClass pow(unsigned exponent) const;

  friend bool operator==(const PtMixedClass&, const PtMixedClass&) = default;

 private:
  void add(const Key& key, const Rational& value);
  std::map<Key, Rational> terms_;
};

/// Throws DegreeError unless every term has degree n-1.
Rational integrate_E(const EMixedClass& c, const BlowupGeometry& geom);
/// Throws DegreeError unless every term has degree n. Classes E^b with
/// b >= 1 are pushed to E as zeta^(b-1), and H restricts to H.C there.
Rational integrate_Pt(const PtMixedClass& c, const BlowupGeometry& geom);

/// Restriction of a class on the blowup to E (E restricts to zeta).
EMixedClass restrict_to_E(const PtMixedClass& c);

PtMixedClass chern_blowup(unsigned i, const BlowupGeometry& geom);
/// Closed expansion of c_i(E).
EMixedClass chern_E(unsigned i, const BlowupGeometry& geom);
/// c_i(E) from c(T|_E) = c(E) (1 + zeta), as an independent check of chern_E.
EMixedClass chern_E_by_restriction(unsigned i, const BlowupGeometry& geom);

/// c_1 of the dual tangent line bundle of the transformed foliation:
/// (k-1) H - ell E.
PtMixedClass cotangent_class(const BlowupGeometry& geom);

/// Baum-Bott sums: on E via c_{n-1}(T_E (x) L*), on the blowup via
/// c_n(T (x) L*). Throws Error if the exact total is not an integer.
Integer baum_bott_E(const BlowupGeometry& geom);
Integer baum_bott_Pt(const BlowupGeometry& geom);

}  // namespace curvefol
