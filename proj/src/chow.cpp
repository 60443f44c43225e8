#include "curvefol/chow.hpp"

#include <optional>

#include "curvefol/errors.hpp"

namespace curvefol {

namespace {

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer sign(long e) { return e % 2 == 0 ? 1 : -1; }

CurveClass combine(CurveClass a, CurveClass b, bool& zero) {
  zero = a != CurveClass::none && b != CurveClass::none;
  return a != CurveClass::none ? a : b;
}

Integer as_integer(const Rational& r, const char* what) {
  if (r.get_den() != 1) throw Error(std::string(what) + " is not an integer: " + r.get_str());
  return r.get_num();
}

}  // namespace

void BlowupGeometry::validate() const {
  if (n < 3) throw ValidationError("blowup geometry needs n >= 3");
  if (d < 1) throw ValidationError("curve degree must be at least 1");
  if (g < 0 || k < 0 || ell < 0) throw ValidationError("g, k and ell must be non-negative");
}

Integer BlowupGeometry::normal_degree() const { return Integer(n + 1) * d - 2 + 2 * Integer(g); }

std::string to_string(CurveClass c) {
  switch (c) {
    case CurveClass::none:
      return "1";
    case CurveClass::normal:
      return "N";
    case CurveClass::canonical:
      return "K";
    case CurveClass::hyperplane:
      return "L";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// EMixedClass

EMixedClass EMixedClass::monomial(unsigned zeta_power, CurveClass beta, const Rational& coefficient) {
  EMixedClass c;
  c.add({zeta_power, beta}, coefficient);
  return c;
}

void EMixedClass::add(const Key& key, const Rational& value) {
  if (value == 0) return;
  auto [it, inserted] = terms_.emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

EMixedClass& EMixedClass::operator+=(const EMixedClass& other) {
  for (const auto& [k, v] : other.terms_) add(k, v);
  return *this;
}

EMixedClass operator*(const EMixedClass& a, const EMixedClass& b) {
  EMixedClass out;
  for (const auto& [ka, va] : a.terms_)
    for (const auto& [kb, vb] : b.terms_) {
      bool zero = false;
      CurveClass beta = combine(ka.second, kb.second, zero);
      if (!zero) out.add({ka.first + kb.first, beta}, va * vb);
    }
  return out;
}

EMixedClass operator*(EMixedClass a, const Rational& s) {
  EMixedClass out;
  for (const auto& [k, v] : a.terms_) out.add(k, v * s);
  return out;
}

EMixedClass EMixedClass::pow(unsigned exponent) const {
  EMixedClass out = one();
  for (unsigned i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

// ---------------------------------------------------------------------------
// PtMixedClass

PtMixedClass PtMixedClass::monomial(unsigned h_power, unsigned e_power, CurveClass beta,
                                    const Rational& coefficient) {
  if (beta == CurveClass::hyperplane) throw ValidationError("H.C is written as H*E on the blowup");
  if (beta != CurveClass::none && e_power == 0) throw ValidationError("curve classes need a factor of E");
  PtMixedClass c;
  c.add({h_power, e_power, beta}, coefficient);
  return c;
}

void PtMixedClass::add(const Key& key, const Rational& value) {
  if (value == 0) return;
  auto [it, inserted] = terms_.emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

PtMixedClass& PtMixedClass::operator+=(const PtMixedClass& other) {
  for (const auto& [k, v] : other.terms_) add(k, v);
  return *this;
}

PtMixedClass operator*(const PtMixedClass& a, const PtMixedClass& b) {
  PtMixedClass out;
  for (const auto& [ka, va] : a.terms_)
    for (const auto& [kb, vb] : b.terms_) {
      bool zero = false;
      CurveClass beta = combine(std::get<2>(ka), std::get<2>(kb), zero);
      if (!zero) out.add({std::get<0>(ka) + std::get<0>(kb), std::get<1>(ka) + std::get<1>(kb), beta}, va * vb);
    }
  return out;
}

PtMixedClass operator*(PtMixedClass a, const Rational& s) {
  PtMixedClass out;
  for (const auto& [k, v] : a.terms_) out.add(k, v * s);
  return out;
}

PtMixedClass PtMixedClass::pow(unsigned exponent) const {
  PtMixedClass out = one();
  for (unsigned i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

// ---------------------------------------------------------------------------
// Integration

namespace {

Integer curve_degree(CurveClass beta, const BlowupGeometry& geom) {
  switch (beta) {
    case CurveClass::normal:
      return geom.normal_degree();
    case CurveClass::canonical:
      return 2 - 2 * Integer(geom.g);
    case CurveClass::hyperplane:
      return geom.d;
    case CurveClass::none:
      break;
  }
  return 0;
}

// H^a E^b beta with b >= 1 as zeta^(b-1) * (H.C)^a * beta on E; nullopt
// when the class vanishes because two curve classes meet.
std::optional<EMixedClass::Key> push_to_E(unsigned a, unsigned b, CurveClass beta) {
  if (a >= 2) return std::nullopt;
  if (a == 1) {
    if (beta != CurveClass::none) return std::nullopt;
    beta = CurveClass::hyperplane;
  }
  return EMixedClass::Key{b - 1, beta};
}

}  // namespace

Rational integrate_E(const EMixedClass& c, const BlowupGeometry& geom) {
  geom.validate();
  const auto top = static_cast<unsigned>(geom.n - 1);
  Rational total = 0;
  for (const auto& [key, coeff] : c.terms()) {
    const auto [a, beta] = key;
    const unsigned degree = a + (beta == CurveClass::none ? 0 : 1);
    if (degree != top)
      throw DegreeError("E-class term of degree " + std::to_string(degree) + " integrated on E of dimension " +
                        std::to_string(top));
    Integer value = beta == CurveClass::none ? geom.normal_degree() : curve_degree(beta, geom);
    total += coeff * Rational(sign(geom.n) * value);
  }
  return total;
}

Rational integrate_Pt(const PtMixedClass& c, const BlowupGeometry& geom) {
  geom.validate();
  const auto top = static_cast<unsigned>(geom.n);
  Rational total = 0;
  for (const auto& [key, coeff] : c.terms()) {
    const auto [a, b, beta] = key;
    const unsigned degree = a + b + (beta == CurveClass::none ? 0 : 1);
    if (degree != top)
      throw DegreeError("class term of degree " + std::to_string(degree) + " integrated on a variety of dimension " +
                        std::to_string(top));
    if (b == 0) {
      total += coeff;  // H^n is the class of a point
      continue;
    }
    if (auto k = push_to_E(a, b, beta)) total += coeff * integrate_E(EMixedClass::monomial(k->first, k->second), geom);
  }
  return total;
}

EMixedClass restrict_to_E(const PtMixedClass& c) {
  EMixedClass out;
  for (const auto& [key, coeff] : c.terms()) {
    const auto [a, b, beta] = key;
    if (b == 0) {
      if (a == 0) out += EMixedClass::monomial(0, CurveClass::none, coeff);
      if (a == 1) out += EMixedClass::monomial(0, CurveClass::hyperplane, coeff);
      continue;
    }
    // E^b restricts to zeta^b.
    if (auto k = push_to_E(a, b, beta)) out += EMixedClass::monomial(k->first + 1, k->second, coeff);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chern classes

PtMixedClass chern_blowup(unsigned i, const BlowupGeometry& geom) {
  geom.validate();
  const long n = geom.n;
  const long li = static_cast<long>(i);
  if (li > n) throw ValidationError("Chern class index out of range");
  if (i == 0) return PtMixedClass::one();
  if (i == 1)
    return PtMixedClass::monomial(1, 0, CurveClass::none, Rational(n + 1)) +
           PtMixedClass::monomial(0, 1, CurveClass::none, Rational(-(n - 2)));
  PtMixedClass c = PtMixedClass::monomial(i, 0, CurveClass::none, Rational(binomial(n + 1, li)));
  c += PtMixedClass::monomial(0, i, CurveClass::none,
                              Rational(sign(li - 1) * (binomial(n - 1, li - 1) - binomial(n - 1, li))));
  c += PtMixedClass::monomial(0, i - 1, CurveClass::normal,
                              Rational(sign(li - 2) * (binomial(n - 2, li - 2) - binomial(n - 2, li - 1))));
  c += PtMixedClass::monomial(0, i - 1, CurveClass::canonical,
                              Rational(sign(li - 2) * (binomial(n - 1, li - 2) - binomial(n - 1, li - 1))));
  return c;
}

EMixedClass chern_E(unsigned i, const BlowupGeometry& geom) {
  geom.validate();
  const long n = geom.n;
  const long li = static_cast<long>(i);
  if (li > n - 1) throw ValidationError("Chern class index out of range");
  if (i == 0) return EMixedClass::one();
  // Only the linear pieces of the pulled-back classes survive on E: the
  // H.C term of c_1(P^n), the normal class at j = 1 and the canonical class
  // at j = 0.
  EMixedClass c = EMixedClass::monomial(i - 1, CurveClass::hyperplane, Rational(sign(li - 1) * Integer(n + 1)));
  c += EMixedClass::monomial(i, CurveClass::none, Rational(sign(li) * binomial(n - 1, li)));
  c += EMixedClass::monomial(i - 1, CurveClass::normal, Rational(sign(li - 2) * (1 - binomial(n - 2, li - 1))));
  c += EMixedClass::monomial(i - 1, CurveClass::canonical, Rational(sign(li) * (1 - binomial(n - 1, li - 1))));
  return c;
}

EMixedClass chern_E_by_restriction(unsigned i, const BlowupGeometry& geom) {
  geom.validate();
  if (static_cast<long>(i) > geom.n - 1) throw ValidationError("Chern class index out of range");
  EMixedClass c;
  for (unsigned j = 0; j <= i; ++j)
    c += restrict_to_E(chern_blowup(i - j, geom)) *
         EMixedClass::monomial(j, CurveClass::none, Rational(sign(static_cast<long>(j))));
  return c;
}

PtMixedClass cotangent_class(const BlowupGeometry& geom) {
  return PtMixedClass::monomial(1, 0, CurveClass::none, Rational(geom.k - 1)) +
         PtMixedClass::monomial(0, 1, CurveClass::none, Rational(-geom.ell));
}

Integer baum_bott_E(const BlowupGeometry& geom) {
  geom.validate();
  EMixedClass cot = restrict_to_E(cotangent_class(geom));
  Rational total = 0;
  for (long i = 0; i <= geom.n - 1; ++i)
    total += integrate_E(chern_E(static_cast<unsigned>(i), geom) * cot.pow(static_cast<unsigned>(geom.n - 1 - i)), geom);
  return as_integer(total, "Baum-Bott sum on E");
}

Integer baum_bott_Pt(const BlowupGeometry& geom) {
  geom.validate();
  PtMixedClass cot = cotangent_class(geom);
  Rational total = 0;
  for (long i = 0; i <= geom.n; ++i)
    total += integrate_Pt(chern_blowup(static_cast<unsigned>(i), geom) * cot.pow(static_cast<unsigned>(geom.n - i)),
                          geom);
  return as_integer(total, "Baum-Bott sum on the blowup");
}

}  // namespace curvefol
