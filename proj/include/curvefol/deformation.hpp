#pragma once

#include <span>
#include <vector>

#include "curvefol/blowup.hpp"
#include "curvefol/groebner.hpp"
#include "curvefol/matrix.hpp"
#include "curvefol/poly.hpp"

namespace curvefol {

/// The curve f_1 = ... = f_{n-1} = 0 in z1..zn together with perturbations
/// h_i. Throws ValidationError unless both lists have n-1 entries and
/// deg h_i <= deg f_i for every nonzero h_i.
struct CompleteIntersectionData {
  PolyRing ring;
  std::vector<MultiPoly> f;
  std::vector<MultiPoly> h;

  CompleteIntersectionData(PolyRing ring, std::vector<MultiPoly> f, std::vector<MultiPoly> h);
  std::size_t dimension() const noexcept { return ring.arity(); }
  /// Same curve with every perturbation set to zero.
  CompleteIntersectionData unperturbed() const;
};

/// The model field P in target coordinates w1..wn.
struct ModelField {
  PolyRing ring;
  std::vector<MultiPoly> components;

  ModelField(PolyRing ring, std::vector<MultiPoly> components);
};

/// F_t = (f_1 + t h_1, ..., f_{n-1} + t h_{n-1}, z_n) at a rational t.
std::vector<MultiPoly> family_map(const CompleteIntersectionData& ci, const Rational& t);
/// Ring of ci with a parameter variable appended (named "t" unless taken).
PolyRing symbolic_ring(const CompleteIntersectionData& ci);
/// F_t with t as the last variable of symbolic_ring(ci).
std::vector<MultiPoly> family_map_symbolic(const CompleteIntersectionData& ci);

/// Ideal (f_i + t h_i) of the deformed curve.
Ideal curve_ideal(const CompleteIntersectionData& ci, const Rational& t);

/// Field pushed back through F_t. With M = DF_t and A_i the matrix M with
/// column i replaced by P o F_t, the field is (det A_1, ..., det A_{n-1},
/// P_n o F_t). Since the last row of M is (0, ..., 0, 1), Cramer's rule gives
/// det A_n = det M * P_n o F_t, which is kept in cramer_numerators.
struct BuiltField {
  PolyRing ring;  // the curve's ring, with t appended in symbolic mode
  std::vector<MultiPoly> components;
  PolyMatrix M;
  MultiPoly det_M;
  std::vector<MultiPoly> composed;            // P o F_t
  std::vector<MultiPoly> cramer_numerators;   // det A_1, ..., det A_n

  /// The field on z1..zn; throws ValidationError for a symbolic build.
  VectorField as_field() const;
};

BuiltField build_Ft_field(const ModelField& P, const CompleteIntersectionData& ci, const Rational& t);
BuiltField build_Ft_field_symbolic(const ModelField& P, const CompleteIntersectionData& ci);

/// M * (det A_1, ..., det A_n) == det M * (P o F_t).
bool cramer_identity_holds(const BuiltField& built);

struct SampleCheck {
  Rational t;
  bool det_M_nonzero = false;
  bool cramer_identity = false;
  bool last_component = false;
  std::vector<long> degrees;
  bool degrees_preserved = false;
  /// Component i lies in the ideal of the deformed curve.
  std::vector<bool> contained;

  bool passed() const;
};

struct FamilyReport {
  bool symbolic_cramer = false;
  bool reproduces_unperturbed = false;
  std::vector<long> base_degrees;
  /// Orders of P_i along the w_n-axis. They do not involve t at all.
  std::vector<AxisOrder> model_axis_orders;
  std::vector<SampleCheck> samples;

  bool passed() const;
};

FamilyReport verify_family_properties(const ModelField& P, const CompleteIntersectionData& ci,
                                      std::span<const Rational> samples);

}  // namespace curvefol
