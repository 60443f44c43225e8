#include "curvefol/deformation.hpp"

#include <algorithm>
#include <numeric>

#include "curvefol/errors.hpp"

namespace curvefol {

namespace {

void require_ring(const std::vector<MultiPoly>& ps, const PolyRing& ring, const char* what) {
  for (const auto& p : ps)
    if (!(p.ring() == ring)) throw RingMismatch(std::string(what) + " must live in the curve's ring");
}

// F with the parameter already turned into the polynomial `t` of ring S.
std::vector<MultiPoly> family_in(const CompleteIntersectionData& ci, const PolyRing& S, const MultiPoly& t) {
  std::vector<MultiPoly> out;
  const auto n = ci.dimension();
  for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(embed(ci.f[i], S) + t * embed(ci.h[i], S));
  out.push_back(MultiPoly::variable(S, n - 1));
  return out;
}

BuiltField build(const ModelField& P, const std::vector<MultiPoly>& F, std::size_t n) {
  const PolyRing& S = F.front().ring();
  if (P.components.size() != n) throw ValidationError("model field arity does not match the curve's dimension");
  PolyMatrix M(S, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t v = 0; v < n; ++v) M.at(i, v) = derivative(F[i], v);

  std::vector<MultiPoly> composed;
  for (const auto& p : P.components) composed.push_back(substitute(p, F));

  std::vector<MultiPoly> numerators;
  for (std::size_t i = 0; i < n; ++i) numerators.push_back(determinant(M.with_column(i, composed)));

  std::vector<MultiPoly> comps(numerators.begin(), numerators.end() - 1);
  comps.push_back(composed.back());
  auto det = determinant(M);
  return BuiltField{S, std::move(comps), std::move(M), std::move(det), std::move(composed),
                    std::move(numerators)};
}

}  // namespace

CompleteIntersectionData::CompleteIntersectionData(PolyRing r, std::vector<MultiPoly> fs, std::vector<MultiPoly> hs)
    : ring(std::move(r)), f(std::move(fs)), h(std::move(hs)) {
  const auto n = ring.arity();
  if (n < 2) throw ValidationError("a complete intersection curve needs at least two variables");
  if (f.size() != n - 1 || h.size() != n - 1)
    throw ValidationError("expected " + std::to_string(n - 1) + " equations and as many perturbations");
  require_ring(f, ring, "curve equations");
  require_ring(h, ring, "perturbations");
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) throw ValidationError("curve equation " + std::to_string(i + 1) + " is zero");
    if (h[i].total_degree() > f[i].total_degree())
      throw ValidationError("perturbation " + std::to_string(i + 1) + " has degree " +
                            std::to_string(h[i].total_degree()) + " above its equation's degree " +
                            std::to_string(f[i].total_degree()));
  }
}

CompleteIntersectionData CompleteIntersectionData::unperturbed() const {
  return CompleteIntersectionData(ring, f, std::vector<MultiPoly>(h.size(), MultiPoly(ring)));
}

ModelField::ModelField(PolyRing r, std::vector<MultiPoly> c) : ring(std::move(r)), components(std::move(c)) {
  if (components.size() != ring.arity()) throw ValidationError("model field needs one component per variable");
  require_ring(components, ring, "model field components");
}

std::vector<MultiPoly> family_map(const CompleteIntersectionData& ci, const Rational& t) {
  return family_in(ci, ci.ring, MultiPoly::constant(ci.ring, t));
}

PolyRing symbolic_ring(const CompleteIntersectionData& ci) { return ci.ring.with_variable(ci.ring.fresh_name("t")); }

std::vector<MultiPoly> family_map_symbolic(const CompleteIntersectionData& ci) {
  PolyRing S = symbolic_ring(ci);
  return family_in(ci, S, MultiPoly::variable(S, S.arity() - 1));
}

Ideal curve_ideal(const CompleteIntersectionData& ci, const Rational& t) {
  auto F = family_map(ci, t);
  F.pop_back();
  return Ideal(ci.ring, std::move(F));
}

BuiltField build_Ft_field(const ModelField& P, const CompleteIntersectionData& ci, const Rational& t) {
  return build(P, family_map(ci, t), ci.dimension());
}

BuiltField build_Ft_field_symbolic(const ModelField& P, const CompleteIntersectionData& ci) {
  return build(P, family_map_symbolic(ci), ci.dimension());
}

VectorField BuiltField::as_field() const {
  if (ring.arity() != components.size()) throw ValidationError("a symbolic build is a family, not a single field");
  return VectorField(ring, components);
}

bool cramer_identity_holds(const BuiltField& built) {
  auto lhs = multiply(built.M, built.cramer_numerators);
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (!(lhs[i] == built.det_M * built.composed[i])) return false;
  return true;
}

bool SampleCheck::passed() const {
  return det_M_nonzero && cramer_identity && last_component && degrees_preserved &&
         std::all_of(contained.begin(), contained.end(), [](bool b) { return b; });
}

bool FamilyReport::passed() const {
  return symbolic_cramer && reproduces_unperturbed &&
         std::all_of(samples.begin(), samples.end(), [](const SampleCheck& s) { return s.passed(); });
}

FamilyReport verify_family_properties(const ModelField& P, const CompleteIntersectionData& ci,
                                      std::span<const Rational> samples) {
  FamilyReport report;
  const auto n = ci.dimension();
  report.symbolic_cramer = cramer_identity_holds(build_Ft_field_symbolic(P, ci));

  const auto base = build_Ft_field(P, ci, 0);
  report.reproduces_unperturbed = base.components == build_Ft_field(P, ci.unperturbed(), 1).components;
  for (const auto& c : base.components) report.base_degrees.push_back(c.total_degree());

  std::vector<std::size_t> normals(n - 1);
  std::iota(normals.begin(), normals.end(), 0);
  for (const auto& p : P.components) report.model_axis_orders.push_back(order_along_axis(p, normals));

  for (const auto& t : samples) {
    const auto built = build_Ft_field(P, ci, t);
    SampleCheck check;
    check.t = t;
    check.det_M_nonzero = !built.det_M.is_zero();
    check.cramer_identity = cramer_identity_holds(built);
    check.last_component = built.components.back() == built.composed.back();
    check.degrees_preserved = true;
    for (std::size_t i = 0; i < n; ++i) {
      check.degrees.push_back(built.components[i].total_degree());
      if (check.degrees.back() > report.base_degrees[i]) check.degrees_preserved = false;
    }
    const auto gb = buchberger(curve_ideal(ci, t), MonomialOrder::degrevlex(ci.ring));
    for (const auto& c : built.components) check.contained.push_back(is_member(c, gb));
    report.samples.push_back(std::move(check));
  }
  return report;
}

}  // namespace curvefol
