#include "curvefol/blowup.hpp"

#include <algorithm>

#include "curvefol/groebner.hpp"
#include "curvefol/matrix.hpp"

namespace curvefol {

VectorField::VectorField(PolyRing r, std::vector<MultiPoly> c) : ring(std::move(r)), components(std::move(c)) {
  if (components.size() != ring.arity())
    throw ValidationError("vector field needs " + std::to_string(ring.arity()) + " components");
  for (const auto& p : components)
    if (!(p.ring() == ring)) throw RingMismatch("vector field component in a different ring");
}

VectorField::VectorField(const AffineFoliation& f)
    : ring(f.ring()), components(f.components().begin(), f.components().end()) {}

AxisCurve::AxisCurve(PolyRing ring, std::vector<std::size_t> normals, std::size_t axis)
    : ring_(std::move(ring)), normals_(std::move(normals)), axis_(axis) {
  const std::size_t n = ring_.arity();
  if (n < 2) throw ValidationError("an axis curve needs at least two variables");
  if (normals_.size() + 1 != n) throw ValidationError("an axis curve needs exactly n-1 normal variables");
  std::vector<bool> seen(n, false);
  for (auto v : normals_) {
    if (v >= n || seen[v]) throw ValidationError("normal variables must be distinct ring variables");
    seen[v] = true;
  }
  if (axis_ >= n || seen[axis_]) throw ValidationError("axis variable must be the remaining ring variable");
}

AxisCurve AxisCurve::from_names(const PolyRing& ring, const std::vector<std::string>& normals,
                                const std::string& axis) {
  std::vector<std::size_t> idx;
  for (const auto& name : normals) idx.push_back(ring.index(name));
  return AxisCurve(ring, std::move(idx), ring.index(axis));
}

std::string to_string(CurveCase c) {
  switch (c) {
    case CurveCase::nd_special:
      return "nondicritical-i (special)";
    case CurveCase::nd_ii:
      return "nondicritical-ii";
    case CurveCase::nd_iii:
      return "nondicritical-iii";
    case CurveCase::dicritical_i:
      return "dicritical-i";
    case CurveCase::dicritical_ii:
      return "dicritical-ii";
  }
  return "unknown";
}

PolyRing sorted_frame_ring(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("u" + std::to_string(i));
  return PolyRing(names);
}

namespace {

void check_rings(const VectorField& f, const AxisCurve& c) {
  if (!(f.ring == c.ring())) throw RingMismatch("field and curve use different rings");
}

std::vector<AxisOrder> raw_orders(const VectorField& f, const AxisCurve& c) {
  std::vector<AxisOrder> orders;
  for (std::size_t i = 0; i < f.components.size(); ++i) {
    AxisOrder m = order_along_axis(f.components[i], c.normals());
    if (m == AxisOrder(0))
      throw ValidationError("component " + std::to_string(i + 1) + " (" + f.ring.name(i) +
                            ") does not vanish on the curve, so the curve is not in the singular locus");
    orders.push_back(m);
  }
  return orders;
}

std::vector<std::size_t> sort_normals(const AxisCurve& c, const std::vector<AxisOrder>& raw) {
  std::vector<std::size_t> perm(c.normals().begin(), c.normals().end());
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return raw[a] > raw[b]; });
  return perm;
}

std::vector<AxisOrder> sorted_orders(const AxisCurve& c, const std::vector<AxisOrder>& raw,
                                     const std::vector<std::size_t>& perm) {
  std::vector<AxisOrder> m;
  for (auto v : perm) m.push_back(raw[v]);
  m.push_back(raw[c.axis()]);
  return m;
}

MultiPoly residual_from(const VectorField& f, const AxisCurve& c, const std::vector<std::size_t>& perm,
                        std::size_t i) {
  PolyRing frame = sorted_frame_ring(f.ring.arity());
  return leading_layer(f, c, perm, i) - MultiPoly::variable(frame, i - 1) * leading_layer(f, c, perm, 1);
}

}  // namespace

MultiPoly leading_layer(const VectorField& f, const AxisCurve& c, std::span<const std::size_t> sort_permutation,
                        std::size_t frame_index) {
  check_rings(f, c);
  const std::size_t n = f.ring.arity();
  if (sort_permutation.size() + 1 != n) throw ValidationError("sort permutation must list the n-1 normals");
  if (frame_index < 1 || frame_index > n) throw ValidationError("frame index out of range");
  PolyRing frame = sorted_frame_ring(n);
  const std::size_t var = frame_index == n ? c.axis() : sort_permutation[frame_index - 1];
  const MultiPoly& comp = f.components[var];
  if (comp.is_zero()) return MultiPoly(frame);
  auto dec = axis_decompose(comp, c.normals());
  std::vector<MultiPoly> images(n, MultiPoly(frame));
  images[sort_permutation[0]] = MultiPoly::constant(frame, 1);
  for (std::size_t p = 1; p < sort_permutation.size(); ++p) images[sort_permutation[p]] = MultiPoly::variable(frame, p);
  images[c.axis()] = MultiPoly::variable(frame, n - 1);
  MultiPoly layer(f.ring);
  for (const auto& t : dec.layer) layer += MultiPoly::monomial(f.ring, t.axis_monomial) * t.cofactor;
  return substitute(layer, images);
}

MultiplicityProfile multiplicity_profile(const VectorField& f, const AxisCurve& c) {
  check_rings(f, c);
  const std::size_t n = f.ring.arity();
  MultiplicityProfile p;
  p.raw_orders = raw_orders(f, c);
  p.sort_permutation = sort_normals(c, p.raw_orders);
  p.sorted_orders = sorted_orders(c, p.raw_orders, p.sort_permutation);
  const auto& m = p.sorted_orders;  // m[0] is m_1
  p.m_C = *std::min_element(m.begin(), m.end());

  bool all_r_zero = true, all_r_nonzero = true;
  for (std::size_t i = 2; i <= n - 1; ++i) {
    if (m[i - 1] == m[0]) {
      MultiPoly r = residual_from(f, c, p.sort_permutation, i);
      all_r_zero = all_r_zero && r.is_zero();
      all_r_nonzero = all_r_nonzero && !r.is_zero();
      p.residuals.emplace_back(std::move(r));
    } else {
      p.residuals.emplace_back(std::nullopt);
    }
  }

  const AxisOrder m1 = m[0], mn1 = m[n - 2], mn = m[n - 1];
  const bool normals_equal = m1 == mn1;
  if (normals_equal && mn >= m1 && all_r_zero) {
    p.curve_case = mn == m1 ? CurveCase::dicritical_i : CurveCase::dicritical_ii;
  } else if (mn.plus(1) <= mn1) {
    bool chain = true;  // m_n + 1 = m_{n-1} = ... = m_2
    for (std::size_t i = 2; i <= n - 1; ++i) chain = chain && m[i - 1] == mn.plus(1);
    bool guard = mn1 < m1 || all_r_nonzero;
    p.curve_case = chain && guard ? CurveCase::nd_special : CurveCase::nd_ii;
  } else {
    p.curve_case = CurveCase::nd_iii;
  }

  AxisOrder ell = p.m_C;
  if (!p.dicritical()) {
    ell = std::min(m1, mn);
    for (std::size_t i = 2; i <= n - 1; ++i) ell = std::min(ell, m[i - 1].plus(-1));
  }
  if (ell.is_infinite()) throw ValidationError("every component vanishes identically");
  p.ell = ell.value();
  return p;
}

MultiPoly residual(const VectorField& f, const AxisCurve& c, std::size_t frame_index) {
  check_rings(f, c);
  const std::size_t n = f.ring.arity();
  if (frame_index < 2 || frame_index > n - 1) throw ValidationError("residuals exist for frame indices 2..n-1");
  auto raw = raw_orders(f, c);
  auto perm = sort_normals(c, raw);
  auto m = sorted_orders(c, raw, perm);
  if (m[frame_index - 1] != m[0])
    throw ValidationError("residual r_" + std::to_string(frame_index) + " needs m_" + std::to_string(frame_index) +
                          " = m_1");
  return residual_from(f, c, perm, frame_index);
}

CurveCase classify(const VectorField& f, const AxisCurve& c) { return multiplicity_profile(f, c).curve_case; }

bool is_special(const VectorField& f, const AxisCurve& c) { return multiplicity_profile(f, c).special(); }

PolyRing blowup_chart_ring(const AxisCurve& c) { return sorted_frame_ring(c.ring().arity()); }

namespace {

std::size_t exceptional_variable(const AxisCurve& c, std::size_t chart_index) {
  if (chart_index < 1 || chart_index > c.normals().size())
    throw ValidationError("blowup chart must be between 1 and " + std::to_string(c.normals().size()));
  return c.normals()[chart_index - 1];
}

}  // namespace

std::vector<MultiPoly> chart_map(const AxisCurve& c, std::size_t chart_index) {
  const std::size_t e = exceptional_variable(c, chart_index);
  PolyRing u = blowup_chart_ring(c);
  std::vector<MultiPoly> images;
  MultiPoly ue = MultiPoly::variable(u, e);
  for (std::size_t v = 0; v < u.arity(); ++v) {
    MultiPoly uv = MultiPoly::variable(u, v);
    images.push_back(v == e || v == c.axis() ? uv : uv * ue);
  }
  return images;
}

BlowupChartField total_transform(const VectorField& f, const AxisCurve& c, std::size_t chart_index) {
  check_rings(f, c);
  const std::size_t e = exceptional_variable(c, chart_index);
  auto sigma = chart_map(c, chart_index);
  PolyRing u = blowup_chart_ring(c);
  BlowupChartField out{chart_index, e, u, {}, 0};
  std::vector<MultiPoly> pulled;
  for (const auto& comp : f.components) pulled.push_back(substitute(comp, sigma));
  for (std::size_t v = 0; v < u.arity(); ++v) {
    if (v == e || v == c.axis()) {
      out.components.push_back(pulled[v]);
    } else {
      // z_v = u_v u_e gives u_v' = (z_v' - u_v u_e') / u_e.
      MultiPoly num = pulled[v] - MultiPoly::variable(u, v) * pulled[e];
      out.components.push_back(divide_by_variable_power(num, e, 1));
    }
  }
  return out;
}

BlowupChartField strict_transform(const VectorField& f, const AxisCurve& c, std::size_t chart_index,
                                  const MultiplicityProfile& profile) {
  BlowupChartField total = total_transform(f, c, chart_index);
  const auto s = static_cast<unsigned>(profile.divided_power());
  for (auto& comp : total.components) {
    if (variable_valuation(comp, total.exceptional) < s && !comp.is_zero())
      throw ValidationError("total transform is not divisible by u_e^" + std::to_string(s) +
                            "; profile and field disagree");
    comp = divide_by_variable_power(comp, total.exceptional, s);
  }
  total.divided_power = s;
  return total;
}

BlowupChartField strict_transform(const VectorField& f, const AxisCurve& c, std::size_t chart_index) {
  return strict_transform(f, c, chart_index, multiplicity_profile(f, c));
}

bool pullback_identity_holds(const VectorField& f, const AxisCurve& c, const BlowupChartField& total) {
  auto sigma = chart_map(c, total.chart_index);
  auto lhs = multiply(jacobian(sigma), total.components);
  for (std::size_t i = 0; i < f.components.size(); ++i)
    if (!(lhs[i] == substitute(f.components[i], sigma))) return false;
  return true;
}

namespace {

// Length of I minus the part visible where some prior generator is nonzero.
EChartCount count_away_from(const Ideal& ideal, std::vector<MultiPoly> prior) {
  EChartCount out;
  out.colength = colength(ideal);
  Ideal j(ideal.ring(), std::move(prior));
  if (!j.is_zero() && out.colength > 0) out.already_counted = colength(saturate(ideal, j));
  out.new_length = out.colength - out.already_counted;
  return out;
}

struct EChart {
  Ideal ideal;
  PolyRing sub;
  std::vector<MultiPoly> sigma;  // chart map, in the full chart ring
};

EChart e_chart(const VectorField& f, const AxisCurve& c, std::size_t j, const MultiplicityProfile& profile) {
  auto strict = strict_transform(f, c, j, profile);
  const std::size_t e = strict.exceptional;
  std::size_t drop[] = {e};
  PolyRing sub = strict.ring.without_variables(drop);
  std::vector<MultiPoly> gens;
  for (std::size_t v = 0; v < strict.components.size(); ++v)
    if (v != e) gens.push_back(embed(specialize(strict.components[v], e, 0), sub));
  return EChart{Ideal(sub, std::move(gens)), sub, chart_map(c, j)};
}

void require_special(const MultiplicityProfile& p) {
  if (!p.special())
    throw ValidationError("counting on E needs a special curve; this one is " + to_string(p.curve_case));
}

// Chart-c coordinate x_{other}/x_c as a ring index of chart_ring(c).
std::size_t chart_coordinate(std::size_t c, std::size_t other) {
  if (c == 0) return other - 1;
  return other < c ? other : other - 1;
}

}  // namespace

ECount sing_on_E_total(const VectorField& f, const AxisCurve& c) {
  check_rings(f, c);
  auto profile = multiplicity_profile(f, c);
  require_special(profile);
  ECount out;
  for (std::size_t j = 1; j <= c.normals().size(); ++j) {
    EChart chart = e_chart(f, c, j, profile);
    std::vector<MultiPoly> prior;
    for (std::size_t jj = 1; jj < j; ++jj)
      prior.push_back(embed(MultiPoly::variable(blowup_chart_ring(c), c.normals()[jj - 1]), chart.sub));
    EChartCount count;
    try {
      count = count_away_from(chart.ideal, std::move(prior));
    } catch (const DimensionError& e) {
      throw DimensionError("blowup chart " + std::to_string(j) + ": " + e.what(), e.variable());
    }
    count.blowup_chart = j;
    out.total += count.new_length;
    out.charts.push_back(count);
  }
  return out;
}

std::vector<CurvePatch> axis_curve_patches(const ProjectiveFoliation& f, const AxisCurve& chart0_curve) {
  if (!(chart0_curve.ring() == f.chart_ring(0))) throw RingMismatch("curve must live in the chart-0 ring");
  // In chart c = axis + 1 the point at infinity of the curve is x0 = 0, and
  // the homogeneous variable x_i sits at slot i, or i - 1 past c.
  const std::size_t c = chart0_curve.axis() + 1;
  std::vector<std::size_t> normals;
  for (std::size_t v : chart0_curve.normals()) normals.push_back(v + 1 < c ? v + 1 : v);
  return {CurvePatch{0, chart0_curve}, CurvePatch{c, AxisCurve(f.chart_ring(c), normals, 0)}};
}

std::vector<CurvePatch> coordinate_line_patches(const ProjectiveFoliation& f) {
  const std::size_t n = f.dimension();
  std::vector<std::size_t> normals;
  for (std::size_t i = 0; i + 1 < n; ++i) normals.push_back(i);
  return axis_curve_patches(f, AxisCurve(f.chart_ring(0), normals, n - 1));
}

ECount sing_on_E_total(const ProjectiveFoliation& f, std::span<const CurvePatch> patches) {
  ECount out;
  for (std::size_t p = 0; p < patches.size(); ++p) {
    const auto& patch = patches[p];
    VectorField field(f.chart(patch.chart));
    check_rings(field, patch.curve);
    auto profile = multiplicity_profile(field, patch.curve);
    require_special(profile);
    const auto& c = patch.curve;
    for (std::size_t j = 1; j <= c.normals().size(); ++j) {
      EChart chart = e_chart(field, c, j, profile);
      const std::size_t e = c.normals()[j - 1];
      std::vector<MultiPoly> prior;
      for (std::size_t jj = 1; jj < j; ++jj)
        prior.push_back(embed(MultiPoly::variable(blowup_chart_ring(c), c.normals()[jj - 1]), chart.sub));
      for (std::size_t q = 0; q < p; ++q) {
        if (patches[q].chart == patch.chart) throw ValidationError("two curve patches share a chart");
        const MultiPoly& pulled = chart.sigma[chart_coordinate(patch.chart, patches[q].chart)];
        MultiPoly on_e = specialize(pulled, e, 0);
        if (!on_e.is_zero()) prior.push_back(embed(on_e, chart.sub));
      }
      EChartCount count;
      try {
        count = count_away_from(chart.ideal, std::move(prior));
      } catch (const DimensionError& err) {
        throw DimensionError("patch chart " + std::to_string(patch.chart) + ", blowup chart " + std::to_string(j) +
                                 ": " + err.what(),
                             err.variable());
      }
      count.patch_chart = patch.chart;
      count.blowup_chart = j;
      out.total += count.new_length;
      out.charts.push_back(count);
    }
  }
  return out;
}

VectorField change_coordinates(const VectorField& f, std::span<const MultiPoly> new_coords) {
  const PolyRing& ring = f.ring;
  const std::size_t n = ring.arity();
  if (new_coords.size() != n) throw ValidationError("coordinate change needs one expression per variable");
  for (const auto& w : new_coords)
    if (!(w.ring() == ring)) throw RingMismatch("coordinate change expression in a different ring");

  // inverse[v] expresses z_v through the new coordinates (same names).
  std::vector<std::optional<MultiPoly>> inverse(n);
  std::vector<bool> used(n, false);
  auto images = [&] {
    std::vector<MultiPoly> out;
    for (std::size_t v = 0; v < n; ++v) out.push_back(inverse[v] ? *inverse[v] : MultiPoly(ring));
    return out;
  };
  for (std::size_t step = 0; step < n; ++step) {
    bool progressed = false;
    for (std::size_t i = 0; i < n && !progressed; ++i) {
      if (used[i]) continue;
      const MultiPoly& w = new_coords[i];
      std::optional<std::size_t> fresh;
      bool ok = true;
      for (std::size_t v = 0; v < n && ok; ++v) {
        if (inverse[v] || !w.uses_variable(v)) continue;
        if (fresh) ok = false;
        fresh = v;
      }
      if (!ok || !fresh) continue;
      Monomial lin(n);
      lin[*fresh] = 1;
      Rational a = w.coefficient(lin);
      MultiPoly rest = w - MultiPoly::monomial(ring, lin, a);
      if (a == 0 || rest.uses_variable(*fresh)) continue;
      inverse[*fresh] = (MultiPoly::variable(ring, i) - substitute(rest, images())) * (1 / a);
      used[i] = true;
      progressed = true;
    }
    if (!progressed) throw ValidationError("coordinate change is not triangular with constant diagonal");
  }
  auto back = images();
  for (std::size_t i = 0; i < n; ++i)
    if (!(substitute(new_coords[i], back) == MultiPoly::variable(ring, i)))
      throw ValidationError("coordinate change failed to invert");

  auto jac = jacobian(new_coords);
  auto pushed = multiply(jac, f.components);
  std::vector<MultiPoly> components;
  for (const auto& p : pushed) components.push_back(substitute(p, back));
  return VectorField(ring, std::move(components));
}

}  // namespace curvefol
