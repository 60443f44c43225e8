#include "cli/commands.hpp"

#include <charconv>

#include "curvefol/chow.hpp"

namespace curvefol::cli {

namespace {

Report start(const std::string& command, const SpecFile& spec) {
  Report r;
  r.command = command;
  r.digest = sha256_hex(spec.source);
  return r;
}

Json names_json(const PolyRing& ring, std::span<const std::size_t> vars) {
  Json out = Json::array();
  for (std::size_t v : vars) out.push_back(ring.name(v));
  return out;
}

Json profile_json(const VectorField& field, const AxisCurve& curve, const MultiplicityProfile& p) {
  const PolyRing& ring = field.ring;
  Json orders = Json::object();
  for (std::size_t v = 0; v < ring.arity(); ++v) orders[ring.name(v)] = order_json(p.raw_orders[v]);
  Json sorted = Json::array();
  for (const auto& o : p.sorted_orders) sorted.push_back(order_json(o));
  Json frame = names_json(ring, p.sort_permutation);
  frame.push_back(ring.name(curve.axis()));
  Json residuals = Json::array();
  for (std::size_t slot = 0; slot < p.residuals.size(); ++slot) {
    const auto& r = p.residuals[slot];
    residuals.push_back(Json{{"index", slot + 2}, {"value", r ? poly_json(*r) : Json(nullptr)}});
  }
  return Json{{"curve", Json{{"normal", names_json(ring, curve.normals())}, {"axis", ring.name(curve.axis())}}},
              {"orders", orders},
              {"frame", frame},
              {"sorted_orders", sorted},
              {"m_C", order_json(p.m_C)},
              {"ell", p.ell},
              {"case", to_string(p.curve_case)},
              {"special", p.special()},
              {"dicritical", p.dicritical()},
              {"residuals", residuals}};
}

Json milnor_json(const MilnorTotal& m) {
  Json charts = Json::array();
  for (const auto& c : m.charts)
    charts.push_back(Json{{"chart", c.chart},
                          {"colength", c.colength},
                          {"already_counted", c.already_counted},
                          {"new", c.new_length},
                          {"basis_size", c.basis_size}});
  return Json{{"total", m.total}, {"charts", charts}};
}

Json ecount_json(const ECount& e, const std::string& scope) {
  Json charts = Json::array();
  for (const auto& c : e.charts)
    charts.push_back(Json{{"patch_chart", c.patch_chart},
                          {"blowup_chart", c.blowup_chart},
                          {"colength", c.colength},
                          {"already_counted", c.already_counted},
                          {"new", c.new_length}});
  return Json{{"scope", scope}, {"total", e.total}, {"charts", charts}};
}

long parse_long(const std::string& text) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ValidationError("'" + text + "' is not an integer");
  return v;
}

}  // namespace

std::vector<long> parse_range(const std::string& text) {
  std::vector<long> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    long lo = parse_long(text.substr(0, dots)), hi = parse_long(text.substr(dots + 2));
    if (lo > hi) throw ValidationError("empty range '" + text + "'");
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_long(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Report cmd_analyze(const SpecFile& spec) {
  auto r = start("analyze", spec);
  auto field = build_foliation(spec);
  auto setup = build_curve(spec, field);
  auto profile = multiplicity_profile(setup.field, setup.curve);
  r.results = profile_json(setup.field, setup.curve, profile);
  r.results["coordinate_change"] = setup.changed;
  if (setup.changed) r.results["field"] = polys_json(setup.field.components);
  return r;
}

Report cmd_blowup(const SpecFile& spec, std::size_t chart) {
  auto r = start("blowup", spec);
  r.options["chart"] = chart;
  auto field = build_foliation(spec);
  auto setup = build_curve(spec, field);
  if (chart < 1 || chart > setup.curve.normals().size())
    throw ValidationError("--chart must be between 1 and " + std::to_string(setup.curve.normals().size()));
  auto profile = multiplicity_profile(setup.field, setup.curve);
  auto total = total_transform(setup.field, setup.curve, chart);
  auto strict = strict_transform(setup.field, setup.curve, chart, profile);
  const bool identity = pullback_identity_holds(setup.field, setup.curve, total);
  r.results = Json{{"chart", chart},
                   {"ring", total.ring.names()},
                   {"exceptional", total.ring.name(total.exceptional)},
                   {"chart_map", polys_json(chart_map(setup.curve, chart))},
                   {"total_transform", polys_json(total.components)},
                   {"strict_transform", polys_json(strict.components)},
                   {"divided_power", strict.divided_power},
                   {"case", to_string(profile.curve_case)},
                   {"pullback_identity", identity}};
  if (!identity) r.exit_code = kMismatch;
  return r;
}

Report cmd_count(const SpecFile& spec) {
  auto r = start("count", spec);
  auto field = build_foliation(spec);
  ProjectiveFoliation pf(field);
  std::vector<Ideal> curves;
  if (!spec.curve) {
    r.results["milnor"] = milnor_json(total_isolated_milnor(pf, curves));
    r.warnings.push_back("no curve declared: the exceptional count is skipped");
    return r;
  }
  auto setup = build_curve(spec, field);
  std::vector<MultiPoly> homogeneous;
  for (const auto& e : setup.equations) homogeneous.push_back(pf.homogenize(e));
  curves.emplace_back(pf.homogeneous_ring(), homogeneous);
  r.results["milnor"] = milnor_json(total_isolated_milnor(pf, curves));

  auto profile = multiplicity_profile(setup.field, setup.curve);
  r.results["case"] = to_string(profile.curve_case);
  if (!profile.special()) {
    r.warnings.push_back("curve is not special (" + to_string(profile.curve_case) +
                         "): the exceptional count is skipped");
    return r;
  }
  if (setup.changed) {
    r.results["exceptional"] = ecount_json(sing_on_E_total(setup.field, setup.curve), "affine");
    r.warnings.push_back("coordinate change given: the exceptional count covers the affine chart only");
  } else {
    auto patches = axis_curve_patches(pf, setup.curve);
    r.results["exceptional"] = ecount_json(sing_on_E_total(pf, patches), "projective");
  }
  return r;
}

Report cmd_formulas(const SpecFile& spec) {
  auto r = start("formulas", spec);
  const long n = require_dimension(spec), k = require_degree(spec);
  r.results["n"] = n;
  r.results["k"] = k;
  r.results["baum_bott_total"] = integer_json(baum_bott_total(n, k));
  Json curves = Json::array();
  for (const auto& c : spec.curves)
    curves.push_back(Json{{"d", c.d},
                          {"g", c.g},
                          {"ell", c.ell},
                          {"branches", c.branches},
                          {"thmA", integer_json(thmA_count(n, k, c.ell, c.d, c.g))},
                          {"thmB", integer_json(thmB_count(n, k, c.ell, c.d, c.g))},
                          {"corollary_isolated", integer_json(corollary_isolated(n, k, c.ell, c.d, c.g))},
                          {"nu", integer_json(nu_curve(n, k, c))}});
  r.results["curves"] = curves;
  auto total = theorem1_total(n, k, spec.curves);
  r.results["theorem1_total"] = integer_json(total.total);
  r.warnings = total.warnings;
  return r;
}

Report cmd_chow_verify(const GridRanges& grid, const std::optional<SpecFile>& spec) {
  Report r;
  r.command = "chow-verify";
  r.options = Json{{"n", grid.n}, {"k", grid.k}, {"ell", grid.ell}, {"d", grid.d}, {"g", grid.g}};
  r.digest = sha256_hex(spec ? spec->source : r.options.dump());
  Json failures = Json::array();
  std::size_t points = 0;
  for (long n : grid.n)
    for (long k : grid.k)
      for (long ell : grid.ell)
        for (long d : grid.d)
          for (long g : grid.g) {
            ++points;
            BlowupGeometry geom{n, d, g, k, ell};
            const auto a = thmA_count(n, k, ell, d, g), b = thmB_count(n, k, ell, d, g);
            const auto e = baum_bott_E(geom), pt = baum_bott_Pt(geom);
            const auto cor = corollary_isolated(n, k, ell, d, g);
            if (a != e || b != pt || cor != b - a)
              failures.push_back(Json{{"n", n},
                                      {"k", k},
                                      {"ell", ell},
                                      {"d", d},
                                      {"g", g},
                                      {"thmA", integer_json(a)},
                                      {"baum_bott_E", integer_json(e)},
                                      {"thmB", integer_json(b)},
                                      {"baum_bott_Pt", integer_json(pt)},
                                      {"corollary_isolated", integer_json(cor)}});
          }
  r.results = Json{{"points", points}, {"mismatches", failures.size()}, {"failures", failures}};
  if (!failures.empty()) r.exit_code = kMismatch;
  return r;
}

Report cmd_deform(const SpecFile& spec) {
  auto r = start("deform", spec);
  auto P = build_model(spec);
  auto ci = build_complete_intersection(spec);
  const auto& samples = spec.deformation->t_samples;
  auto report = verify_family_properties(P, ci, samples);
  auto sym = build_Ft_field_symbolic(P, ci);

  Json orders = Json::array();
  for (const auto& o : report.model_axis_orders) orders.push_back(order_json(o));
  Json checks = Json::array();
  for (const auto& s : report.samples) {
    auto built = build_Ft_field(P, ci, s.t);
    checks.push_back(Json{{"t", rational_json(s.t)},
                          {"field", polys_json(built.components)},
                          {"det_M", poly_json(built.det_M)},
                          {"det_M_nonzero", s.det_M_nonzero},
                          {"cramer_identity", s.cramer_identity},
                          {"last_component", s.last_component},
                          {"degrees", s.degrees},
                          {"degrees_preserved", s.degrees_preserved},
                          {"contained", s.contained},
                          {"passed", s.passed()}});
  }
  r.results = Json{{"family_map", polys_json(family_map_symbolic(ci))},
                   {"symbolic_det_M", poly_json(sym.det_M)},
                   {"symbolic_cramer", report.symbolic_cramer},
                   {"reproduces_unperturbed", report.reproduces_unperturbed},
                   {"base_degrees", report.base_degrees},
                   {"model_axis_orders", orders},
                   {"samples", checks},
                   {"passed", report.passed()}};
  if (!report.passed()) r.exit_code = kMismatch;
  return r;
}

}  // namespace curvefol::cli
