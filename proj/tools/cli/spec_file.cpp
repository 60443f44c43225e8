#include "cli/spec_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace curvefol::cli {

namespace {

int line_of(const YAML::Node& node) { return node.Mark().line + 1; }

[[noreturn]] void fail(const YAML::Node& node, const std::string& what) { throw SpecError(what, line_of(node)); }

void check_keys(const YAML::Node& map, const std::set<std::string>& allowed, const std::string& where) {
  if (!map.IsMap()) fail(map, where + " must be a mapping");
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.contains(key)) fail(kv.first, "unknown key '" + key + "' in " + where);
  }
}

std::string scalar(const YAML::Node& node, const std::string& what) {
  if (!node.IsScalar()) fail(node, what + " must be a scalar");
  return node.Scalar();
}

long integer(const YAML::Node& node, const std::string& what) {
  const auto text = scalar(node, what);
  try {
    std::size_t used = 0;
    long v = std::stol(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  fail(node, what + " must be an integer, got '" + text + "'");
}

std::vector<Text> texts(const YAML::Node& node, const std::string& what) {
  if (!node.IsSequence()) fail(node, what + " must be a list");
  std::vector<Text> out;
  for (std::size_t i = 0; i < node.size(); ++i)
    out.push_back({scalar(node[i], what + "[" + std::to_string(i) + "]"), line_of(node[i])});
  return out;
}

std::vector<std::string> names(const YAML::Node& node, const std::string& what) {
  std::vector<std::string> out;
  for (auto& t : texts(node, what)) {
    if (!is_identifier(t.value)) throw SpecError(what + ": '" + t.value + "' is not a variable name", t.line);
    out.push_back(std::move(t.value));
  }
  return out;
}

CurveDecl parse_curve(const YAML::Node& node) {
  check_keys(node, {"normal", "axis", "coordinate_change"}, "curve");
  CurveDecl c;
  c.line = line_of(node);
  if (!node["normal"]) fail(node, "curve needs 'normal'");
  if (!node["axis"]) fail(node, "curve needs 'axis'");
  c.normals = texts(node["normal"], "curve.normal");
  c.axis = {scalar(node["axis"], "curve.axis"), line_of(node["axis"])};
  if (node["coordinate_change"]) c.coordinate_change = texts(node["coordinate_change"], "curve.coordinate_change");
  return c;
}

CurveData parse_curve_data(const YAML::Node& node, std::size_t i) {
  const auto where = "curves[" + std::to_string(i) + "]";
  check_keys(node, {"d", "g", "ell", "branches"}, where);
  for (const char* key : {"d", "g", "ell"})
    if (!node[key]) fail(node, where + " needs '" + key + "'");
  CurveData c{integer(node["d"], where + ".d"), integer(node["g"], where + ".g"), integer(node["ell"], where + ".ell"),
              {}};
  if (node["branches"]) {
    if (!node["branches"].IsSequence()) fail(node["branches"], where + ".branches must be a list");
    for (const auto& b : node["branches"]) c.branches.push_back(integer(b, where + ".branches"));
  }
  try {
    c.validate();
  } catch (const ValidationError& e) {
    fail(node, where + ": " + e.what());
  }
  return c;
}

DeformationDecl parse_deformation(const YAML::Node& node) {
  check_keys(node, {"model_variables", "P", "f", "h", "t_samples"}, "deformation");
  DeformationDecl d;
  d.line = line_of(node);
  for (const char* key : {"model_variables", "P", "f", "h"})
    if (!node[key]) fail(node, std::string("deformation needs '") + key + "'");
  d.model_variables = names(node["model_variables"], "deformation.model_variables");
  d.P = texts(node["P"], "deformation.P");
  d.f = texts(node["f"], "deformation.f");
  d.h = texts(node["h"], "deformation.h");
  if (node["t_samples"]) {
    for (const auto& t : texts(node["t_samples"], "deformation.t_samples")) {
      try {
        d.t_samples.push_back(parse_rational(t.value));
      } catch (const Error& e) {
        throw SpecError("deformation.t_samples: " + std::string(e.what()), t.line);
      }
    }
  } else {
    d.t_samples = {0, 1, 2};
  }
  return d;
}

MultiPoly parse_at(const Text& t, const PolyRing& ring, const std::string& what) {
  try {
    return parse_poly(t.value, ring);
  } catch (const ParseError& e) {
    throw SpecError(what + ": " + e.what(), t.line);
  }
}

std::vector<MultiPoly> parse_all(const std::vector<Text>& ts, const PolyRing& ring, const std::string& what) {
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < ts.size(); ++i) out.push_back(parse_at(ts[i], ring, what + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

SpecError::SpecError(const std::string& what, int line)
    : ValidationError(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

SpecFile parse_spec(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw SpecError(e.msg, e.mark.line + 1);
  }
  SpecFile spec;
  spec.source = text;
  if (root.IsNull()) return spec;
  check_keys(root, {"dimension", "degree", "variables", "components", "curve", "curves", "deformation"}, "spec");
  if (root["dimension"]) spec.dimension = integer(root["dimension"], "dimension");
  if (root["degree"]) spec.degree = integer(root["degree"], "degree");
  if (spec.degree && *spec.degree < 0) fail(root["degree"], "degree must be non-negative");
  if (root["variables"]) spec.variables = names(root["variables"], "variables");
  if (root["components"]) spec.components = texts(root["components"], "components");
  if (spec.dimension && !spec.variables.empty() && static_cast<std::size_t>(*spec.dimension) != spec.variables.size())
    fail(root["variables"], "dimension " + std::to_string(*spec.dimension) + " but " +
                                std::to_string(spec.variables.size()) + " variables");
  if (!spec.components.empty() && spec.components.size() != spec.variables.size())
    fail(root["components"], std::to_string(spec.variables.size()) + " variables but " +
                                 std::to_string(spec.components.size()) + " components");
  if (root["curve"]) spec.curve = parse_curve(root["curve"]);
  if (root["curves"]) {
    if (!root["curves"].IsSequence()) fail(root["curves"], "curves must be a list");
    for (std::size_t i = 0; i < root["curves"].size(); ++i) spec.curves.push_back(parse_curve_data(root["curves"][i], i));
  }
  if (root["deformation"]) spec.deformation = parse_deformation(root["deformation"]);
  return spec;
}

SpecFile load_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("cannot read spec file '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

long require_dimension(const SpecFile& spec) {
  if (spec.dimension) return *spec.dimension;
  if (!spec.variables.empty()) return static_cast<long>(spec.variables.size());
  throw SpecError("spec needs 'dimension' or 'variables'", 0);
}

long require_degree(const SpecFile& spec) {
  if (!spec.degree) throw SpecError("spec needs 'degree'", 0);
  return *spec.degree;
}

PolyRing variable_ring(const SpecFile& spec) {
  if (spec.variables.empty()) throw SpecError("spec needs 'variables'", 0);
  try {
    return PolyRing(spec.variables);
  } catch (const Error& e) {
    throw SpecError(std::string("variables: ") + e.what(), 0);
  }
}

AffineFoliation build_foliation(const SpecFile& spec) {
  PolyRing ring = variable_ring(spec);
  if (spec.components.empty()) throw SpecError("spec needs 'components'", 0);
  auto comps = parse_all(spec.components, ring, "components");
  try {
    return AffineFoliation(ring, std::move(comps), static_cast<unsigned>(require_degree(spec)));
  } catch (const SpecError&) {
    throw;
  } catch (const ValidationError& e) {
    throw SpecError(std::string("components: ") + e.what(), spec.components.front().line);
  }
}

CurveSetup build_curve(const SpecFile& spec, const AffineFoliation& field) {
  if (!spec.curve) throw SpecError("spec needs a 'curve' block", 0);
  const auto& decl = *spec.curve;
  const PolyRing& ring = field.ring();
  std::vector<std::string> normal_names;
  for (const auto& t : decl.normals) {
    if (!ring.find(t.value)) throw SpecError("curve.normal: unknown variable '" + t.value + "'", t.line);
    normal_names.push_back(t.value);
  }
  if (!ring.find(decl.axis.value))
    throw SpecError("curve.axis: unknown variable '" + decl.axis.value + "'", decl.axis.line);
  std::optional<AxisCurve> curve;
  try {
    curve = AxisCurve::from_names(ring, normal_names, decl.axis.value);
  } catch (const ValidationError& e) {
    throw SpecError(std::string("curve: ") + e.what(), decl.line);
  }

  CurveSetup setup{VectorField(field), *curve, false, {}};
  if (decl.coordinate_change.empty()) {
    for (std::size_t v : curve->normals()) setup.equations.push_back(MultiPoly::variable(ring, v));
    return setup;
  }
  if (decl.coordinate_change.size() != ring.arity())
    throw SpecError("curve.coordinate_change needs one expression per variable", decl.line);
  auto coords = parse_all(decl.coordinate_change, ring, "curve.coordinate_change");
  try {
    setup.field = change_coordinates(VectorField(field), coords);
  } catch (const ValidationError& e) {
    throw SpecError(std::string("curve.coordinate_change: ") + e.what(), decl.coordinate_change.front().line);
  }
  setup.changed = true;
  for (std::size_t v : curve->normals()) setup.equations.push_back(coords[v]);
  return setup;
}

ModelField build_model(const SpecFile& spec) {
  if (!spec.deformation) throw SpecError("spec needs a 'deformation' block", 0);
  const auto& d = *spec.deformation;
  PolyRing w(d.model_variables);
  try {
    return ModelField(w, parse_all(d.P, w, "deformation.P"));
  } catch (const SpecError&) {
    throw;
  } catch (const ValidationError& e) {
    throw SpecError(std::string("deformation.P: ") + e.what(), d.line);
  }
}

CompleteIntersectionData build_complete_intersection(const SpecFile& spec) {
  if (!spec.deformation) throw SpecError("spec needs a 'deformation' block", 0);
  const auto& d = *spec.deformation;
  PolyRing ring = variable_ring(spec);
  auto f = parse_all(d.f, ring, "deformation.f");
  auto h = parse_all(d.h, ring, "deformation.h");
  try {
    return CompleteIntersectionData(ring, std::move(f), std::move(h));
  } catch (const ValidationError& e) {
    throw SpecError(std::string("deformation: ") + e.what(), d.line);
  }
}

}  // namespace curvefol::cli
