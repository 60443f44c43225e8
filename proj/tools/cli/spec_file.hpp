#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvefol/blowup.hpp"
#include "curvefol/counts.hpp"
#include "curvefol/deformation.hpp"
#include "curvefol/errors.hpp"
#include "curvefol/foliation.hpp"

namespace curvefol::cli {

/// Problem in a spec file, with the 1-based line it was found on (0 when
/// the position is unknown).
class SpecError : public ValidationError {
 public:
  SpecError(const std::string& what, int line);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

struct Text {
  std::string value;
  int line = 0;
};

struct CurveDecl {
  std::vector<Text> normals;
  Text axis;
  /// New coordinates w_i(z), one per variable, in the variables' order.
  std::vector<Text> coordinate_change;
  int line = 0;
};

struct DeformationDecl {
  std::vector<std::string> model_variables;
  std::vector<Text> P, f, h;
  std::vector<Rational> t_samples;
  int line = 0;
};

struct SpecFile {
  std::string source;
  std::optional<long> dimension;
  std::optional<long> degree;
  std::vector<std::string> variables;
  std::vector<Text> components;
  std::optional<CurveDecl> curve;
  std::vector<CurveData> curves;
  std::optional<DeformationDecl> deformation;
};

SpecFile parse_spec(const std::string& text);
/// Throws SpecError when the file cannot be read.
SpecFile load_spec(const std::string& path);

long require_dimension(const SpecFile& spec);
long require_degree(const SpecFile& spec);
PolyRing variable_ring(const SpecFile& spec);
AffineFoliation build_foliation(const SpecFile& spec);
/// The curve in the field's own coordinates, after any coordinate change.
struct CurveSetup {
  VectorField field;
  AxisCurve curve;
  bool changed = false;
  /// Chart-0 equations of the curve in the original variables.
  std::vector<MultiPoly> equations;
};
CurveSetup build_curve(const SpecFile& spec, const AffineFoliation& field);
ModelField build_model(const SpecFile& spec);
CompleteIntersectionData build_complete_intersection(const SpecFile& spec);

}  // namespace curvefol::cli
