#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "curvefol/foliation.hpp"
#include "curvefol/poly.hpp"

namespace curvefol {

/// Local vector field with no degree bookkeeping: the input and output of
/// the blowup transforms.
struct VectorField {
  PolyRing ring;
  std::vector<MultiPoly> components;

  VectorField(PolyRing r, std::vector<MultiPoly> c);
  VectorField(const AffineFoliation& f);  // NOLINT: implicit on purpose
};

/// The curve z_i = 0 for every normal variable i, parametrized by the axis
/// variable.
class AxisCurve {
 public:
  AxisCurve(PolyRing ring, std::vector<std::size_t> normals, std::size_t axis);
  static AxisCurve from_names(const PolyRing& ring, const std::vector<std::string>& normals,
                              const std::string& axis);

  const PolyRing& ring() const noexcept { return ring_; }
  std::span<const std::size_t> normals() const noexcept { return normals_; }
  std::size_t axis() const noexcept { return axis_; }

 private:
  PolyRing ring_;
  std::vector<std::size_t> normals_;
  std::size_t axis_;
};

enum class CurveCase { nd_special, nd_ii, nd_iii, dicritical_i, dicritical_ii };

std::string to_string(CurveCase c);

/// Orders of the components along the curve, in two frames. The sorted frame
/// sorts the normal variables by descending order (stable in the curve's
/// normal list) as indices 1..n-1 and puts the axis last as index n.
struct MultiplicityProfile {
  std::vector<AxisOrder> raw_orders;          // by ring variable
  std::vector<std::size_t> sort_permutation;  // frame index p (0-based) -> ring variable
  std::vector<AxisOrder> sorted_orders;       // m_1, ..., m_n
  AxisOrder m_C;
  std::uint64_t ell = 0;
  CurveCase curve_case = CurveCase::nd_iii;
  /// r_i for frame indices 2..n-1 (slot i-2); empty where m_i != m_1.
  std::vector<std::optional<MultiPoly>> residuals;

  bool special() const noexcept { return curve_case == CurveCase::nd_special; }
  bool dicritical() const noexcept {
    return curve_case == CurveCase::dicritical_i || curve_case == CurveCase::dicritical_ii;
  }
  /// Exponent of the exceptional equation divided out by the strict transform.
  std::uint64_t divided_power() const noexcept { return ell; }
};

/// Ring u1..un of the sorted frame, where u_p corresponds to frame index p.
PolyRing sorted_frame_ring(std::size_t n);

/// Leading layer g_i of the component at frame index `frame_index` (1-based)
/// in the sorted frame, with z_1 -> 1, z_p -> u_p and the axis -> u_n. Zero
/// for an identically zero component.
MultiPoly leading_layer(const VectorField& f, const AxisCurve& c, std::span<const std::size_t> sort_permutation,
                        std::size_t frame_index);

/// Throws ValidationError when some order is 0, i.e. the curve is not in
/// the singular locus.
MultiplicityProfile multiplicity_profile(const VectorField& f, const AxisCurve& c);

/// r_i = g_i - u_i g_1 for a frame index 2 <= i <= n-1 with m_i == m_1.
MultiPoly residual(const VectorField& f, const AxisCurve& c, std::size_t frame_index);

CurveCase classify(const VectorField& f, const AxisCurve& c);
bool is_special(const VectorField& f, const AxisCurve& c);

/// Field in blowup chart j (1-based position in the curve's normal list).
/// Chart coordinates u1..un follow the ring's variable order; u_e with e the
/// j-th normal is the equation of the exceptional divisor.
struct BlowupChartField {
  std::size_t chart_index = 1;
  std::size_t exceptional = 0;  // ring index of u_e
  PolyRing ring;
  std::vector<MultiPoly> components;
  std::uint64_t divided_power = 0;
};

PolyRing blowup_chart_ring(const AxisCurve& c);
/// Images of z under the chart map sigma: z_e = u_e, z_i = u_i u_e for the
/// other normals, axis = u_axis.
std::vector<MultiPoly> chart_map(const AxisCurve& c, std::size_t chart_index);

BlowupChartField total_transform(const VectorField& f, const AxisCurve& c, std::size_t chart_index);
/// Divides the total transform by u_e^ell, where ell is the profile's
/// tangency exponent for its case.
BlowupChartField strict_transform(const VectorField& f, const AxisCurve& c, std::size_t chart_index);
BlowupChartField strict_transform(const VectorField& f, const AxisCurve& c, std::size_t chart_index,
                                  const MultiplicityProfile& profile);

/// D sigma(u) * total(u) == f(sigma(u)), componentwise and exactly.
bool pullback_identity_holds(const VectorField& f, const AxisCurve& c, const BlowupChartField& total);

struct EChartCount {
  std::size_t patch_chart = 0;  // standard chart of P^n, 0 for the affine form
  std::size_t blowup_chart = 1;
  std::uint64_t colength = 0;
  std::uint64_t already_counted = 0;
  std::uint64_t new_length = 0;
};

struct ECount {
  std::uint64_t total = 0;
  std::vector<EChartCount> charts;
};

/// Singularities of the strict transform on E over the affine chart the
/// field lives in: the strict components other than u_e, restricted to
/// u_e = 0, counted chart by chart with earlier charts subtracted. Requires
/// a special curve.
ECount sing_on_E_total(const VectorField& f, const AxisCurve& c);

/// The curve as seen in one standard chart of P^n.
struct CurvePatch {
  std::size_t chart = 0;
  AxisCurve curve;
};

/// Patches covering the closure of a chart-0 axis curve: chart 0 itself and
/// chart axis + 1, where the curve's point at infinity is x0 = 0.
std::vector<CurvePatch> axis_curve_patches(const ProjectiveFoliation& f, const AxisCurve& chart0_curve);
/// The line x_1 = ... = x_{n-1} = 0: chart 0 with axis z_n and chart n with
/// axis x0.
std::vector<CurvePatch> coordinate_line_patches(const ProjectiveFoliation& f);

/// E-count over every patch, so the fibres of E over points at infinity of
/// the curve are included. Points of E lying over an earlier patch are
/// subtracted like earlier blowup charts.
ECount sing_on_E_total(const ProjectiveFoliation& f, std::span<const CurvePatch> patches);

/// Rewrites f in coordinates w_i = new_coords[i](z), reusing the ring's
/// names for the w's. The map must be triangular: in some order each w_i is
/// a nonzero constant times one fresh variable plus a polynomial in the
/// variables already solved for. Throws ValidationError otherwise.
VectorField change_coordinates(const VectorField& f, std::span<const MultiPoly> new_coords);

}  // namespace curvefol
