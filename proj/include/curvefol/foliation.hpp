#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "curvefol/groebner.hpp"
#include "curvefol/poly.hpp"

namespace curvefol {

/// Vector field f_1 d/dz_1 + ... + f_n d/dz_n in one standard chart of P^n,
/// for a foliation of declared degree k.
class AffineFoliation {
 public:
  /// Throws ValidationError unless there are exactly arity components, not
  /// all zero, each of degree <= k+1, with the degree k+1 layer a common
  /// multiple g * (z_1, ..., z_n) of the radial field.
  AffineFoliation(PolyRing ring, std::vector<MultiPoly> components, unsigned degree, std::size_t chart = 0);

  const PolyRing& ring() const noexcept { return ring_; }
  std::size_t dimension() const noexcept { return ring_.arity(); }
  std::span<const MultiPoly> components() const noexcept { return components_; }
  const MultiPoly& component(std::size_t i) const { return components_.at(i); }
  unsigned degree() const noexcept { return degree_; }
  std::size_t chart() const noexcept { return chart_; }
  /// The g with layer_{k+1}(f_i) = g * z_i; zero when there is no such layer.
  const MultiPoly& radial_factor() const noexcept { return radial_factor_; }

 private:
  PolyRing ring_;
  std::vector<MultiPoly> components_;
  unsigned degree_;
  std::size_t chart_;
  MultiPoly radial_factor_;
};

/// Parses n component strings over `variables`.
AffineFoliation parse_foliation(const std::vector<std::string>& variables,
                                const std::vector<std::string>& components, unsigned degree);

/// Degree-k foliation on P^n presented by its chart-0 field. Other charts
/// and the homogeneous model are derived on demand.
class ProjectiveFoliation {
 public:
  explicit ProjectiveFoliation(AffineFoliation chart0);

  std::size_t dimension() const noexcept { return chart0_.dimension(); }
  unsigned degree() const noexcept { return chart0_.degree(); }
  const AffineFoliation& chart0() const noexcept { return chart0_; }

  /// Ring x0, ..., xn of homogeneous coordinates.
  const PolyRing& homogeneous_ring() const noexcept { return homogeneous_ring_; }
  /// Degree-k homogeneous field (F_0, ..., F_n) with F restricted to x0 = 1
  /// giving back chart 0 after the usual z_i = x_i / x0 reduction.
  std::span<const MultiPoly> homogeneous_field() const noexcept { return homogeneous_; }

  /// Ring of chart c: chart 0 keeps the user's names, chart c > 0 uses
  /// x_i = X_i / X_c for i != c.
  PolyRing chart_ring(std::size_t c) const;
  AffineFoliation chart(std::size_t c) const;

  /// Homogenization in x0..xn of a polynomial in the chart-0 ring.
  MultiPoly homogenize(const MultiPoly& p) const;
  /// Restriction of a homogeneous polynomial in x0..xn to chart c.
  MultiPoly dehomogenize(const MultiPoly& homogeneous, std::size_t c) const;
  Ideal dehomogenize(const Ideal& homogeneous, std::size_t c) const;

 private:
  AffineFoliation chart0_;
  PolyRing homogeneous_ring_;
  std::vector<MultiPoly> homogeneous_;
};

Ideal sing_ideal_chart(const AffineFoliation& f);
AffineFoliation chart_transition(const ProjectiveFoliation& f, std::size_t target_chart);

/// Singular ideal of chart c saturated by every curve (homogeneous ideals
/// in x0..xn), i.e. the scheme of the remaining singular points there.
Ideal isolated_part(const ProjectiveFoliation& f, std::size_t chart, std::span<const Ideal> curves);

struct ChartCount {
  std::size_t chart = 0;
  std::uint64_t colength = 0;        // after removing the curves
  std::uint64_t already_counted = 0;  // part supported where an earlier chart is defined
  std::uint64_t new_length = 0;
  std::size_t basis_size = 0;
};

struct MilnorTotal {
  std::uint64_t total = 0;
  std::vector<ChartCount> charts;
};

/// Sum of Milnor numbers at the isolated singular points: the colength of
/// isolated_part in every chart, where a chart only counts the length
/// invisible from the charts before it. Throws DimensionError naming the chart if a residue is not
/// zero-dimensional.
MilnorTotal total_isolated_milnor(const ProjectiveFoliation& f, std::span<const Ideal> curves);

}  // namespace curvefol
