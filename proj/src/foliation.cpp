#include "curvefol/foliation.hpp"

namespace curvefol {

namespace {

// g with layer == g * (z_1, ..., z_n), or nullopt when the layer is not a
// multiple of the radial field.
std::optional<MultiPoly> radial_quotient(const PolyRing& ring, const std::vector<MultiPoly>& layer) {
  std::optional<MultiPoly> g;
  for (std::size_t i = 0; i < layer.size() && !g; ++i) {
    if (layer[i].is_zero()) continue;
    if (variable_valuation(layer[i], i) == 0) return std::nullopt;
    g = divide_by_variable_power(layer[i], i, 1);
  }
  if (!g) return MultiPoly(ring);
  for (std::size_t i = 0; i < layer.size(); ++i)
    if (!(layer[i] == *g * MultiPoly::variable(ring, i))) return std::nullopt;
  return g;
}

}  // namespace

AffineFoliation::AffineFoliation(PolyRing ring, std::vector<MultiPoly> components, unsigned degree,
                                 std::size_t chart)
    : ring_(std::move(ring)), components_(std::move(components)), degree_(degree), chart_(chart),
      radial_factor_(ring_) {
  if (components_.size() != ring_.arity())
    throw ValidationError("foliation needs " + std::to_string(ring_.arity()) + " components, got " +
                          std::to_string(components_.size()));
  bool all_zero = true;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (!(components_[i].ring() == ring_)) throw RingMismatch("foliation component in a different ring");
    if (components_[i].total_degree() > static_cast<long>(degree_) + 1)
      throw ValidationError("component " + std::to_string(i + 1) + " has degree " +
                            std::to_string(components_[i].total_degree()) + " > k+1 = " +
                            std::to_string(degree_ + 1));
    all_zero = all_zero && components_[i].is_zero();
  }
  if (all_zero) throw ValidationError("foliation components are all zero");
  std::vector<MultiPoly> top;
  for (const auto& c : components_) top.push_back(c.homogeneous_part(degree_ + 1));
  auto g = radial_quotient(ring_, top);
  if (!g)
    throw ValidationError("degree k+1 = " + std::to_string(degree_ + 1) +
                          " part is not a multiple of the radial field");
  radial_factor_ = std::move(*g);
}

AffineFoliation parse_foliation(const std::vector<std::string>& variables,
                                const std::vector<std::string>& components, unsigned degree) {
  PolyRing ring(variables);
  std::vector<MultiPoly> fs;
  for (const auto& c : components) fs.push_back(parse_poly(c, ring));
  return AffineFoliation(ring, std::move(fs), degree);
}

namespace {

PolyRing make_homogeneous_ring(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return PolyRing(names);
}

}  // namespace

ProjectiveFoliation::ProjectiveFoliation(AffineFoliation chart0)
    : chart0_(std::move(chart0)), homogeneous_ring_(make_homogeneous_ring(chart0_.dimension())) {
  if (chart0_.chart() != 0) throw ValidationError("projective foliation must be given in chart 0");
  const std::size_t n = dimension();
  const unsigned k = degree();
  // z_i -> x_i, then pad each layer with powers of x0 up to degree k.
  std::vector<MultiPoly> lift;
  for (std::size_t i = 0; i < n; ++i) lift.push_back(MultiPoly::variable(homogeneous_ring_, i + 1));
  MultiPoly x0 = MultiPoly::variable(homogeneous_ring_, std::size_t{0});
  homogeneous_.push_back(-substitute(chart0_.radial_factor(), lift));
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly acc(homogeneous_ring_);
    for (unsigned j = 0; j <= k; ++j) {
      MultiPoly layer = chart0_.component(i).homogeneous_part(j);
      if (!layer.is_zero()) acc += x0.pow(k - j) * substitute(layer, lift);
    }
    homogeneous_.push_back(std::move(acc));
  }
}

PolyRing ProjectiveFoliation::chart_ring(std::size_t c) const {
  if (c > dimension()) throw ValidationError("chart index " + std::to_string(c) + " out of range");
  if (c == 0) return chart0_.ring();
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= dimension(); ++i)
    if (i != c) names.push_back("x" + std::to_string(i));
  return PolyRing(names);
}

MultiPoly ProjectiveFoliation::homogenize(const MultiPoly& p) const {
  if (!(p.ring() == chart0_.ring())) throw RingMismatch("homogenize expects a polynomial in the chart-0 ring");
  std::vector<MultiPoly> lift;
  for (std::size_t i = 0; i < dimension(); ++i) lift.push_back(MultiPoly::variable(homogeneous_ring_, i + 1));
  MultiPoly x0 = MultiPoly::variable(homogeneous_ring_, std::size_t{0});
  const long top = p.total_degree();
  MultiPoly out(homogeneous_ring_);
  for (long j = 0; j <= top; ++j) {
    MultiPoly layer = p.homogeneous_part(static_cast<unsigned>(j));
    if (!layer.is_zero()) out += x0.pow(static_cast<unsigned>(top - j)) * substitute(layer, lift);
  }
  return out;
}

MultiPoly ProjectiveFoliation::dehomogenize(const MultiPoly& homogeneous, std::size_t c) const {
  if (!(homogeneous.ring() == homogeneous_ring_))
    throw RingMismatch("dehomogenize expects a polynomial in x0..xn");
  PolyRing target = chart_ring(c);
  std::vector<MultiPoly> images;
  for (std::size_t i = 0, slot = 0; i <= dimension(); ++i)
    images.push_back(i == c ? MultiPoly::constant(target, 1) : MultiPoly::variable(target, slot++));
  return substitute(homogeneous, images);
}

Ideal ProjectiveFoliation::dehomogenize(const Ideal& homogeneous, std::size_t c) const {
  std::vector<MultiPoly> gens;
  for (const auto& g : homogeneous.generators()) gens.push_back(dehomogenize(g, c));
  return Ideal(chart_ring(c), std::move(gens));
}

AffineFoliation ProjectiveFoliation::chart(std::size_t c) const {
  if (c == 0) return chart0_;
  PolyRing target = chart_ring(c);
  std::vector<MultiPoly> dehom;
  for (const auto& f : homogeneous_) dehom.push_back(dehomogenize(f, c));
  std::vector<MultiPoly> components;
  for (std::size_t i = 0, slot = 0; i <= dimension(); ++i) {
    if (i == c) continue;
    components.push_back(dehom[i] - MultiPoly::variable(target, slot++) * dehom[c]);
  }
  return AffineFoliation(target, std::move(components), degree(), c);
}

Ideal sing_ideal_chart(const AffineFoliation& f) {
  return Ideal(f.ring(), std::vector<MultiPoly>(f.components().begin(), f.components().end()));
}

AffineFoliation chart_transition(const ProjectiveFoliation& f, std::size_t target_chart) {
  return f.chart(target_chart);
}

Ideal isolated_part(const ProjectiveFoliation& f, std::size_t chart, std::span<const Ideal> curves) {
  Ideal ideal = sing_ideal_chart(f.chart(chart));
  for (const auto& curve : curves) {
    Ideal local = f.dehomogenize(curve, chart);
    if (local.is_zero()) throw ValidationError("curve ideal vanishes identically in chart " + std::to_string(chart));
    ideal = saturate(ideal, local);
  }
  return ideal;
}

MilnorTotal total_isolated_milnor(const ProjectiveFoliation& f, std::span<const Ideal> curves) {
  MilnorTotal result;
  for (std::size_t c = 0; c <= f.dimension(); ++c) {
    Ideal ideal = isolated_part(f, c, curves);
    ChartCount count;
    count.chart = c;
    auto gb = buchberger(ideal, MonomialOrder::degrevlex(ideal.ring()));
    count.basis_size = gb.basis().size();
    try {
      count.colength = colength(gb);
      if (c > 0 && count.colength > 0) {
        // Earlier charts are where some x_j, j < c, is nonzero.
        std::vector<MultiPoly> earlier;
        for (std::size_t j = 0; j < c; ++j) earlier.push_back(MultiPoly::variable(ideal.ring(), j));
        count.already_counted = colength(saturate(ideal, Ideal(ideal.ring(), std::move(earlier))));
      }
    } catch (const DimensionError& e) {
      throw DimensionError("chart " + std::to_string(c) + ": " + e.what(), e.variable());
    }
    count.new_length = count.colength - count.already_counted;
    result.total += count.new_length;
    result.charts.push_back(count);
  }
  return result;
}

}  // namespace curvefol
