#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "curvefol/deformation.hpp"
#include "curvefol/foliation.hpp"

namespace fixtures {

// Small deterministic integer stream for "generic" coefficients; kept here
// rather than std::uniform_int_distribution so values are identical on every
// standard library.
class Coefficients {
 public:
  explicit Coefficients(std::uint32_t seed) : state_(seed) {}
  long next(long bound = 9) {
    state_ = state_ * 1103515245u + 12345u;
    long v = static_cast<long>((state_ >> 16) % static_cast<std::uint32_t>(2 * bound + 1)) - bound;
    return v == 0 ? bound : v;
  }

 private:
  std::uint32_t state_;
};

// Exponent vectors of total degree `degree` in `vars` variables.
inline std::vector<std::vector<unsigned>> multi_indices(std::size_t vars, unsigned degree) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> a(vars, 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos + 1 == vars) {
      a[pos] = left;
      out.push_back(a);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      a[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

inline std::string monomial_text(const std::vector<unsigned>& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "z" + std::to_string(i + 1);
    if (a[i] > 1) out += "^" + std::to_string(a[i]);
  }
  return out.empty() ? "1" : out;
}

// The special family along the z_n-axis: f_i (i < n) generic forms of degree
// k in z_1..z_{n-1}, f_n = sum over |a| = k-1 of z^a times a generic affine
// function of z_1..z_n.
inline curvefol::AffineFoliation special_family(std::size_t n, unsigned k, std::uint32_t seed = 2024) {
  Coefficients c(seed);
  std::vector<std::string> names, comps;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("z" + std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::string f;
    for (const auto& a : multi_indices(n - 1, k)) {
      if (!f.empty()) f += " + ";
      f += "(" + std::to_string(c.next()) + ")*" + monomial_text(a);
    }
    comps.push_back(f);
  }
  std::string last;
  for (const auto& a : multi_indices(n - 1, k - 1)) {
    std::string h = std::to_string(c.next());
    for (std::size_t j = 1; j <= n; ++j) h += " + (" + std::to_string(c.next()) + ")*z" + std::to_string(j);
    if (!last.empty()) last += " + ";
    last += monomial_text(a) + "*(" + h + ")";
  }
  comps.push_back(last);
  return curvefol::parse_foliation(names, comps, k);
}

// Homogeneous ideal of the line x_1 = ... = x_{n-1} = 0.
inline curvefol::Ideal axis_line(const curvefol::ProjectiveFoliation& f) {
  std::vector<curvefol::MultiPoly> gens;
  for (std::size_t i = 1; i < f.dimension(); ++i) gens.push_back(curvefol::MultiPoly::variable(f.homogeneous_ring(), i));
  return curvefol::Ideal(f.homogeneous_ring(), gens);
}

// Family on P^3 with a = (1, 0, 1), b = (-2, 2, 2), so the lambda_i are
// 1, 2, -1, and alpha = (1, 1, 1, 2), beta = (2, *, 1, 1).
inline curvefol::AffineFoliation family_on_p3(const curvefol::Rational& t) {
  using curvefol::MultiPoly;
  curvefol::PolyRing ring({"z1", "z2", "z3"});
  auto z1 = MultiPoly::variable(ring, 0), z2 = MultiPoly::variable(ring, 1), z3 = MultiPoly::variable(ring, 2);
  auto one = MultiPoly::constant(ring, 1);
  auto c = [&](long v) { return MultiPoly::constant(ring, v); };
  auto tt = MultiPoly::constant(ring, t);
  std::vector<MultiPoly> comps{
      z1 * z1 + z2 * z2,
      c(-2) * z1 * z1 + c(2) * z1 * z2 + c(2) * z2 * z2,
      z1 * (one + z1 + (one - tt) * z2 + c(2) * z3) + z2 * (c(2) + tt * z1 + z2 + z3),
  };
  return curvefol::AffineFoliation(ring, comps, 2);
}

struct FamilyPoint {
  curvefol::Rational lambda, u;
};

inline std::vector<FamilyPoint> family_points() {
  return {{1, curvefol::Rational(-1, 3)}, {2, curvefol::Rational(1, 7)}, {-1, 1}};
}

// Homogeneous ideal of the points [0 : u : lambda u : 1].
inline curvefol::Ideal family_points_ideal(const curvefol::ProjectiveFoliation& f) {
  using curvefol::MultiPoly;
  const auto& R = f.homogeneous_ring();
  std::optional<curvefol::Ideal> out;
  for (const auto& p : family_points()) {
    auto x = [&](std::size_t i) { return MultiPoly::variable(R, i); };
    curvefol::Ideal point(R, {x(0), x(1) - p.u * x(3), x(2) - p.lambda * p.u * x(3)});
    out = out ? curvefol::intersect(*out, point) : point;
  }
  return *out;
}

// Model field for the deformation checks: the special family in w1..w3.
inline curvefol::ModelField model_field(unsigned k = 2) {
  auto f = special_family(3, k);
  curvefol::PolyRing w({"w1", "w2", "w3"});
  std::vector<curvefol::MultiPoly> comps;
  for (const auto& c : f.components()) comps.push_back(curvefol::substitute(c, std::vector{
      curvefol::MultiPoly::variable(w, 0), curvefol::MultiPoly::variable(w, 1), curvefol::MultiPoly::variable(w, 2)}));
  return curvefol::ModelField(w, comps);
}

inline curvefol::CompleteIntersectionData ci_data(const std::vector<std::string>& f, const std::vector<std::string>& h) {
  curvefol::PolyRing z({"z1", "z2", "z3"});
  std::vector<curvefol::MultiPoly> fs, hs;
  for (const auto& s : f) fs.push_back(curvefol::parse_poly(s, z));
  for (const auto& s : h) hs.push_back(curvefol::parse_poly(s, z));
  return curvefol::CompleteIntersectionData(z, fs, hs);
}

// A linear curve moved by a linear perturbation, so F_t is an affine
// automorphism and the built field stays a degree-k foliation.
inline curvefol::CompleteIntersectionData linear_ci() { return ci_data({"z1", "z2"}, {"z3", "1"}); }

// Quadric equations moved by constants.
inline curvefol::CompleteIntersectionData quadric_ci() {
  return ci_data({"z1 + z2^2", "z2 - z1*z3"}, {"1", "-2"});
}

// Field on z1, z2, z3 with degree <= 3 components, each a few random terms
// divisible by z1 or z2, so it vanishes along the z3-axis.
inline curvefol::VectorField random_axis_field(std::mt19937& rng) {
  using curvefol::Monomial;
  static const curvefol::PolyRing ring({"z1", "z2", "z3"});
  std::uniform_int_distribution<int> coef(-3, 3), pick(1, 3);
  std::vector<Monomial> pool;
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned b = 0; a + b <= 3; ++b)
      for (unsigned c = 0; a + b + c <= 3; ++c)
        if (a + b > 0) pool.push_back(Monomial({a, b, c}));
  std::uniform_int_distribution<std::size_t> mono(0, pool.size() - 1);
  std::vector<curvefol::MultiPoly> comps;
  for (int i = 0; i < 3; ++i) {
    std::vector<curvefol::Term> terms;
    for (int t = pick(rng); t > 0; --t) terms.push_back({pool[mono(rng)], curvefol::Rational(coef(rng))});
    comps.push_back(curvefol::MultiPoly::from_terms(ring, terms));
  }
  return curvefol::VectorField(ring, comps);
}

}  // namespace fixtures
