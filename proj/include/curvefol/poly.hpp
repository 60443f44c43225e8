#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curvefol/errors.hpp"
#include "curvefol/rational.hpp"

namespace curvefol {

/// Ordered list of distinct variable names. Copies share storage, so a ring
/// can be carried by every polynomial at pointer cost.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> names);

  std::size_t arity() const noexcept { return names_->size(); }
  const std::vector<std::string>& names() const noexcept { return *names_; }
  const std::string& name(std::size_t index) const { return names_->at(index); }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Like find() but throws ValidationError for unknown names.
  std::size_t index(std::string_view name) const;

  /// A name of the form stem, stem1, stem2... not already in the ring.
  std::string fresh_name(std::string_view stem) const;
  PolyRing with_variable(std::string name) const;
  PolyRing without_variables(std::span<const std::size_t> drop) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

bool is_identifier(std::string_view text);

class Monomial {
 public:
  using Exponent = std::uint32_t;

  explicit Monomial(std::size_t arity) : exponents_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {}

  std::size_t arity() const noexcept { return exponents_.size(); }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }
  Exponent& operator[](std::size_t i) { return exponents_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exponents_; }

  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;
  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;
  Monomial operator*(const Monomial& other) const;
  /// this / divisor; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;

  // Plain lexicographic comparison of exponent vectors; used for keys only.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exponents_;
};

/// Graded reverse-lexicographic comparison: negative if a < b.
int compare_grevlex(const Monomial& a, const Monomial& b) noexcept;

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Sparse polynomial with exact rational coefficients. Terms are kept sorted
/// by descending grevlex with no zero coefficients, so equality and printing
/// are canonical.
class MultiPoly {
 public:
  explicit MultiPoly(PolyRing ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(const PolyRing& ring, const Rational& value);
  static MultiPoly variable(const PolyRing& ring, std::size_t index);
  static MultiPoly variable(const PolyRing& ring, std::string_view name);
  static MultiPoly monomial(const PolyRing& ring, Monomial m, const Rational& coefficient = 1);
  /// Combines duplicate monomials and drops zeros.
  static MultiPoly from_terms(const PolyRing& ring, std::vector<Term> terms);

  const PolyRing& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// -1 for the zero polynomial.
  long total_degree() const noexcept;
  long degree_in(std::size_t var) const noexcept;
  /// Leading term under grevlex; requires a nonzero polynomial.
  const Term& leading_term() const;
  Rational coefficient(const Monomial& m) const;
  /// Sum of the terms of total degree exactly `degree`.
  MultiPoly homogeneous_part(unsigned degree) const;
  bool uses_variable(std::size_t var) const noexcept;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& scalar);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  MultiPoly pow(unsigned exponent) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Canonical text: grevlex order, explicit '*' and '^'.
  std::string to_string() const;

 private:
  void check_ring(const MultiPoly& other) const;

  PolyRing ring_;
  std::vector<Term> terms_;
};

MultiPoly parse_poly(std::string_view text, const PolyRing& ring);

/// Replaces every variable of p by its image; all images share one target
/// ring. `images.size()` must equal the arity of p's ring.
MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images);
/// Name-keyed form. Throws ValidationError if a variable that p uses has no
/// image.
MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& assignment,
                     const PolyRing& target);

/// Re-expresses p in `target`, matching variables by name. Every variable p
/// actually uses must exist in target.
MultiPoly embed(const MultiPoly& p, const PolyRing& target);

MultiPoly derivative(const MultiPoly& p, std::size_t var);
/// p with variable `var` set to `value`; stays in the same ring.
MultiPoly specialize(const MultiPoly& p, std::size_t var, const Rational& value);
/// Quotient a / b; throws ValidationError if b does not divide a.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);
MultiPoly divide_by_variable_power(const MultiPoly& p, std::size_t var, unsigned power);
/// Largest s with var^s dividing p (0 for the zero polynomial too).
unsigned variable_valuation(const MultiPoly& p, std::size_t var);

/// Vanishing order along a coordinate subspace: the minimum over terms of the
/// exponent sum in `vars`. Infinite for the zero polynomial.
class AxisOrder {
 public:
  static constexpr std::uint64_t kInfinite = std::numeric_limits<std::uint64_t>::max();

  constexpr AxisOrder() = default;
  constexpr explicit AxisOrder(std::uint64_t value) : value_(value) {}
  static constexpr AxisOrder infinity() { return AxisOrder(kInfinite); }

  constexpr bool is_infinite() const noexcept { return value_ == kInfinite; }
  /// Requires a finite order.
  std::uint64_t value() const;
  /// Saturating shift: infinity stays infinity; finite results may not go
  /// below zero.
  AxisOrder plus(std::int64_t delta) const;
  std::string to_string() const;

  friend constexpr auto operator<=>(AxisOrder, AxisOrder) = default;

 private:
  std::uint64_t value_ = 0;
};

AxisOrder order_along_axis(const MultiPoly& p, std::span<const std::size_t> axis_vars);

struct AxisLayerTerm {
  Monomial axis_monomial;  // only axis_vars exponents nonzero, degree == order
  MultiPoly cofactor;      // free of axis_vars
};

struct AxisDecomposition {
  std::uint64_t order;
  std::vector<AxisLayerTerm> layer;
  MultiPoly remainder;  // terms of strictly higher axis order
};

/// p = sum(axis_monomial * cofactor) + remainder, with the sum running over
/// the terms of minimal axis order. Throws ValidationError for p == 0.
AxisDecomposition axis_decompose(const MultiPoly& p, std::span<const std::size_t> axis_vars);

}  // namespace curvefol
