#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "curvefol/poly.hpp"

namespace curvefol {

/// Total, multiplicative, well-founded monomial order on a fixed ring.
class MonomialOrder {
 public:
  enum class Kind { degrevlex, lex, block };

  static MonomialOrder degrevlex(const PolyRing& ring);
  static MonomialOrder lex(const PolyRing& ring);
  /// Eliminates `front`: any monomial involving a front variable is larger
  /// than every monomial free of them. Grevlex inside each block.
  static MonomialOrder block(const PolyRing& ring, std::span<const std::size_t> front);

  Kind kind() const noexcept { return kind_; }
  const PolyRing& ring() const noexcept { return ring_; }
  const std::vector<bool>& front_mask() const noexcept { return front_; }

  /// Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  /// Leading term of a nonzero polynomial under this order.
  const Term& leading_term(const MultiPoly& p) const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.ring_ == b.ring_ && a.front_ == b.front_;
  }

 private:
  MonomialOrder(Kind kind, PolyRing ring, std::vector<bool> front)
      : kind_(kind), ring_(std::move(ring)), front_(std::move(front)) {}

  Kind kind_;
  PolyRing ring_;
  std::vector<bool> front_;
};

/// Ideal presented by generators. Zero generators are dropped on
/// construction, so the zero ideal has an empty generator list.
class Ideal {
 public:
  Ideal(PolyRing ring, std::vector<MultiPoly> generators);
  static Ideal unit(const PolyRing& ring);

  const PolyRing& ring() const noexcept { return ring_; }
  std::span<const MultiPoly> generators() const noexcept { return generators_; }
  bool is_zero() const noexcept { return generators_.empty(); }

 private:
  PolyRing ring_;
  std::vector<MultiPoly> generators_;
};

/// Reduced Gröbner basis: monic, inter-reduced, sorted by ascending leading
/// monomial. Unique for a given ideal and order.
class GroebnerBasis {
 public:
  GroebnerBasis(MonomialOrder order, std::vector<MultiPoly> basis);

  const MonomialOrder& order() const noexcept { return order_; }
  const PolyRing& ring() const noexcept { return order_.ring(); }
  std::span<const MultiPoly> basis() const noexcept { return basis_; }
  std::span<const Monomial> leading_monomials() const noexcept { return leads_; }
  bool is_unit() const noexcept;
  Ideal ideal() const { return Ideal(ring(), basis_); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.order_ == b.order_ && a.basis_ == b.basis_;
  }

 private:
  MonomialOrder order_;
  std::vector<MultiPoly> basis_;
  std::vector<Monomial> leads_;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t reductions_to_zero = 0;
  std::size_t basis_size = 0;
};

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, GroebnerStats* stats = nullptr);

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& basis);
bool is_member(const MultiPoly& p, const GroebnerBasis& basis);
/// Every generator of `ideal` reduces to zero modulo `basis`.
bool contains(const GroebnerBasis& basis, const Ideal& ideal);
/// Equal ideals, compared through their reduced degrevlex bases.
bool same_ideal(const Ideal& a, const Ideal& b);

/// I ∩ k[remaining variables], returned in the ring without `drop_vars`.
Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> drop_vars);
Ideal eliminate(const Ideal& ideal, std::span<const std::string> drop_vars);

Ideal intersect(const Ideal& a, const Ideal& b);
/// I : f^∞ through the fresh-variable construction I + (1 - t f).
Ideal saturate_single(const Ideal& ideal, const MultiPoly& f);
/// I : J^∞ as the intersection of the single saturations by J's generators.
Ideal saturate(const Ideal& ideal, const Ideal& by);

bool is_zero_dimensional(const GroebnerBasis& basis);
/// Number of standard monomials, i.e. dim_k k[x]/I. Throws DimensionError
/// naming a variable with no pure power among the leading monomials.
std::uint64_t colength(const GroebnerBasis& basis);
/// Convenience: degrevlex basis then colength.
std::uint64_t colength(const Ideal& ideal);

}  // namespace curvefol
