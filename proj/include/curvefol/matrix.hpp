#pragma once

#include <span>
#include <vector>

#include "curvefol/poly.hpp"

namespace curvefol {

/// Dense row-major matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix(const PolyRing& ring, std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const PolyRing& ring() const noexcept { return ring_; }

  MultiPoly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const MultiPoly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  /// Copy with column `c` replaced by `column`.
  PolyMatrix with_column(std::size_t c, std::span<const MultiPoly> column) const;

 private:
  PolyRing ring_;
  std::size_t rows_, cols_;
  std::vector<MultiPoly> entries_;
};

/// Entry (i, j) is d fs[i] / d z_j over all variables of the shared ring.
PolyMatrix jacobian(std::span<const MultiPoly> fs);

/// Cofactor expansion up to 3x3, fraction-free Bareiss elimination above.
/// Throws ValidationError for non-square input.
MultiPoly determinant(const PolyMatrix& m);

std::vector<MultiPoly> multiply(const PolyMatrix& m, std::span<const MultiPoly> v);

}  // namespace curvefol
