#include "curvefol/matrix.hpp"

#include <utility>

namespace curvefol {

PolyMatrix::PolyMatrix(const PolyRing& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, MultiPoly(ring)) {}

PolyMatrix PolyMatrix::with_column(std::size_t c, std::span<const MultiPoly> column) const {
  if (column.size() != rows_) throw ValidationError("replacement column has the wrong length");
  PolyMatrix out(*this);
  for (std::size_t r = 0; r < rows_; ++r) out.at(r, c) = column[r];
  return out;
}

PolyMatrix jacobian(std::span<const MultiPoly> fs) {
  if (fs.empty()) throw ValidationError("jacobian of an empty list");
  const PolyRing& ring = fs[0].ring();
  PolyMatrix j(ring, fs.size(), ring.arity());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!(fs[i].ring() == ring)) throw RingMismatch("jacobian entries live in different rings");
    for (std::size_t v = 0; v < ring.arity(); ++v) j.at(i, v) = derivative(fs[i], v);
  }
  return j;
}

namespace {

MultiPoly cofactor_determinant(const PolyMatrix& m) {
  const auto n = m.rows();
  if (n == 1) return m.at(0, 0);
  if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
         m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
         m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
}

MultiPoly bareiss_determinant(PolyMatrix a) {
  const auto n = a.rows();
  bool negate = false;
  MultiPoly previous = MultiPoly::constant(a.ring(), 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a.at(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return MultiPoly(a.ring());
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(swap_row, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = exact_divide(num, previous);
      }
      a.at(i, k) = MultiPoly(a.ring());
    }
    previous = a.at(k, k);
  }
  MultiPoly det = a.at(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace

MultiPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of a non-square matrix");
  if (m.rows() == 0) return MultiPoly::constant(m.ring(), 1);
  if (m.rows() <= 3) return cofactor_determinant(m);
  return bareiss_determinant(m);
}

std::vector<MultiPoly> multiply(const PolyMatrix& m, std::span<const MultiPoly> v) {
  if (v.size() != m.cols()) throw ValidationError("matrix-vector size mismatch");
  std::vector<MultiPoly> out(m.rows(), MultiPoly(m.ring()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m.at(r, c) * v[c];
  return out;
}

}  // namespace curvefol
