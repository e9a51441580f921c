#pragma once

#include "polyhodge/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace polyhodge {

// A point of Z^n, stored densely.
using LatticePoint = std::vector<Int>;

bool lex_less(const LatticePoint& a, const LatticePoint& b);

// Dense integer matrix. Columns usually play the role of cone generators, so
// the builders favor column-wise construction.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix from_columns(const std::vector<LatticePoint>& columns);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  LatticePoint column(std::size_t c) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

// Exact determinant by fraction-free (Bareiss) elimination.
// Throws std::invalid_argument on non-square input.
Int det(const IntMatrix& m);

// Solves generators * q = v exactly over Q. Returns the coefficient vector,
// or nullopt when v lies outside the column span. Throws std::invalid_argument
// when the columns are linearly dependent.
std::optional<std::vector<Rational>> solve_rational(const IntMatrix& generators,
                                                    const LatticePoint& v);

struct ParallelepipedPoint {
  LatticePoint point;
  std::vector<Rational> coefficients;  // one per generator column
};

// Lattice points of the *open* parallelepiped {sum q_i b_i : 0 < q_i < 1},
// found by scanning the integer bounding box and solving each candidate
// exactly. Output is sorted lexicographically by point. Throws
// std::invalid_argument when the columns are dependent.
std::vector<ParallelepipedPoint> enumerate_open_parallelepiped(const IntMatrix& generators);

// Lattice points of the *half-open* parallelepiped {sum q_i b_i : 0 <= q_i < 1}
// of a nonsingular square matrix: exactly |det b| points (coset representatives
// of Z^n / bZ^n), enumerated by closing {0} under x -> b*frac(b^{-1}(x +- e_i)).
// Output is sorted lexicographically by point; the origin is included.
std::vector<ParallelepipedPoint> half_open_parallelepiped(const IntMatrix& b);

}  // namespace polyhodge
