#pragma once

#include <map>
#include <vector>

#include "mps/polynomial.hpp"

namespace mps {

/// Dense row-major matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const RingPtr& ring() const noexcept { return ring_; }

  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const std::vector<Polynomial>& entries() const noexcept { return entries_; }

  /// Entry-wise substitution into `target`.
  PolyMatrix substituted(const std::map<std::size_t, Polynomial>& images, const RingPtr& target) const;

  bool operator==(const PolyMatrix& other) const;

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

/// Determinant of the square submatrix on the given rows and columns, by
/// cofactor expansion along the first selected row. The empty minor is 1.
Polynomial minor_determinant(const PolyMatrix& M, const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols);

/// All r x r minors. Row subsets are enumerated lexicographically in the outer
/// loop and column subsets lexicographically in the inner loop.
std::vector<Polynomial> minors(const PolyMatrix& M, std::size_t r);

/// All k-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> lexicographic_subsets(std::size_t n, std::size_t k);

}  // namespace mps
