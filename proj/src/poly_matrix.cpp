#include "mps/poly_matrix.hpp"

#include "mps/error.hpp"

namespace mps {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring)) {}

PolyMatrix PolyMatrix::substituted(const std::map<std::size_t, Polynomial>& images, const RingPtr& target) const {
  PolyMatrix out(target, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = substitute(entries_[k], images, target);
  return out;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

Polynomial minor_determinant(const PolyMatrix& M, const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols) {
  if (rows.size() != cols.size()) throw Error(ErrorKind::InvalidArgument, "minor must be square");
  if (rows.empty()) return Polynomial::constant(M.ring(), Rational(1));
  if (rows.size() == 1) return M(rows[0], cols[0]);
  const std::vector<std::size_t> rest_rows(rows.begin() + 1, rows.end());
  Polynomial det(M.ring());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Polynomial& entry = M(rows[0], cols[c]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> rest_cols;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (k != c) rest_cols.push_back(cols[k]);
    }
    Polynomial cofactor = entry * minor_determinant(M, rest_rows, rest_cols);
    det = (c % 2 == 0) ? det + cofactor : det - cofactor;
  }
  return det;
}

std::vector<std::vector<std::size_t>> lexicographic_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

std::vector<Polynomial> minors(const PolyMatrix& M, std::size_t r) {
  if (r < 1 || r > std::min(M.rows(), M.cols())) {
    throw Error(ErrorKind::InvalidArgument, "minor size out of range");
  }
  std::vector<Polynomial> out;
  const auto row_sets = lexicographic_subsets(M.rows(), r);
  const auto col_sets = lexicographic_subsets(M.cols(), r);
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) out.push_back(minor_determinant(M, rs, cs));
  }
  return out;
}

}  // namespace mps
