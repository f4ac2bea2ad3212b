#ifndef CYLTN_DENSE_HPP
#define CYLTN_DENSE_HPP

#include <vector>

#include "cyltn/rational.hpp"

namespace cyltn {

// Finite matrix of exact rationals. Accessors are 1-based throughout to
// match the indexing of the periodic matrices this library works with.
class DenseMatrix {
 public:
  DenseMatrix(long rows, long cols);  // zero-filled; rows, cols >= 0
  static DenseMatrix identity(long k);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  const Rational& at(long i, long j) const;
  void set(long i, long j, const Rational& v);

  // Generalized submatrix: row/col index lists may repeat. Indices 1-based.
  DenseMatrix submatrix(const std::vector<long>& row_idx,
                        const std::vector<long>& col_idx) const;
  DenseMatrix transpose() const;

  // Exact determinant by fraction-full Gaussian elimination.
  // Requires a square matrix; the empty 0x0 matrix has determinant 1.
  Rational determinant() const;

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) {
    return !(a == b);
  }

 private:
  long rows_, cols_;
  std::vector<Rational> a_;
};

// The sorted elements of {1..k} not contained in subset. subset must be
// strictly increasing and within range.
std::vector<long> position_complement(const std::vector<long>& subset, long k);

// All k-element subsets of {1..universe} in lexicographic order.
std::vector<std::vector<long>> k_subsets(long universe, long k);

}  // namespace cyltn

#endif
