#ifndef CYLTN_LOOP_MATRIX_HPP
#define CYLTN_LOOP_MATRIX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cyltn/dense.hpp"
#include "cyltn/laurent.hpp"

namespace cyltn {

// Folded form of an (n,m)-periodic infinite matrix with finitely many
// nonzero block diagonals: an n x m grid of Laurent polynomials, where the
// coefficient of t^g in entry (i,j) is the infinite matrix's entry at global
// position (i, j + g*m).
//
// The infinite matrix extends periodically to all integer row and column
// indices; unfold_entry exposes the positive quadrant and
// unfold_entry_extended the full periodic extension.
class LoopMatrix {
 public:
  LoopMatrix(long n, long m);  // zero matrix; n, m >= 1
  static LoopMatrix identity(long n);

  long n() const { return n_; }
  long m() const { return m_; }
  const LaurentPoly& entry(long i, long j) const;  // 1-based residues
  void set_entry(long i, long j, const LaurentPoly& p);
  void add_unfolded(long I, long J, const Rational& v);  // any integers I, J

  // Entry of the unfolded infinite matrix at (I, J), both >= 1.
  Rational unfold_entry(long I, long J) const;
  // Periodic extension of the unfolding to all integer positions.
  Rational unfold_entry_extended(long I, long J) const;

  // Dense windows of the unfolding. Indices must be >= 1; lists may repeat
  // (generalized submatrices).
  DenseMatrix window(long rows, long cols) const;
  DenseMatrix window(const std::vector<long>& row_idx,
                     const std::vector<long>& col_idx) const;

  // Folded transpose. Transposing the infinite matrix swaps the roles of n
  // and m and negates every Laurent degree: entry (j,i) becomes
  // entry(i,j)(1/t). The degree negation is load-bearing; without it the
  // transpose of a periodic matrix folds to the wrong block diagonals.
  LoopMatrix transpose() const;

  bool is_zero() const;
  bool row_is_zero(long i) const;
  bool col_is_zero(long j) const;
  LoopMatrix drop_row(long i) const;  // requires n >= 2
  LoopMatrix drop_col(long j) const;  // requires m >= 2

  long nonzero_coeff_count() const;
  // Min and max Laurent degree over all entries; nullopt for the zero matrix.
  std::optional<std::pair<long, long>> degree_range() const;

  friend bool operator==(const LoopMatrix& a, const LoopMatrix& b);
  friend bool operator!=(const LoopMatrix& a, const LoopMatrix& b) {
    return !(a == b);
  }

 private:
  long n_, m_;
  std::vector<std::vector<LaurentPoly>> e_;
};

// Folded matrix product / sum. Folding is a ring homomorphism, so these
// agree with multiplying / adding the unfolded infinite matrices.
LoopMatrix loop_mul(const LoopMatrix& a, const LoopMatrix& b);
LoopMatrix loop_add(const LoopMatrix& a, const LoopMatrix& b);

}  // namespace cyltn

#endif
