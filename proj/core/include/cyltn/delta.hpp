#ifndef CYLTN_DELTA_HPP
#define CYLTN_DELTA_HPP

#include <vector>

#include "cyltn/tl.hpp"
#include "cyltn/tncheck.hpp"

namespace cyltn {

// Support structure for proving that corner elimination preserves total
// nonnegativity. Given a corner of M with pivot rows (i*-1, i*) and a
// submatrix selection (I, J) taken in the eliminated matrix M', this bundles:
//
//   A       rows of I in the residue class of i* whose predecessor row is
//           not in I (the rows the elimination actually changed, up to
//           in-place cancellation),
//   A_minus the predecessor rows {r-1 : r in A},
//   C       one copy of the corner column j* + k*m per row i* + k*n in A,
//   rows    I united with A_minus, sorted,
//   cols    J merged with C; on ties the C copy precedes the J copy,
//   tilde   the generalized window of M on (rows, cols),
//   diagram the decorated two-column diagram: left dot black exactly at the
//           C copies, right column gray blocks on the (r-1, r) pairs and
//           black dots elsewhere.
struct DeltaMachinery {
  CornerLocation corner;
  std::vector<long> I, J;
  std::vector<long> A, A_minus, C;
  std::vector<long> rows;
  std::vector<long> cols;
  std::vector<bool> col_from_c;
  DenseMatrix tilde{0, 0};
  DecoratedCmDiagram diagram;
};

// I and J must be strictly increasing, >= 1, of equal size. Throws
// std::invalid_argument when any derived row of A_minus or column of C
// would fall below 1 (the selection then has no positive-index realization).
DeltaMachinery build_delta_machinery(const LoopMatrix& m,
                                     const CornerLocation& corner,
                                     const std::vector<long>& I,
                                     const std::vector<long>& J);

// The specialized window of M with rows (I \ S) united with {r-1 : r in S},
// columns J. S must be a subset of A.
DenseMatrix delta_s(const LoopMatrix& m, const CornerLocation& corner,
                    const std::vector<long>& I, const std::vector<long>& J,
                    const std::vector<long>& S);

// Verifies the full chain of identities connecting det of the window of the
// eliminated matrix to the decorated diagram evaluated on tilde:
//   (1) det window(M', I, J) = sum over S subset A of (-c)^|S| det Delta^S,
//   (2) det tilde[pos(S u (A\S)-), pos(C)] = a0^|S| * b0^(|A|-|S|),
//   (3) det Delta^S = det tilde[pos((I\S) u S-), pos(J)],
//   (4) b0^|A| * det window(M', I, J) = signed sum over the expanded
//       decorated diagram of complementary minor immanants of tilde.
// Returns true iff all four hold exactly.
bool verify_dcmd_det(const LoopMatrix& m, const CornerLocation& corner,
                     const std::vector<long>& I, const std::vector<long>& J);

}  // namespace cyltn

#endif
