#ifndef CYLTN_TNCHECK_HPP
#define CYLTN_TNCHECK_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cyltn/loop_matrix.hpp"

namespace cyltn {

// A square submatrix of the unfolding with negative determinant: certificate
// that the matrix is not totally nonnegative. Indices are global (>= 1),
// strictly increasing.
struct MinorWitness {
  std::vector<long> rows;
  std::vector<long> cols;
  Rational value;
};

// Scans all minors of order <= max_order inside the window with rows
// 1..row_span*n and columns 1..row_span*m + support_width*m, where
// support_width is the number of occupied block diagonals. Returns the first
// negative minor in lexicographic (order, rows, cols) order, or nullopt when
// none exists in that window. max_order <= 0 selects min(4, n*row_span).
//
// A witness refutes total nonnegativity outright; a pass is evidence only
// for the scanned window.
std::optional<MinorWitness> is_tn_window(const LoopMatrix& m, long row_span = 3,
                                         long max_order = 0);

// True when every unfolded row and column has contiguous support (no zero
// entry strictly between two nonzero ones). Requires no zero rows/columns.
bool convex_support(const LoopMatrix& m);

// Leftmost global column index with a nonzero entry, per folded row.
// Can be <= 0 when negative Laurent degrees are present. Throws on zero rows.
std::vector<long> row_leftmost_support(const LoopMatrix& m);

// Position of a special SW corner: entry (i_star, j_star) is nonzero, all
// entries below or left of it vanish, and it is the only nonzero entry below
// or left of (i_star - 1, j_star). a0 and b0 are the entries at
// (i_star, j_star) and (i_star - 1, j_star); specialness forces b0 != 0.
//
// j_star is a global column index and can be <= 0 when the support includes
// negative block diagonals.
struct CornerLocation {
  long i_star;
  long j_star;
  Rational a0;
  Rational b0;
};

// Looks for a special SW corner among the residue classes i_star in
// {2..n+1}, preferring the largest residue. Requires no zero rows and a
// weakly increasing leftmost-support sequence; a decrease proves the matrix
// is not totally nonnegative and is reported as std::invalid_argument with a
// distinct message ("support is not weakly monotone").
std::optional<CornerLocation> find_special_sw_corner(const LoopMatrix& m);

// The periodic elementary row operation that zeroes the corner: subtracts
// c = a0/b0 times row r-1 from every row r congruent to i_star. For the
// wrapping residue (i_star = n+1) the subtracted row is the previous period's
// last row, which shifts Laurent degrees down by one. Returns (c, M').
std::pair<Rational, LoopMatrix> apply_corner_elimination(
    const LoopMatrix& m, const CornerLocation& corner);

// Loewner-Whitney generators as folded square matrices: identity plus value
// at one off-diagonal position (upper/lower), or the identity with one
// diagonal entry replaced (diagonal). value must be >= 0.
enum class LwKind { Upper, Lower, Diagonal };
LoopMatrix lw_generator(long size, LwKind kind, long position,
                        const Rational& value);

}  // namespace cyltn

#endif
