#ifndef CYLTN_FACTOR_HPP
#define CYLTN_FACTOR_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyltn/network.hpp"
#include "cyltn/tncheck.hpp"

namespace cyltn {

// Raised when factorization refutes total nonnegativity. Carries a negative
// minor of the input when one was located; the reason string always explains
// what was found. A missing witness means the refutation is structural (for
// example, elimination produced a negative coefficient deep in the trace)
// and no negative minor small enough for the bounded window scan exists.
class NotTotallyNonnegative : public std::runtime_error {
 public:
  explicit NotTotallyNonnegative(const std::string& reason,
                                 std::optional<MinorWitness> witness = {});
  const std::optional<MinorWitness>& witness() const { return witness_; }

 private:
  std::optional<MinorWitness> witness_;
};

// Raised when the input may well be totally nonnegative but no factorization
// with rational weights can be produced (irrational factor weights, or a
// band shape outside the solvable widths). Never raised for inputs that are
// provably not totally nonnegative.
class FactorizationStuck : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class StepKind {
  CornerElim,      // special SW corner eliminated by a periodic row op
  NonspecialElim,  // band peel: bidiagonal or monomial slice split off
  RowDelete,       // zero row removed
  ColDelete,       // zero column removed
  BaseDiagonal     // terminal single-diagonal matrix realized directly
};
enum class StepSide { Left, Right };

std::string step_kind_name(StepKind k);

// One factorization event. piece is the network slice split off on the given
// side; resulting_matrix is the folded matrix that remains. For every step
// the identity  previous = W(piece) * resulting  (side Left) or
// previous = resulting * W(piece)  (side Right) is verified eagerly at
// construction time.
struct FactorStep {
  StepKind kind;
  StepSide side;
  CylNetwork piece;
  LoopMatrix resulting_matrix;
  std::string note;
};

struct FactorResult {
  std::vector<FactorStep> steps;
  CylNetwork network;
  bool certified;
};

// Splits off the elementary row network realizing the corner elimination.
// The corner shape guarantees b0 != 0 for corners found by the scanner; a
// vanishing b0 is rejected as std::invalid_argument. A negative ratio
// c = a0/b0 refutes total nonnegativity with a direct 1x1 witness.
// Returns (network piece, eliminated matrix).
std::pair<CylNetwork, LoopMatrix> eliminate_corner(const LoopMatrix& m,
                                                   const CornerLocation& c);

// Factors the folded matrix into a concatenation of elementary cylindrical
// networks with nonnegative weights, or refutes total nonnegativity.
// The returned network satisfies certify(m, network) == true.
FactorResult factor(const LoopMatrix& m);

// Exact check that the network realizes the matrix: the folded weight
// matrix of net equals m entrywise and every edge weight is >= 0.
bool certify(const LoopMatrix& m, const CylNetwork& net);

}  // namespace cyltn

#endif
