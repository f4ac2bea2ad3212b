#ifndef CYLTN_NETWORK_HPP
#define CYLTN_NETWORK_HPP

#include <stdexcept>
#include <vector>

#include "cyltn/loop_matrix.hpp"

namespace cyltn {

// Directed edge on the cylinder. hcross counts signed crossings of the
// reference line joining the two boundary circles: +1 per counterclockwise
// crossing, -1 per clockwise crossing.
struct Edge {
  long tail;
  long head;
  Rational weight;
  long hcross;
};

// Acyclic edge-weighted network on a cylinder with n ordered sources on one
// boundary and m ordered sinks on the other. Vertex ids are 0-based and
// dense in [0, vertex_count). Sources and sinks are duplicate-free and
// disjoint. The constructor validates all of this plus acyclicity.
//
// Planarity of the cylinder embedding is not checked; it is the
// responsibility of builders that need it (minor formulas quantify over
// crossings combinatorially, so non-planar inputs simply compute what the
// path families say).
class CylNetwork {
 public:
  CylNetwork(long vertex_count, std::vector<long> sources,
             std::vector<long> sinks, std::vector<Edge> edges);

  long vertex_count() const { return vertex_count_; }
  long n() const { return static_cast<long>(sources_.size()); }
  long m() const { return static_cast<long>(sinks_.size()); }
  const std::vector<long>& sources() const { return sources_; }
  const std::vector<long>& sinks() const { return sinks_; }
  const std::vector<Edge>& edges() const { return edges_; }
  // Edge indices leaving v, increasing.
  const std::vector<long>& out_edges(long v) const;

 private:
  long vertex_count_;
  std::vector<long> sources_, sinks_;
  std::vector<Edge> edges_;
  std::vector<std::vector<long>> out_;
};

// Path from a source to a sink. vertices has one more element than edges.
// rot is the total hcross along the path; weight the product of edge weights.
struct NetPath {
  std::vector<long> edges;
  std::vector<long> vertices;
  Rational weight;
  long rot;
};

// Thrown when a path enumeration would exceed kPathLimit results.
class PathLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr long kPathLimit = 100000;

// All directed paths from source number i to sink number j (both 1-based),
// ordered lexicographically by edge index sequence.
std::vector<NetPath> enumerate_paths(const CylNetwork& net, long i, long j);

// Folded weight matrix W(N): entry (i,j) collects path weights by rotor,
// weight * t^rot summed over all paths from source i to sink j.
LoopMatrix folded_weight_matrix(const CylNetwork& net);

// Minor |W(N)[I, J]| of the unfolded weight matrix, computed from path
// families: the sum over pairwise-uncrossed path families connecting I to J
// (identity pairing) of the product of path weights. I and J are strictly
// increasing global indices, |I| = |J|.
Rational glv_minor(const CylNetwork& net, const std::vector<long>& I,
                   const std::vector<long>& J);

// Glues a's sinks to b's sources (requires a.m() == b.n()). Satisfies
// folded_weight_matrix(concatenate(a,b)) == loop_mul(W(a), W(b)).
CylNetwork concatenate(const CylNetwork& a, const CylNetwork& b);

// Reverses every edge, swaps sources with sinks, and negates hcross.
// The folded weight matrix of the result is the folded transpose of W(N).
CylNetwork transpose_network(const CylNetwork& net);

// Builders. All weights must be >= 0 where a weight parameter exists.
CylNetwork identity_network(long k);
// Identity edges plus one extra edge from source `row` to sink row-1 with
// weight c; row = 1 wraps to sink k with hcross -1, so the extra folded
// entry is c * t^-1 at (1, k).
CylNetwork elementary_row_network(long k, long row, const Rational& c);
// k-1 sources, k sinks; source i connects to sink i (i < row) or i+1
// (i >= row). Folded weight matrix is the identity with row `row` deleted,
// viewed as a (k-1) x k matrix.
CylNetwork row_deletion_network(long k, long row);
// One edge per source: source i to sink ((i - 1 + offset) mod k) + 1 with
// weight weights[i-1] and the hcross needed to realize global column offset
// `offset`. Folded matrix is the single-diagonal matrix of the weights.
CylNetwork diagonal_base_network(const std::vector<Rational>& weights,
                                 long offset = 0);
// Unit diagonal plus superdiag[j-1] from source j to sink j+1; the last
// entry wraps to sink 1 with hcross +1. Folded matrix is upper bidiagonal
// with a t-weighted wrap entry.
CylNetwork bidiagonal_slice_network(const std::vector<Rational>& superdiag);

}  // namespace cyltn

#endif
