#ifndef CYLTN_TL_HPP
#define CYLTN_TL_HPP

#include <map>
#include <utility>
#include <vector>

#include "cyltn/dense.hpp"
#include "cyltn/laurent.hpp"

namespace cyltn {

// Perfect matching on 2n points arranged in two columns: points 1..n run
// down the left column, points n+1..2n down the right column. Stored as a
// 0-based partner array. Ordering is lexicographic on that array, which
// makes bases and maps deterministic.
class NcMatching {
 public:
  explicit NcMatching(std::vector<long> partner);
  static NcMatching from_pairs(long n,
                               const std::vector<std::pair<long, long>>& pairs);

  long n() const { return static_cast<long>(partner_.size()) / 2; }
  long partner(long p) const;  // 0-based point index
  // Noncrossing on the boundary cycle that runs down the left column and
  // back up the right column.
  bool noncrossing() const;
  // 1-based pairs (min, max), sorted.
  std::vector<std::pair<long, long>> pairs() const;

  friend bool operator==(const NcMatching& a, const NcMatching& b) {
    return a.partner_ == b.partner_;
  }
  friend bool operator!=(const NcMatching& a, const NcMatching& b) {
    return !(a == b);
  }
  friend bool operator<(const NcMatching& a, const NcMatching& b) {
    return a.partner_ < b.partner_;
  }

 private:
  std::vector<long> partner_;
};

// Identity diagram e: point k paired with n+k.
NcMatching identity_matching(long n);
// Generator t_i: cups {i, i+1} and {n+i, n+i+1}, horizontal strands
// elsewhere. Requires 1 <= i <= n-1.
NcMatching tl_generator(long n, long i);
// All noncrossing matchings of 2n points, sorted; size is the nth Catalan
// number.
std::vector<NcMatching> tl_basis(long n);
// Diagram composition: glue a's right column to b's left column, trace
// strands, and count closed loops. Returns (composite, loops).
std::pair<NcMatching, long> diagram_mult(const NcMatching& a,
                                         const NcMatching& b);

// Element of the diagram algebra TL_n(xi): a finite sum of noncrossing
// diagrams with polynomial coefficients in the loop parameter xi
// (represented by LaurentPoly in the variable xi, degrees >= 0).
class TlElement {
 public:
  explicit TlElement(long n);  // zero element
  static TlElement from_diagram(const NcMatching& d);

  long n() const { return n_; }
  const std::map<NcMatching, LaurentPoly>& terms() const { return terms_; }
  void add_term(const NcMatching& d, const LaurentPoly& coeff);
  bool is_zero() const { return terms_.empty(); }

  TlElement& operator+=(const TlElement& o);
  friend TlElement operator+(TlElement a, const TlElement& b) {
    a += b;
    return a;
  }
  friend bool operator==(const TlElement& a, const TlElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TlElement& a, const TlElement& b) {
    return !(a == b);
  }

 private:
  long n_;
  std::map<NcMatching, LaurentPoly> terms_;
};

// Bilinear extension of diagram composition; each closed loop contributes a
// factor of xi.
TlElement tl_multiply(const TlElement& a, const TlElement& b);
TlElement tl_scale(const LaurentPoly& coeff, const TlElement& a);

// Permutations in one-line notation: w[i-1] = w(i), values 1..n.
using Perm = std::vector<long>;

bool is_permutation(const Perm& w);
Perm perm_identity(long n);
// (u*v)(x) = u(v(x)).
Perm perm_multiply(const Perm& u, const Perm& v);
std::vector<Perm> all_permutations(long n);

// Lexicographically smallest reduced word, built left-greedily: the first
// letter is the smallest i whose transposition shortens w on the left.
std::vector<long> reduced_word(Perm w);
// Right-greedy variant; generally a different reduced word for the same w.
// Used to cross-check that functions of w defined via reduced words do not
// depend on the choice.
std::vector<long> reduced_word_right(Perm w);

// Coefficient of diagram T in the expansion of (t_{j1}-1)(t_{j2}-1)... over
// a reduced word j1 j2 ... of w, evaluated in TL_n(2). Independent of the
// chosen reduced word.
Rational phi(const NcMatching& T, const Perm& w);
// phi(T, w) for every basis diagram T at once, aligned with tl_basis(n).
std::vector<Rational> phi_vector(const Perm& w);

// Temperley-Lieb immanant: sum over w of phi(T, w) * prod_i M(i, w(i)).
Rational tl_immanant(const NcMatching& T, const DenseMatrix& m);
// All immanants of m at once, aligned with tl_basis(m.rows()).
std::vector<Rational> immanant_vector(const DenseMatrix& m);

// Complementary minor immanant: det m[I,J] * det m[I^c, J^c], with
// complements taken inside {1..m.rows()}. I, J strictly increasing,
// |I| = |J|.
Rational comp_minor_immanant(const DenseMatrix& m, const std::vector<long>& I,
                             const std::vector<long>& J);

enum class DotColor { Black, White };

// Two-column diagram recording a complementary minor: left dot j black iff
// j is in the column set, right dot i white iff i is in the row set.
struct CmDiagram {
  std::vector<DotColor> left;
  std::vector<DotColor> right;
};

CmDiagram cm_diagram(const std::vector<long>& I, const std::vector<long>& J,
                     long size);
// Basis diagrams compatible with D: every strand joins a white dot to a
// black dot (left point p has color left[p], right point n+p color right[p]).
std::vector<NcMatching> theta(const CmDiagram& d);
// The complementary minor immanant a diagram denotes, evaluated on m.
Rational evaluate_cm(const CmDiagram& d, const DenseMatrix& m);
// Identity check: comp_minor_immanant(m, I, J) equals the sum of
// tl_immanant(T, m) over T in theta(cm_diagram(I, J, m.rows())).
bool verify_rs(const DenseMatrix& m, const std::vector<long>& I,
               const std::vector<long>& J);

// Right-column dots may be replaced by gray blocks occupying two adjacent
// positions (GrayTop directly above GrayBottom). A gray block abbreviates
// white-over-black minus black-over-white.
enum class DecDot { Black, GrayTop, GrayBottom };

struct DecoratedCmDiagram {
  std::vector<DotColor> left;
  std::vector<DecDot> right;
};

// Expands every gray block by the two-term rule. Entry k of the result has
// sign (-1)^popcount(k) where bit b of k selects black-over-white for the
// b-th gray block in top-to-bottom order.
std::vector<std::pair<int, CmDiagram>> expand_decorated(
    const DecoratedCmDiagram& d);

}  // namespace cyltn

#endif
