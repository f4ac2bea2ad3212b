#ifndef CYLTN_INTERLACE_HPP
#define CYLTN_INTERLACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "cyltn/loop_matrix.hpp"

namespace cyltn {

// Dense univariate polynomial over the rationals, coefficients stored low
// degree first with trailing zeros stripped. The zero polynomial is the
// empty vector and reports degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  static RatPoly constant(const Rational& c);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(long k) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational eval(const Rational& x) const;
  RatPoly derivative() const;
  // Division by t^k; every coefficient below k must vanish.
  RatPoly divided_by_t(long k = 1) const;

  RatPoly operator-() const;
  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rational& c, const RatPoly& p);
  friend bool operator==(const RatPoly& a, const RatPoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const RatPoly& a, const RatPoly& b) {
    return !(a == b);
  }

 private:
  std::vector<Rational> c_;
};

// Euclidean division: num = q*den + r with deg r < deg den. den nonzero.
std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& num,
                                        const RatPoly& den);
// Monic gcd; gcd(0, 0) = 0.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

// True when every complex root is real, decided exactly by a Sturm chain on
// the squarefree part. Constants (including zero) count as real-rooted.
bool real_rooted(const RatPoly& p);

// Weak interlacing, asymmetric in its arguments: p0 carries the largest
// root, deg p0 is deg p1 or deg p1 + 1, and the roots weakly alternate
// (chi_1 >= psi_1 >= chi_2 >= psi_2 >= ..., multiplicities counted).
// Conventions: any real-rooted polynomial interlaces the zero polynomial and
// vice versa; two nonzero constants interlace vacuously.
//
// Decided exactly: squarefree decomposition, Sturm isolation of the combined
// root set, then alternation on the isolated intervals.
bool interlaces_sturm(const RatPoly& p0, const RatPoly& p1);

// Same predicate decided by the Routh-style recursion
//   q = (p0 - (p0(0)/p1(0)) p1) / t,  (p0, p1) -> (p1, q),
// with a negative coefficient anywhere in q refuting immediately. Both
// inputs must have nonnegative coefficients; std::invalid_argument
// otherwise.
bool interlaces_routh(const RatPoly& p0, const RatPoly& p1);

// Coefficient reversal at degree d: coefficient of t^k becomes the
// coefficient of t^(d-k). Requires d >= deg p (d arbitrary for p = 0).
RatPoly reverse(const RatPoly& p, long d);

// The (2,1)-periodic folded matrix [[p1], [p0]]: odd unfolded rows carry
// p1's coefficients, even rows p0's. Totally nonnegative iff p0 interlaces
// p1, for nonnegative-coefficient inputs.
LoopMatrix hurwitz(const RatPoly& p0, const RatPoly& p1);

// One failed pairwise condition from check_same_row_col. kind is
// "rows-in-column" (entries (i0,j0) over (i1,j0), lower must interlace
// upper), "cols-in-row" (reversed entries within a row), or
// "degree-overflow" (a later entry in a row has larger degree than an
// earlier one, so the reversal that the row condition needs does not exist).
struct InterlaceViolation {
  std::string kind;
  long i0, i1, j0, j1;
};

// Necessary conditions for total nonnegativity read off 2x1 and 1x2
// submatrices of the folded grid: within every column, each lower entry
// interlaces each upper one; within every row, the reversals (at the earlier
// entry's degree) interlace right-to-left. Entries must have no negative
// Laurent degrees (std::invalid_argument otherwise). Returns every violated
// pair; empty means all conditions hold.
std::vector<InterlaceViolation> check_same_row_col(const LoopMatrix& m);

// Conversions between the dense and Laurent representations.
LaurentPoly to_laurent(const RatPoly& p);
// nullopt when the Laurent polynomial has a negative degree term.
std::optional<RatPoly> ratpoly_from_laurent(const LaurentPoly& p);

}  // namespace cyltn

#endif
