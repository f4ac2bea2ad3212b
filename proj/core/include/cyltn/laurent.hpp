#ifndef CYLTN_LAURENT_HPP
#define CYLTN_LAURENT_HPP

#include <map>
#include <optional>

#include "cyltn/rational.hpp"

namespace cyltn {

// Sparse Laurent polynomial in one variable t with rational coefficients.
// Invariant: the term map never stores a zero coefficient, so the zero
// polynomial is exactly the empty map and operator== is structural.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& constant);
  static LaurentPoly monomial(const Rational& coeff, long degree);

  bool is_zero() const { return terms_.empty(); }
  // Coefficient of t^degree; zero when absent.
  Rational coeff(long degree) const;
  void add_term(const Rational& coeff, long degree);

  // Both require a nonzero polynomial.
  long min_degree() const;
  long max_degree() const;

  const std::map<long, Rational>& terms() const { return terms_; }
  long term_count() const { return static_cast<long>(terms_.size()); }

  // Multiplication by t^k.
  LaurentPoly shifted(long k) const;
  // Substitution t -> 1/t (degree negation).
  LaurentPoly reversed_degrees() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Rational& c, const LaurentPoly& p);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

 private:
  std::map<long, Rational> terms_;
};

// Exact division in the Laurent ring: returns num/den when den divides num,
// std::nullopt otherwise. den must be nonzero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& num,
                                        const LaurentPoly& den);

}  // namespace cyltn

#endif
