#include "cyltn/laurent.hpp"

#include <stdexcept>

namespace cyltn {

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, long degree) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[degree] = coeff;
  return p;
}

Rational LaurentPoly::coeff(long degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Rational& coeff, long degree) {
  if (coeff == 0) return;
  Rational& slot = terms_[degree];
  slot += coeff;
  if (slot == 0) terms_.erase(degree);
}

long LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::logic_error("min_degree of zero polynomial");
  return terms_.begin()->first;
}

long LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::logic_error("max_degree of zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly out;
  for (const auto& [d, c] : terms_) out.terms_[d + k] = c;
  return out;
}

LaurentPoly LaurentPoly::reversed_degrees() const {
  LaurentPoly out;
  for (const auto& [d, c] : terms_) out.terms_[-d] = c;
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [d, c] : terms_) out.terms_[d] = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(c, d);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(-c, d);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) out.add_term(ca * cb, da + db);
  }
  return out;
}

LaurentPoly operator*(const Rational& c, const LaurentPoly& p) {
  LaurentPoly out;
  if (c == 0) return out;
  for (const auto& [d, pc] : p.terms()) out.terms_[d] = c * pc;
  return out;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& num,
                                        const LaurentPoly& den) {
  if (den.is_zero()) {
    throw std::invalid_argument("division by zero polynomial");
  }
  if (num.is_zero()) return LaurentPoly();

  // Monomials t^k are units, so divisibility only depends on the polynomial
  // parts: strip the low degrees and run ordinary long division.
  const long vn = num.min_degree();
  const long vd = den.min_degree();
  const LaurentPoly d = den.shifted(-vd);
  LaurentPoly rem = num.shifted(-vn);
  LaurentPoly quot;

  const long deg_d = d.max_degree();
  const Rational lead = d.coeff(deg_d);
  while (!rem.is_zero() && rem.max_degree() >= deg_d) {
    const long shift = rem.max_degree() - deg_d;
    const Rational factor = rem.coeff(rem.max_degree()) / lead;
    quot.add_term(factor, shift);
    for (const auto& [dd, dc] : d.terms()) rem.add_term(-factor * dc, dd + shift);
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot.shifted(vn - vd);
}

}  // namespace cyltn
