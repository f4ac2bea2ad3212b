#include "cyltn/interlace.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cyltn {

namespace {

int sign_of(const Rational& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

RatPoly exact_div(const RatPoly& num, const RatPoly& den) {
  auto [q, r] = poly_divmod(num, den);
  if (!r.is_zero())
    throw std::logic_error("internal error: polynomial division had a remainder");
  return q;
}

// Squarefree factorization p ~ prod factors[k-1]^k with the factors pairwise
// coprime and squarefree (Yun). Factors of multiplicity absent from p come
// out constant. Requires deg p >= 1.
std::vector<RatPoly> yun_decomposition(const RatPoly& p) {
  const RatPoly dp = p.derivative();
  const RatPoly g = poly_gcd(p, dp);
  if (g.degree() == 0) return {p};
  std::vector<RatPoly> factors;
  RatPoly c = exact_div(p, g);
  RatPoly d = exact_div(dp, g) - c.derivative();
  while (c.degree() >= 1) {
    const RatPoly a = poly_gcd(c, d);
    factors.push_back(a);
    c = exact_div(c, a);
    d = exact_div(d, a) - c.derivative();
  }
  return factors;
}

RatPoly squarefree_part(const RatPoly& p) {
  return exact_div(p, poly_gcd(p, p.derivative()));
}

// Standard Sturm chain: p, p', then negated remainders until exhaustion.
std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> chain{p};
  RatPoly d = p.derivative();
  while (!d.is_zero()) {
    chain.push_back(d);
    auto [q, r] = poly_divmod(chain[chain.size() - 2], chain.back());
    d = -r;
  }
  return chain;
}

long sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
  long count = 0;
  int prev = 0;
  for (const RatPoly& f : chain) {
    const int s = sign_of(f.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

// Every root of p has magnitude strictly below this bound.
Rational cauchy_bound(const RatPoly& p) {
  const long d = p.degree();
  const Rational lead = p.coeff(d);
  Rational worst(0);
  for (long k = 0; k < d; ++k) {
    Rational a = p.coeff(k) / lead;
    if (a < 0) a = -a;
    if (a > worst) worst = a;
  }
  return worst + 1;
}

// Disjoint half-open intervals (a, b], ascending, each holding exactly one
// real root of the squarefree nonconstant g.
std::vector<std::pair<Rational, Rational>> isolate_roots(const RatPoly& g) {
  const auto chain = sturm_chain(g);
  std::vector<std::pair<Rational, Rational>> out;
  auto split = [&](auto&& self, const Rational& a, const Rational& b, long va,
                   long vb) -> void {
    const long count = va - vb;
    if (count <= 0) return;
    if (count == 1) {
      out.emplace_back(a, b);
      return;
    }
    const Rational mid = (a + b) / 2;
    const long vm = sign_variations(chain, mid);
    self(self, a, mid, va, vm);
    self(self, mid, b, vm, vb);
  };
  const Rational bound = cauchy_bound(g);
  split(split, -bound, bound, sign_variations(chain, -bound),
        sign_variations(chain, bound));
  return out;
}

// Interval ids of p's roots in ascending order, one id per root counted with
// multiplicity. Every root of p must lie in one of the intervals.
std::vector<long> root_ids(const RatPoly& p,
                           const std::vector<std::pair<Rational, Rational>>& iv) {
  std::vector<long> ids;
  if (p.degree() < 1) return ids;
  const auto factors = yun_decomposition(p);
  std::vector<long> mult(iv.size(), 0);
  for (std::size_t f = 0; f < factors.size(); ++f) {
    if (factors[f].degree() < 1) continue;
    const auto chain = sturm_chain(factors[f]);
    for (std::size_t t = 0; t < iv.size(); ++t) {
      if (sign_variations(chain, iv[t].first) -
              sign_variations(chain, iv[t].second) ==
          1)
        mult[t] += static_cast<long>(f) + 1;
    }
  }
  for (std::size_t t = 0; t < iv.size(); ++t)
    ids.insert(ids.end(), mult[t], static_cast<long>(t));
  return ids;
}

bool routh_pair(const RatPoly& p0, const RatPoly& p1);

bool routh_real_rooted(const RatPoly& p) {
  if (p.degree() <= 0) return true;
  return routh_pair(p, p.derivative());
}

bool routh_pair(const RatPoly& p0, const RatPoly& p1) {
  if (p1.is_zero()) return routh_real_rooted(p0);
  if (p0.is_zero()) return routh_real_rooted(p1);
  if (p0.degree() == 0 && p1.degree() == 0) return true;
  if (p0.degree() < p1.degree() || p0.degree() > p1.degree() + 1) return false;
  const Rational a0 = p0.coeff(0);
  const Rational b0 = p1.coeff(0);
  if (b0 == 0 && a0 != 0) return false;
  if (b0 == 0) return routh_pair(p0.divided_by_t(), p1.divided_by_t());
  if (a0 == 0) return routh_pair(p1, p0.divided_by_t());
  const RatPoly q = (p0 - (a0 / b0) * p1).divided_by_t();
  for (const Rational& w : q.coeffs())
    if (w < 0) return false;
  return routh_pair(p1, q);
}

void require_nonnegative(const RatPoly& p, const char* who) {
  for (const Rational& w : p.coeffs())
    if (w < 0)
      throw std::invalid_argument(std::string(who) +
                                  " requires nonnegative coefficients");
}

}  // namespace

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::constant(const Rational& c) {
  return RatPoly(std::vector<Rational>{c});
}

Rational RatPoly::coeff(long k) const {
  if (k < 0 || k >= static_cast<long>(c_.size())) return Rational(0);
  return c_[k];
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (long k = static_cast<long>(c_.size()) - 1; k >= 0; --k)
    acc = acc * x + c_[k];
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return RatPoly();
  std::vector<Rational> out(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k)
    out[k - 1] = Rational(static_cast<long>(k)) * c_[k];
  return RatPoly(std::move(out));
}

RatPoly RatPoly::divided_by_t(long k) const {
  if (k < 0) throw std::invalid_argument("t-power must be nonnegative");
  if (is_zero() || k == 0) return *this;
  for (long j = 0; j < k && j < static_cast<long>(c_.size()); ++j)
    if (c_[j] != 0)
      throw std::invalid_argument("polynomial is not divisible by t^k");
  if (k >= static_cast<long>(c_.size())) return RatPoly();
  return RatPoly(std::vector<Rational>(c_.begin() + k, c_.end()));
}

RatPoly RatPoly::operator-() const {
  std::vector<Rational> out(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) out[k] = -c_[k];
  return RatPoly(std::move(out));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] += b.c_[k];
  return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return RatPoly(std::move(out));
}

RatPoly operator*(const Rational& c, const RatPoly& p) {
  std::vector<Rational> out(p.c_.size());
  for (std::size_t k = 0; k < p.c_.size(); ++k) out[k] = c * p.c_[k];
  return RatPoly(std::move(out));
}

std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& num,
                                        const RatPoly& den) {
  if (den.is_zero())
    throw std::invalid_argument("polynomial division by zero");
  const long dd = den.degree();
  const Rational lead = den.coeff(dd);
  std::vector<Rational> r = num.coeffs();
  std::vector<Rational> q(
      num.degree() >= dd ? static_cast<std::size_t>(num.degree() - dd + 1) : 0,
      Rational(0));
  for (long pos = num.degree(); pos >= dd; --pos) {
    const Rational c = r[pos] / lead;
    if (c == 0) continue;
    q[pos - dd] = c;
    for (long k = 0; k <= dd; ++k) r[pos - dd + k] -= c * den.coeff(k);
  }
  r.resize(dd);
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a;
  RatPoly y = b;
  while (!y.is_zero()) {
    auto [q, r] = poly_divmod(x, y);
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return (Rational(1) / x.coeff(x.degree())) * x;
}

bool real_rooted(const RatPoly& p) {
  if (p.degree() <= 0) return true;
  const RatPoly q = squarefree_part(p);
  const auto chain = sturm_chain(q);
  const Rational bound = cauchy_bound(q);
  return sign_variations(chain, -bound) - sign_variations(chain, bound) ==
         q.degree();
}

bool interlaces_sturm(const RatPoly& p0, const RatPoly& p1) {
  if (p1.is_zero()) return real_rooted(p0);
  if (p0.is_zero()) return real_rooted(p1);
  if (p0.degree() == 0 && p1.degree() == 0) return true;
  if (p0.degree() < p1.degree() || p0.degree() > p1.degree() + 1) return false;
  if (!real_rooted(p0) || !real_rooted(p1)) return false;
  // The intervals isolate the distinct roots of both polynomials at once, so
  // comparing interval ids compares roots exactly, ties included.
  const auto intervals = isolate_roots(squarefree_part(p0 * p1));
  std::vector<long> chi = root_ids(p0, intervals);
  std::vector<long> psi = root_ids(p1, intervals);
  if (static_cast<long>(chi.size()) != p0.degree() ||
      static_cast<long>(psi.size()) != p1.degree())
    throw std::logic_error(
        "internal error: root multiplicities do not sum to the degree");
  std::reverse(chi.begin(), chi.end());
  std::reverse(psi.begin(), psi.end());
  for (std::size_t k = 0; k < psi.size(); ++k) {
    if (chi[k] < psi[k]) return false;
    if (k + 1 < chi.size() && psi[k] < chi[k + 1]) return false;
  }
  return true;
}

bool interlaces_routh(const RatPoly& p0, const RatPoly& p1) {
  require_nonnegative(p0, "interlaces_routh");
  require_nonnegative(p1, "interlaces_routh");
  return routh_pair(p0, p1);
}

RatPoly reverse(const RatPoly& p, long d) {
  if (p.is_zero()) return p;
  if (d < p.degree())
    throw std::invalid_argument(
        "reversal degree is smaller than the polynomial degree");
  std::vector<Rational> out(d + 1, Rational(0));
  for (long k = 0; k <= p.degree(); ++k) out[d - k] = p.coeff(k);
  return RatPoly(std::move(out));
}

LoopMatrix hurwitz(const RatPoly& p0, const RatPoly& p1) {
  LoopMatrix out(2, 1);
  out.set_entry(1, 1, to_laurent(p1));
  out.set_entry(2, 1, to_laurent(p0));
  return out;
}

std::vector<InterlaceViolation> check_same_row_col(const LoopMatrix& m) {
  const long n = m.n();
  const long cols = m.m();
  std::vector<std::vector<RatPoly>> p(n, std::vector<RatPoly>(cols));
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= cols; ++j) {
      auto converted = ratpoly_from_laurent(m.entry(i, j));
      if (!converted)
        throw std::invalid_argument("entry has a negative Laurent degree");
      p[i - 1][j - 1] = std::move(*converted);
    }
  std::vector<InterlaceViolation> out;
  for (long j = 1; j <= cols; ++j)
    for (long i0 = 1; i0 <= n; ++i0)
      for (long i1 = i0 + 1; i1 <= n; ++i1)
        if (!interlaces_sturm(p[i1 - 1][j - 1], p[i0 - 1][j - 1]))
          out.push_back({"rows-in-column", i0, i1, j, j});
  for (long i = 1; i <= n; ++i)
    for (long j0 = 1; j0 <= cols; ++j0)
      for (long j1 = j0 + 1; j1 <= cols; ++j1) {
        const RatPoly& early = p[i - 1][j0 - 1];
        const RatPoly& late = p[i - 1][j1 - 1];
        if (early.is_zero() && late.is_zero()) continue;
        const long d = early.is_zero() ? late.degree() : early.degree();
        if (late.degree() > d) {
          out.push_back({"degree-overflow", i, i, j0, j1});
          continue;
        }
        if (!interlaces_sturm(reverse(late, d), reverse(early, d)))
          out.push_back({"cols-in-row", i, i, j0, j1});
      }
  return out;
}

LaurentPoly to_laurent(const RatPoly& p) {
  LaurentPoly out;
  for (long k = 0; k <= p.degree(); ++k) out.add_term(p.coeff(k), k);
  return out;
}

std::optional<RatPoly> ratpoly_from_laurent(const LaurentPoly& p) {
  if (p.is_zero()) return RatPoly();
  if (p.min_degree() < 0) return std::nullopt;
  std::vector<Rational> c(p.max_degree() + 1, Rational(0));
  for (const auto& [degree, coeff] : p.terms()) c[degree] = coeff;
  return RatPoly(std::move(c));
}

}  // namespace cyltn
