#include "cyltn/factor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "cyltn/laurent.hpp"

namespace cyltn {

NotTotallyNonnegative::NotTotallyNonnegative(
    const std::string& reason, std::optional<MinorWitness> witness)
    : std::runtime_error(reason), witness_(std::move(witness)) {}

std::string step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::CornerElim:
      return "corner_elim";
    case StepKind::NonspecialElim:
      return "nonspecial_elim";
    case StepKind::RowDelete:
      return "row_delete";
    case StepKind::ColDelete:
      return "col_delete";
    case StepKind::BaseDiagonal:
      return "base_diagonal";
  }
  return "unknown";
}

namespace {

long residue(long v, long mod) {
  long r = v % mod;
  if (r <= 0) r += mod;
  return r;
}

// Shifts a minor by whole periods until every index is >= 1. Periodicity
// keeps the value.
MinorWitness shifted_witness(std::vector<long> rows, std::vector<long> cols,
                             const Rational& value, long n, long m) {
  long k = 0;
  auto needs_shift = [&]() {
    for (long r : rows) {
      if (r + k * n < 1) return true;
    }
    for (long c : cols) {
      if (c + k * m < 1) return true;
    }
    return false;
  };
  while (needs_shift()) ++k;
  for (long& r : rows) r += k * n;
  for (long& c : cols) c += k * m;
  return MinorWitness{std::move(rows), std::move(cols), value};
}

// A witness found in the transposed orientation maps back by swapping the
// index sets; the determinant is unchanged.
MinorWitness oriented(MinorWitness w, bool flip) {
  if (flip) std::swap(w.rows, w.cols);
  return w;
}

// First negative coefficient in (row, column, degree) order.
struct NegCoeff {
  long i, j, degree;
  Rational value;
};

std::optional<NegCoeff> first_negative(const LoopMatrix& w) {
  for (long i = 1; i <= w.n(); ++i) {
    for (long j = 1; j <= w.m(); ++j) {
      for (const auto& [d, c] : w.entry(i, j).terms()) {
        if (c < 0) return NegCoeff{i, j, d, c};
      }
    }
  }
  return std::nullopt;
}

// Single occupied diagonal test for a square folded matrix; fills the
// offset and the row-order weights on success.
bool single_diagonal(const LoopMatrix& w, long* offset,
                     std::vector<Rational>* weights) {
  if (w.n() != w.m()) return false;
  const long k = w.n();
  std::optional<long> off;
  for (long i = 1; i <= k; ++i) {
    for (long j = 1; j <= k; ++j) {
      for (const auto& [d, c] : w.entry(i, j).terms()) {
        long o = j - i + d * k;
        if (off && *off != o) return false;
        off = o;
      }
    }
  }
  *offset = off.value_or(0);
  weights->clear();
  for (long i = 1; i <= k; ++i) {
    weights->push_back(w.unfold_entry_extended(i, i + *offset));
  }
  return true;
}

std::optional<long> monotonicity_violation(const std::vector<long>& ell,
                                           long m) {
  const long n = static_cast<long>(ell.size());
  auto ell_ext = [&](long i) {
    return i <= n ? ell[static_cast<size_t>(i - 1)]
                  : ell[static_cast<size_t>(i - n - 1)] + m;
  };
  for (long i = 1; i <= n; ++i) {
    if (ell_ext(i + 1) < ell_ext(i)) return i;
  }
  return std::nullopt;
}

// With every coefficient nonnegative, a support decrease at rows (i, i+1)
// pins a negative 2x2 minor: the top-left entry sits left of row i's
// support, so the determinant is minus a product of two positive entries.
MinorWitness monotonicity_witness(const LoopMatrix& w,
                                  const std::vector<long>& ell, long i) {
  const long n = w.n(), m = w.m();
  auto ell_at = [&](long r) {
    return r <= n ? ell[static_cast<size_t>(r - 1)]
                  : ell[static_cast<size_t>(r - n - 1)] + m;
  };
  MinorWitness witness = shifted_witness(
      {i, i + 1}, {ell_at(i + 1), ell_at(i)}, Rational(0), n, m);
  witness.value = w.window(witness.rows, witness.cols).determinant();
  return witness;
}

struct Mat2 {
  Rational a, b, c, d;
};

Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
  return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
              x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  const mpz_class num = x.get_num(), den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return Rational(sn, sd);
}

// Fixed points of x -> (a x + b) / (c x + d), ascending, rational only.
std::vector<Rational> mobius_fixed_points(const Mat2& t) {
  std::vector<Rational> out;
  if (t.c != 0) {
    const Rational disc = (t.d - t.a) * (t.d - t.a) + 4 * t.c * t.b;
    if (auto root = rational_sqrt(disc)) {
      out.push_back((t.a - t.d + *root) / (2 * t.c));
      out.push_back((t.a - t.d - *root) / (2 * t.c));
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
  } else if (t.d != t.a) {
    out.push_back(t.b / (t.d - t.a));
  } else if (t.b == 0) {
    out.push_back(Rational(0));
  }
  return out;
}

std::vector<mpz_class> divisors_capped(const mpz_class& a) {
  std::vector<mpz_class> divs;
  long steps = 0;
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (++steps > 1000000) {
      throw FactorizationStuck(
          "coefficient too large for divisor enumeration");
    }
    if (a % d == 0) {
      divs.push_back(d);
      mpz_class q = a / d;
      if (q != d) divs.push_back(q);
    }
  }
  return divs;
}

// Most negative rational root of a polynomial with positive coefficients
// and nonzero constant term, or nullopt when none exists.
std::optional<Rational> find_peel_root(const LaurentPoly& p) {
  mpz_class scale = 1;
  for (const auto& [d, c] : p.terms()) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den().get_mpz_t());
  }
  const long top = p.max_degree();
  mpz_class a0 = Rational(p.coeff(0) * scale).get_num();
  mpz_class ae = Rational(p.coeff(top) * scale).get_num();
  a0 = abs(a0);
  ae = abs(ae);
  const auto num_divs = divisors_capped(a0);
  const auto den_divs = divisors_capped(ae);
  std::set<Rational> candidates;
  for (const mpz_class& u : num_divs) {
    for (const mpz_class& v : den_divs) {
      Rational cand(u, v);
      cand.canonicalize();
      candidates.insert(cand);
    }
  }
  auto eval = [&](const Rational& x) {
    Rational acc(0);
    for (long d = top; d >= 0; --d) acc = acc * x + p.coeff(d);
    return acc;
  };
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    if (eval(-*it) == 0) return -*it;
  }
  return std::nullopt;
}

struct Partial {
  std::vector<FactorStep> steps;
  std::vector<CylNetwork> lefts;
  std::optional<CylNetwork> base;
  std::vector<CylNetwork> rights;
};

void push_step(std::vector<FactorStep>& steps, StepKind kind, StepSide side,
               const CylNetwork& piece, const LoopMatrix& before,
               const LoopMatrix& after, std::string note) {
  const LoopMatrix pw = folded_weight_matrix(piece);
  const bool exact = side == StepSide::Left ? before == loop_mul(pw, after)
                                            : before == loop_mul(after, pw);
  if (!exact) {
    throw std::logic_error(
        "internal error: factorization step failed its exactness check");
  }
  steps.push_back(FactorStep{kind, side, piece, after, std::move(note)});
}

Partial factor_impl(LoopMatrix w, bool fresh, bool flip);

// Band peel for a full band of width >= 2 on a square matrix with no
// corners on either side. Returns the slice split off on the right and the
// remaining matrix.
std::pair<CylNetwork, LoopMatrix> peel_band(const LoopMatrix& w,
                                            const std::vector<long>& ell,
                                            long width, std::string* note) {
  const long n = w.n();
  std::vector<Rational> alpha(static_cast<size_t>(n)),
      beta(static_cast<size_t>(n));
  for (long i = 1; i <= n; ++i) {
    alpha[static_cast<size_t>(i - 1)] =
        w.unfold_entry_extended(i, ell[static_cast<size_t>(i - 1)]);
    beta[static_cast<size_t>(i - 1)] =
        w.unfold_entry_extended(i, ell[static_cast<size_t>(i - 1)] + 1);
  }

  std::vector<Rational> x(static_cast<size_t>(n), Rational(0));
  std::vector<Rational> beta_next(static_cast<size_t>(n));
  if (width == 2) {
    for (long i = 1; i <= n; ++i) {
      const long r = residue(ell[static_cast<size_t>(i - 1)], n);
      x[static_cast<size_t>(r - 1)] = beta[static_cast<size_t>(i - 1)] /
                                      alpha[static_cast<size_t>(i - 1)];
      beta_next[static_cast<size_t>(i - 1)] = 0;
    }
    *note = "bidiagonal slice peeled from a width-2 band";
  } else if (width == 3) {
    std::vector<Rational> gamma(static_cast<size_t>(n));
    for (long i = 1; i <= n; ++i) {
      gamma[static_cast<size_t>(i - 1)] =
          w.unfold_entry_extended(i, ell[static_cast<size_t>(i - 1)] + 2);
    }
    // Around the cylinder the slice weights obey a cyclic Moebius
    // recurrence; its rational fixed points are the only starting values.
    Mat2 comp{Rational(1), Rational(0), Rational(0), Rational(1)};
    for (long i = 1; i <= n; ++i) {
      const Mat2 ti{Rational(0), gamma[static_cast<size_t>(i - 1)],
                    -alpha[static_cast<size_t>(i - 1)],
                    beta[static_cast<size_t>(i - 1)]};
      comp = mat2_mul(ti, comp);
    }
    bool solved = false;
    for (const Rational& start : mobius_fixed_points(comp)) {
      if (start < 0) continue;
      std::vector<Rational> xs(static_cast<size_t>(n), Rational(0));
      std::vector<Rational> bn(static_cast<size_t>(n));
      long r = residue(ell[0], n);
      xs[static_cast<size_t>(r - 1)] = start;
      bool ok = true;
      for (long i = 1; i <= n; ++i) {
        const Rational denom = beta[static_cast<size_t>(i - 1)] -
                               alpha[static_cast<size_t>(i - 1)] *
                                   xs[static_cast<size_t>(r - 1)];
        if (denom == 0 || denom < 0) {
          ok = false;
          break;
        }
        bn[static_cast<size_t>(i - 1)] = denom;
        const Rational next = gamma[static_cast<size_t>(i - 1)] / denom;
        if (next < 0) {
          ok = false;
          break;
        }
        const long r_next = residue(ell[static_cast<size_t>(i - 1)] + 1, n);
        if (i < n) {
          xs[static_cast<size_t>(r_next - 1)] = next;
          r = r_next;
        } else if (next != start) {
          // The cycle must close back on the starting value.
          ok = false;
        }
      }
      if (!ok) continue;
      x = xs;
      beta_next = bn;
      solved = true;
      break;
    }
    if (!solved) {
      throw FactorizationStuck(
          "no nonnegative rational slice closes the width-3 band");
    }
    *note = "bidiagonal slice peeled from a width-3 band";
  } else {
    throw FactorizationStuck("band width exceeds the solvable peel widths");
  }

  LoopMatrix next(n, n);
  for (long i = 1; i <= n; ++i) {
    next.add_unfolded(i, ell[static_cast<size_t>(i - 1)],
                      alpha[static_cast<size_t>(i - 1)]);
    if (beta_next[static_cast<size_t>(i - 1)] != 0) {
      next.add_unfolded(i, ell[static_cast<size_t>(i - 1)] + 1,
                        beta_next[static_cast<size_t>(i - 1)]);
    }
  }
  return {bidiagonal_slice_network(x), next};
}

Partial factor_impl(LoopMatrix w, bool fresh, bool flip) {
  Partial out;
  const long kIterationCap = 100000;
  for (long iter = 0; iter < kIterationCap; ++iter) {
    const bool fresh_now = fresh && out.steps.empty();

    if (auto neg = first_negative(w)) {
      if (fresh_now) {
        throw NotTotallyNonnegative(
            "matrix has a negative coefficient",
            oriented(shifted_witness({neg->i}, {neg->j + neg->degree * w.m()},
                                     neg->value, w.n(), w.m()),
                     flip));
      }
      throw NotTotallyNonnegative(
          "elimination produced a negative coefficient");
    }

    if (w.n() >= 2) {
      bool deleted = false;
      for (long k = 1; k <= w.n(); ++k) {
        if (!w.row_is_zero(k)) continue;
        const CylNetwork piece =
            transpose_network(row_deletion_network(w.n(), k));
        const LoopMatrix next = w.drop_row(k);
        push_step(out.steps, StepKind::RowDelete, StepSide::Left, piece, w,
                  next, "zero row " + std::to_string(k) + " removed");
        out.lefts.push_back(piece);
        w = next;
        deleted = true;
        break;
      }
      if (deleted) continue;
    }

    if (w.m() >= 2) {
      bool deleted = false;
      for (long k = 1; k <= w.m(); ++k) {
        if (!w.col_is_zero(k)) continue;
        const CylNetwork piece = row_deletion_network(w.m(), k);
        const LoopMatrix next = w.drop_col(k);
        push_step(out.steps, StepKind::ColDelete, StepSide::Right, piece, w,
                  next, "zero column " + std::to_string(k) + " removed");
        out.rights.push_back(piece);
        w = next;
        deleted = true;
        break;
      }
      if (deleted) continue;
    }

    {
      long offset = 0;
      std::vector<Rational> weights;
      if (single_diagonal(w, &offset, &weights)) {
        const CylNetwork piece = diagonal_base_network(weights, offset);
        push_step(out.steps, StepKind::BaseDiagonal, StepSide::Left, piece, w,
                  LoopMatrix::identity(w.m()),
                  "single diagonal of size " + std::to_string(w.n()) +
                      " at offset " + std::to_string(offset));
        out.base = piece;
        return out;
      }
    }

    if (w.n() < w.m()) {
      Partial sub = factor_impl(w.transpose(), fresh_now, !flip);
      for (FactorStep& s : sub.steps) {
        StepKind kind = s.kind;
        if (kind == StepKind::RowDelete) {
          kind = StepKind::ColDelete;
        } else if (kind == StepKind::ColDelete) {
          kind = StepKind::RowDelete;
        }
        const StepSide side = s.side == StepSide::Left ? StepSide::Right
                                                       : StepSide::Left;
        out.steps.push_back(FactorStep{kind, side,
                                       transpose_network(s.piece),
                                       s.resulting_matrix.transpose(),
                                       s.note + " (transposed)"});
      }
      for (const CylNetwork& r : sub.rights) {
        out.lefts.push_back(transpose_network(r));
      }
      for (const CylNetwork& l : sub.lefts) {
        out.rights.push_back(transpose_network(l));
      }
      out.base = transpose_network(*sub.base);
      return out;
    }

    if (!convex_support(w)) {
      throw NotTotallyNonnegative("row or column support is not contiguous");
    }

    const std::vector<long> ell = row_leftmost_support(w);
    if (auto bad = monotonicity_violation(ell, w.m())) {
      if (fresh_now) {
        MinorWitness witness = monotonicity_witness(w, ell, *bad);
        if (witness.value < 0) {
          throw NotTotallyNonnegative("row support drops leftward",
                                      oriented(std::move(witness), flip));
        }
      }
      throw NotTotallyNonnegative("row support drops leftward");
    }

    if (auto corner = find_special_sw_corner(w)) {
      auto [piece, next] = eliminate_corner(w, *corner);
      push_step(out.steps, StepKind::CornerElim, StepSide::Left, piece, w,
                next,
                "corner eliminated at row " + std::to_string(corner->i_star) +
                    ", column " + std::to_string(corner->j_star) +
                    ", ratio " + rational_to_string(corner->a0 / corner->b0));
      out.lefts.push_back(piece);
      w = next;
      continue;
    }

    const LoopMatrix wt = w.transpose();
    const std::vector<long> ell_t = row_leftmost_support(wt);
    if (auto bad = monotonicity_violation(ell_t, wt.m())) {
      if (fresh_now) {
        MinorWitness witness = monotonicity_witness(wt, ell_t, *bad);
        if (witness.value < 0) {
          throw NotTotallyNonnegative("column support drops upward",
                                      oriented(std::move(witness), !flip));
        }
      }
      throw NotTotallyNonnegative("column support drops upward");
    }

    if (auto corner = find_special_sw_corner(wt)) {
      auto [piece_t, next_t] = eliminate_corner(wt, *corner);
      const CylNetwork piece = transpose_network(piece_t);
      const LoopMatrix next = next_t.transpose();
      push_step(out.steps, StepKind::CornerElim, StepSide::Right, piece, w,
                next,
                "corner eliminated at row " + std::to_string(corner->i_star) +
                    ", column " + std::to_string(corner->j_star) +
                    " of the transpose, ratio " +
                    rational_to_string(corner->a0 / corner->b0));
      out.rights.push_back(piece);
      w = next;
      continue;
    }

    // No corner on either side: the support is a full constant-width band.
    if (w.n() == 1) {
      const LaurentPoly p = w.entry(1, 1);
      const long low = p.min_degree();
      if (low != 0) {
        const CylNetwork piece = diagonal_base_network({Rational(1)}, low);
        LoopMatrix next(1, 1);
        next.set_entry(1, 1, p.shifted(-low));
        push_step(out.steps, StepKind::NonspecialElim, StepSide::Right, piece,
                  w, next,
                  "monomial factor of degree " + std::to_string(low) +
                      " split off");
        out.rights.push_back(piece);
        w = next;
        continue;
      }
      const auto root = find_peel_root(p);
      if (!root) {
        throw FactorizationStuck(
            "entry has no rational root to peel a linear factor from");
      }
      const Rational x = Rational(-1) / *root;
      LaurentPoly lin(Rational(1));
      lin.add_term(x, 1);
      const auto quotient = divide_exact(p, lin);
      if (!quotient) {
        throw std::logic_error("internal error: root division not exact");
      }
      const CylNetwork piece = bidiagonal_slice_network({x});
      LoopMatrix next(1, 1);
      next.set_entry(1, 1, *quotient);
      push_step(out.steps, StepKind::NonspecialElim, StepSide::Right, piece,
                w, next,
                "linear factor peeled with weight " + rational_to_string(x));
      out.rights.push_back(piece);
      w = next;
      continue;
    }

    // The support is a full band of constant width; its width is the number
    // of occupied diagonals j - i + d*n.
    long d_lo = 0, d_hi = 0;
    bool first = true;
    for (long i = 1; i <= w.n(); ++i) {
      for (long j = 1; j <= w.m(); ++j) {
        for (const auto& [d, c] : w.entry(i, j).terms()) {
          const long o = j - i + d * w.n();
          if (first) {
            d_lo = d_hi = o;
            first = false;
          } else {
            d_lo = std::min(d_lo, o);
            d_hi = std::max(d_hi, o);
          }
        }
      }
    }
    std::string note;
    auto [piece, next] = peel_band(w, ell, d_hi - d_lo + 1, &note);
    push_step(out.steps, StepKind::NonspecialElim, StepSide::Right, piece, w,
              next, note);
    out.rights.push_back(piece);
    w = next;
  }
  throw FactorizationStuck("iteration limit exceeded");
}

}  // namespace

std::pair<CylNetwork, LoopMatrix> eliminate_corner(const LoopMatrix& m,
                                                   const CornerLocation& c) {
  if (c.i_star < 2 || c.i_star > m.n() + 1) {
    throw std::invalid_argument("corner row out of range");
  }
  if (c.b0 == 0) {
    throw std::invalid_argument("corner pivot must be nonzero");
  }
  const Rational ratio = c.a0 / c.b0;
  if (ratio < 0) {
    const bool a_neg = c.a0 < 0;
    const long row = a_neg ? c.i_star : c.i_star - 1;
    const Rational value = a_neg ? c.a0 : c.b0;
    throw NotTotallyNonnegative(
        "corner ratio is negative",
        shifted_witness({row}, {c.j_star}, value, m.n(), m.m()));
  }
  auto [ratio_applied, next] = apply_corner_elimination(m, c);
  const long row = c.i_star <= m.n() ? c.i_star : 1;
  return {elementary_row_network(m.n(), row, ratio_applied), next};
}

FactorResult factor(const LoopMatrix& m) {
  Partial partial;
  try {
    partial = factor_impl(m, true, false);
  } catch (const NotTotallyNonnegative& e) {
    if (e.witness()) throw;
    // Structural refutation without a minor in hand: look for one in
    // growing windows of the original input before giving up on a witness.
    for (long span = 3; span <= 5; ++span) {
      if (auto found = is_tn_window(m, span)) {
        throw NotTotallyNonnegative(e.what(), *found);
      }
    }
    throw NotTotallyNonnegative(
        std::string(e.what()) +
            "; no negative minor located in the scanned windows",
        std::nullopt);
  }

  CylNetwork net = *partial.base;
  for (auto it = partial.lefts.rbegin(); it != partial.lefts.rend(); ++it) {
    net = concatenate(*it, net);
  }
  for (auto it = partial.rights.rbegin(); it != partial.rights.rend(); ++it) {
    net = concatenate(net, *it);
  }
  const bool certified = certify(m, net);
  return FactorResult{std::move(partial.steps), std::move(net), certified};
}

bool certify(const LoopMatrix& m, const CylNetwork& net) {
  for (const Edge& e : net.edges()) {
    if (e.weight < 0) return false;
  }
  return folded_weight_matrix(net) == m;
}

}  // namespace cyltn
