// Acceptance gate: ten end-to-end behavior checks, each reported as a single
// [PASS]/[FAIL] line with its elapsed time. All arithmetic is exact; every
// criterion also carries a wall-clock budget that counts as part of the check.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyltn/delta.hpp"
#include "cyltn/dense.hpp"
#include "cyltn/factor.hpp"
#include "cyltn/interlace.hpp"
#include "cyltn/json_io.hpp"
#include "cyltn/laurent.hpp"
#include "cyltn/loop_matrix.hpp"
#include "cyltn/network.hpp"
#include "cyltn/prng.hpp"
#include "cyltn/rational.hpp"
#include "cyltn/tl.hpp"
#include "cyltn/tncheck.hpp"
#include "oracles.hpp"

using namespace cyltn;
using testutil::poly_with_neg_roots;
using testutil::random_rational;
using testutil::random_slice_network;
using testutil::random_subset;

namespace {

int g_check_failures = 0;

void require(bool ok, const char* what) {
  if (ok) return;
  ++g_check_failures;
  if (g_check_failures <= 8) std::printf("       check failed: %s\n", what);
}

DenseMatrix dense_from_rows(const std::vector<std::vector<long>>& rows) {
  const long r = static_cast<long>(rows.size());
  const long c = r > 0 ? static_cast<long>(rows[0].size()) : 0;
  DenseMatrix out(r, c);
  for (long i = 1; i <= r; ++i)
    for (long j = 1; j <= c; ++j)
      out.set(i, j, Rational(rows[static_cast<size_t>(i - 1)]
                                 [static_cast<size_t>(j - 1)]));
  return out;
}

// 2x2 periodic matrix whose unfolded window hides a negative 2x2 minor that
// no single-row or single-column test can see.
const char kCounterexample[] =
    R"({"n":2,"m":2,"entries":[[{"0":"21","1":"10","2":"1"},{"0":"40","1":"14","2":"1"}],[{"0":"10","1":"7","2":"1"},{"0":"18","1":"9","2":"1"}]]})";

// (1) Exact unfolding of a geometric 2x2 block matrix: single entries, a
// full window, and the folded summary statistics.
void criterion_unfolding() {
  const LoopMatrix m = loop_matrix_from_json(
      R"({"n":2,"m":2,"entries":[[{"0":"1","1":"6","2":"36"},{"0":"2","1":"12","2":"72"}],[{"1":"3","2":"18"},{"0":"1","1":"6","2":"36"}]]})");
  require(m.unfold_entry(1, 3) == 6, "entry (1,3) of the unfolding");
  require(m.unfold_entry(2, 1) == 0, "entry (2,1) of the unfolding");
  require(m.unfold_entry(2, 4) == 6, "entry (2,4) of the unfolding");
  require(m.unfold_entry(3, 5) == 6, "entry (3,5) repeats one period down");
  require(m.unfold_entry(6, 6) == 1, "entry (6,6) of the unfolding");
  require(m.unfold_entry(5, 1) == 0, "entry (5,1) below the support");
  const DenseMatrix expected = dense_from_rows({{1, 2, 6, 12, 36, 72},
                                                {0, 1, 3, 6, 18, 36},
                                                {0, 0, 1, 2, 6, 12},
                                                {0, 0, 0, 1, 3, 6},
                                                {0, 0, 0, 0, 1, 2},
                                                {0, 0, 0, 0, 0, 1}});
  require(m.window(6, 6) == expected, "6x6 window of the unfolding");
  require(m.nonzero_coeff_count() == 11, "folded nonzero coefficient count");
  const auto range = m.degree_range();
  require(range.has_value() && range->first == 0 && range->second == 2,
          "folded degree range");
}

// (2) A seven-vertex network with edges crossing the gluing line in both
// directions: folded weight matrix and a two-period window.
void criterion_network_window() {
  const CylNetwork net(7, {0, 1, 2}, {4, 5, 6},
                       {Edge{0, 3, Rational(1), 0}, Edge{2, 3, Rational(1), 1},
                        Edge{3, 4, Rational(1), 0}, Edge{3, 6, Rational(1), -1},
                        Edge{1, 5, Rational(1), 0}});
  const LoopMatrix w = folded_weight_matrix(net);
  LoopMatrix expected(3, 3);
  expected.set_entry(1, 1, LaurentPoly::monomial(Rational(1), 0));
  expected.set_entry(1, 3, LaurentPoly::monomial(Rational(1), -1));
  expected.set_entry(2, 2, LaurentPoly::monomial(Rational(1), 0));
  expected.set_entry(3, 1, LaurentPoly::monomial(Rational(1), 1));
  expected.set_entry(3, 3, LaurentPoly::monomial(Rational(1), 0));
  require(w == expected, "folded weight matrix of the wrapping network");
  const DenseMatrix window = dense_from_rows({{1, 0, 0, 0, 0, 0},
                                              {0, 1, 0, 0, 0, 0},
                                              {0, 0, 1, 1, 0, 0},
                                              {0, 0, 1, 1, 0, 0},
                                              {0, 0, 0, 0, 1, 0},
                                              {0, 0, 0, 0, 0, 1}});
  require(w.window(6, 6) == window, "two-period window of the unfolding");
}

// (3) Five-strand diagram algebra: a product of sums expands into diagrams
// with a symbolic loop weight.
void criterion_tl_product() {
  const auto t1 = TlElement::from_diagram(tl_generator(5, 1));
  const auto t2 = TlElement::from_diagram(tl_generator(5, 2));
  const auto t3 = TlElement::from_diagram(tl_generator(5, 3));
  const NcMatching a =
      NcMatching::from_pairs(5, {{1, 2}, {3, 6}, {4, 9}, {5, 10}, {7, 8}});
  const NcMatching b =
      NcMatching::from_pairs(5, {{1, 2}, {3, 6}, {4, 7}, {5, 10}, {8, 9}});
  const TlElement x = tl_multiply(t1, t2);
  require(x == TlElement::from_diagram(a), "product of adjacent generators");
  const LaurentPoly xi = LaurentPoly::monomial(Rational(1), 1);
  const TlElement y = tl_multiply(x, t2 + t3);
  const TlElement expected =
      tl_scale(xi, TlElement::from_diagram(a)) + TlElement::from_diagram(b);
  require(y == expected, "expansion with one closed loop");
}

// (4) On random square matrices, every complementary minor product equals
// the sum of the immanants selected by its two-colored diagram.
void criterion_rs_identity() {
  SplitMix64 rng(2026);
  for (int trial = 0; trial < 50; ++trial) {
    const long n = 3 + trial % 3;
    DenseMatrix m(n, n);
    for (long i = 1; i <= n; ++i)
      for (long j = 1; j <= n; ++j)
        m.set(i, j, random_rational(rng, -4, 4, 2));
    const std::vector<NcMatching> basis = tl_basis(n);
    const std::vector<Rational> imms = immanant_vector(m);
    std::map<NcMatching, Rational> by_diagram;
    for (size_t k = 0; k < basis.size(); ++k) by_diagram[basis[k]] = imms[k];
    for (long k = 0; k <= n; ++k)
      for (const auto& I : k_subsets(n, k))
        for (const auto& J : k_subsets(n, k)) {
          Rational sum = 0;
          for (const NcMatching& T : theta(cm_diagram(I, J, n)))
            sum += by_diagram.at(T);
          require(sum == comp_minor_immanant(m, I, J),
                  "complementary minor equals its immanant sum");
        }
  }
}

// (5) Windows of random products of nonnegative elementary folded matrices:
// all immanants are nonnegative, and a vanishing complementary minor forces
// every immanant its diagram selects to vanish.
void criterion_tn_immanants() {
  SplitMix64 rng(2027);
  for (int trial = 0; trial < 100; ++trial) {
    const long n = 2 + rng.below(4);
    LoopMatrix prod = LoopMatrix::identity(n);
    const long chain = 3 + rng.below(5);
    for (long s = 0; s < chain; ++s) {
      const long pick = rng.below(3);
      const LwKind kind = pick == 0   ? LwKind::Diagonal
                          : pick == 1 ? LwKind::Upper
                                      : LwKind::Lower;
      const long position =
          1 + rng.below(kind == LwKind::Diagonal ? n : n - 1);
      const Rational value = kind == LwKind::Diagonal
                                 ? random_rational(rng, 1, 4, 2)
                                 : random_rational(rng, 0, 3, 2);
      prod = loop_mul(prod, lw_generator(n, kind, position, value));
    }
    const DenseMatrix w = prod.window(n, n);
    const std::vector<NcMatching> basis = tl_basis(n);
    const std::vector<Rational> imms = immanant_vector(w);
    std::map<NcMatching, Rational> by_diagram;
    for (size_t k = 0; k < basis.size(); ++k) by_diagram[basis[k]] = imms[k];
    for (const Rational& v : imms)
      require(v >= 0, "immanant of a totally nonnegative window");
    for (long k = 0; k <= n; ++k)
      for (const auto& I : k_subsets(n, k))
        for (const auto& J : k_subsets(n, k)) {
          if (comp_minor_immanant(w, I, J) != 0) continue;
          for (const NcMatching& T : theta(cm_diagram(I, J, n)))
            require(by_diagram.at(T) == 0,
                    "vanishing minor product kills its immanants");
        }
  }
}

// (6) Path-sum minors of random networks match the determinants of the
// corresponding unfolded windows, through order 3 and across two periods.
void criterion_glv_minors() {
  SplitMix64 rng(2028);
  for (int trial = 0; trial < 20; ++trial) {
    const CylNetwork net = random_slice_network(rng, 2, true);
    const LoopMatrix w = folded_weight_matrix(net);
    const long rows = 2 * w.n();
    const long cols = 2 * w.m();
    const long max_order = std::min<long>(3, std::min(rows, cols));
    for (long k = 1; k <= max_order; ++k)
      for (const auto& I : k_subsets(rows, k))
        for (const auto& J : k_subsets(cols, k))
          require(glv_minor(net, I, J) == w.window(I, J).determinant(),
                  "path-sum minor equals window determinant");
  }
}

std::vector<std::pair<LoopMatrix, FactorResult>> g_factored;

// (7) Weight matrices of random networks factor back into certified
// networks: the certificate rebuilds the exact folded matrix.
void criterion_factor_roundtrip() {
  g_factored.clear();
  SplitMix64 rng(2029);
  for (int trial = 0; trial < 30; ++trial) {
    const CylNetwork net = random_slice_network(rng, 2, true);
    const LoopMatrix w = folded_weight_matrix(net);
    const FactorResult res = factor(w);
    require(res.certified, "factorization is certified");
    require(folded_weight_matrix(res.network) == w,
            "factored network rebuilds the folded matrix");
    g_factored.emplace_back(w, res);
  }
}

// (8) Every matrix along those factorization traces stays totally
// nonnegative on a scanned window, inputs included.
void criterion_trace_windows() {
  require(!g_factored.empty(), "factorization traces are available");
  for (const auto& [w, res] : g_factored) {
    require(!is_tn_window(w, 2, 3).has_value(),
            "input passes the window scan");
    for (const FactorStep& s : res.steps)
      require(!is_tn_window(s.resulting_matrix, 2, 3).has_value(),
              "intermediate matrix passes the window scan");
  }
}

// (9) The corner elimination identity chain holds on random two-row and
// four-row instances, ten submatrix choices each.
void criterion_delta_identities() {
  SplitMix64 rng(2030);
  for (int trial = 0; trial < 10; ++trial) {
    // Two rows: stack an interlacing pair with rational roots. Alternating
    // the sorted root list between the two polynomials forces interlacing.
    const long extra = rng.below(2);
    std::vector<Rational> r0, r1;
    Rational q = random_rational(rng, 1, 3, 2);
    for (long i = 0; i < 4 + extra; ++i) {
      ((i % 2 == 0) ? r0 : r1).push_back(q);
      q += random_rational(rng, 1, 3, 2);
    }
    const LoopMatrix m = hurwitz(poly_with_neg_roots(r0), poly_with_neg_roots(r1));
    const auto corner = find_special_sw_corner(m);
    require(corner.has_value(), "two-row instance has a corner");
    if (!corner) continue;
    for (int pick = 0; pick < 10; ++pick) {
      const long size = 1 + rng.below(3);
      const auto I = random_subset(rng, 12, size);
      const auto J = random_subset(rng, 12, size);
      require(verify_dcmd_det(m, *corner, I, J),
              "two-row elimination identity chain");
    }
  }
  for (int trial = 0; trial < 10; ++trial) {
    // Four rows, two columns: elementary slices around a diagonal base,
    // then two column deletions. Resample until a corner exists.
    std::optional<CornerLocation> corner;
    LoopMatrix m(4, 2);
    for (int attempt = 0; attempt < 500 && !corner; ++attempt) {
      CylNetwork net = elementary_row_network(4, 2 + rng.below(3),
                                              random_rational(rng, 0, 3, 2));
      net = concatenate(net, elementary_row_network(
                                 4, 2 + rng.below(3),
                                 random_rational(rng, 0, 3, 2)));
      net = concatenate(
          net, diagonal_base_network(
                   {random_rational(rng, 1, 4, 2), random_rational(rng, 1, 4, 2),
                    random_rational(rng, 1, 4, 2), random_rational(rng, 1, 4, 2)}));
      net = concatenate(
          net, transpose_network(row_deletion_network(4, 1 + rng.below(4))));
      net = concatenate(
          net, transpose_network(row_deletion_network(3, 1 + rng.below(3))));
      const LoopMatrix candidate = folded_weight_matrix(net);
      try {
        corner = find_special_sw_corner(candidate);
      } catch (const std::invalid_argument&) {
        corner.reset();
      }
      if (corner) m = candidate;
    }
    require(corner.has_value(), "four-row instance with a corner found");
    if (!corner) continue;
    for (int pick = 0; pick < 10; ++pick) {
      const long size = 1 + rng.below(3);
      auto I = random_subset(rng, 10, size);
      if (corner->i_star == 5) {
        // Row 1 of the wrapping residue class has no predecessor row.
        while (std::find(I.begin(), I.end(), 1) != I.end())
          I = random_subset(rng, 10, size);
      }
      const auto J = random_subset(rng, 8, size);
      require(verify_dcmd_det(m, *corner, I, J),
              "four-row elimination identity chain");
    }
  }
}

// Factorization verdict on the stacked pair, with refutations and dead ends
// both counting as "not certified".
bool factors_certified(const LoopMatrix& m) {
  try {
    return factor(m).certified;
  } catch (const NotTotallyNonnegative&) {
    return false;
  } catch (const FactorizationStuck&) {
    return false;
  }
}

// (10) Interlacing three ways: the counterexample that entrywise conditions
// miss, agreement of both deciders with the factorization certificate on
// stacked pairs, and the reversed form for side-by-side pairs.
void criterion_interlace_equivalence() {
  const LoopMatrix cx = loop_matrix_from_json(kCounterexample);
  require(check_same_row_col(cx).empty(),
          "entrywise row and column conditions are silent");
  const auto witness = is_tn_window(cx);
  require(witness.has_value() && witness->rows == std::vector<long>{1, 2} &&
              witness->cols == std::vector<long>{1, 2} &&
              witness->value == Rational(-22),
          "window scan finds the negative minor");
  bool refuted = false;
  try {
    factor(cx);
  } catch (const NotTotallyNonnegative& e) {
    refuted = e.witness().has_value() && e.witness()->value == Rational(-22);
  }
  require(refuted, "factorization refutes with the same minor");

  SplitMix64 rng(2031);
  const auto random_poly = [&rng](long max_deg) {
    std::vector<Rational> coeffs;
    const long deg = rng.below(max_deg + 1);
    for (long k = 0; k <= deg; ++k)
      coeffs.push_back(k == deg ? random_rational(rng, 1, 4, 2)
                                : random_rational(rng, 0, 4, 2));
    return RatPoly(std::move(coeffs));
  };
  // Sorted distinct positive values; the caller splits them into root lists.
  const auto root_ladder = [&rng](long count) {
    std::vector<Rational> qs;
    Rational q = random_rational(rng, 1, 3, 2);
    for (long i = 0; i < count; ++i) {
      qs.push_back(q);
      q += random_rational(rng, 1, 3, 2);
    }
    return qs;
  };

  for (long checked = 0; checked < 300; ++checked) {
    RatPoly p0, p1;
    const long family = rng.below(3);
    if (family == 0) {
      // Interlacing with rational roots: alternate the sorted ladder, then
      // optionally multiply both by a shared rational-rooted factor.
      const long count = 2 + rng.below(4);
      const auto qs = root_ladder(count);
      std::vector<Rational> r0, r1;
      for (size_t i = 0; i < qs.size(); ++i)
        ((i % 2 == 0) ? r0 : r1).push_back(qs[i]);
      p0 = poly_with_neg_roots(r0);
      p1 = poly_with_neg_roots(r1);
      if (rng.below(3) == 0) {
        const RatPoly shared =
            poly_with_neg_roots({random_rational(rng, 1, 3, 2)});
        p0 = p0 * shared;
        p1 = p1 * shared;
      }
    } else if (family == 1) {
      p0 = random_poly(4);
      p1 = random_poly(4);
    } else {
      // Rational roots split in blocks rather than alternating; for four or
      // more values this cannot interlace.
      const auto qs = root_ladder(4);
      p0 = poly_with_neg_roots({qs[0], qs[1]});
      p1 = poly_with_neg_roots({qs[2], qs[3]});
      if (rng.below(2) == 0) std::swap(p0, p1);
    }
    const bool s = interlaces_sturm(p0, p1);
    const bool r = interlaces_routh(p0, p1);
    const bool f = factors_certified(hurwitz(p0, p1));
    require(s == r, "root-counting and recursion deciders agree");
    require(s == f, "deciders agree with the factorization certificate");
  }

  for (long checked = 0; checked < 50; ++checked) {
    RatPoly p0, p1;
    const long family = rng.below(3);
    if (family == 0) {
      // Reversals of an equal-degree interlacing pair with rational roots
      // and nonzero constant terms.
      const long pairs = 1 + rng.below(2);
      const auto qs = root_ladder(2 * pairs);
      std::vector<Rational> r0, r1;
      for (size_t i = 0; i < qs.size(); ++i)
        ((i % 2 == 0) ? r0 : r1).push_back(qs[i]);
      const RatPoly a0 = poly_with_neg_roots(r0);
      const RatPoly a1 = poly_with_neg_roots(r1);
      const long d = a1.degree();
      p0 = reverse(a0, d);
      p1 = reverse(a1, d);
    } else {
      p1 = random_poly(4);
      if (p1.degree() < 0) p1 = RatPoly::constant(1);
      p0 = random_poly(family == 2 ? 6 : p1.degree());
    }
    LoopMatrix row(1, 2);
    row.set_entry(1, 1, to_laurent(p1));
    row.set_entry(1, 2, to_laurent(p0));
    if (p0.degree() > p1.degree()) {
      require(!factors_certified(row),
              "degree overflow in a row is never certified");
      continue;
    }
    const long d = p1.degree();
    const bool s = interlaces_sturm(reverse(p0, d), reverse(p1, d));
    require(s == factors_certified(row),
            "reversed interlacing matches the row certificate");
  }
}

struct Criterion {
  const char* description;
  double budget_seconds;
  void (*body)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"unfolds a geometric 2x2 periodic matrix into exact windows", 1.0,
       criterion_unfolding},
      {"recovers folded and unfolded weights of a wrapping network", 1.0,
       criterion_network_window},
      {"expands a five-strand diagram product with a symbolic loop weight",
       1.0, criterion_tl_product},
      {"complementary minors expand over immanants on random matrices", 120.0,
       criterion_rs_identity},
      {"immanant positivity and forced vanishing on nonnegative products",
       120.0, criterion_tn_immanants},
      {"path-sum minors match window determinants on random networks", 120.0,
       criterion_glv_minors},
      {"random network weight matrices factor into certified networks", 120.0,
       criterion_factor_roundtrip},
      {"factorization traces stay window-nonnegative end to end", 120.0,
       criterion_trace_windows},
      {"corner elimination identity chains hold on random instances", 120.0,
       criterion_delta_identities},
      {"interlacing deciders and factorization certificates coincide", 180.0,
       criterion_interlace_equivalence},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    g_check_failures = 0;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body();
    } catch (const std::exception& e) {
      ++g_check_failures;
      std::printf("       unexpected exception: %s\n", e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > c.budget_seconds) {
      ++g_check_failures;
      std::printf("       over budget: %.2fs > %.0fs\n", elapsed,
                  c.budget_seconds);
    }
    const bool ok = g_check_failures == 0;
    if (!ok) ++failed;
    std::printf("[%s] %s (%.2fs)\n", ok ? "PASS" : "FAIL", c.description,
                elapsed);
  }
  return failed;
}
