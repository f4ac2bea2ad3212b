// Machinery behind the corner-elimination minor identities: changed-row
// bookkeeping, the generalized window, its decorated diagram, and the
// four-way determinant check.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "cyltn/delta.hpp"
#include "cyltn/prng.hpp"
#include "oracles.hpp"

using namespace cyltn;
using testutil::lp;

namespace {

// Two-row matrix whose rows carry fixed degree-6 polynomials with distinct
// small-prime coefficients, so every minor below is a nonzero certificate.
LoopMatrix two_row_fixture() {
  LoopMatrix m(2, 1);
  m.set_entry(1, 1,
              lp({{0, "1"}, {1, "2"}, {2, "3"}, {3, "5"}, {4, "7"},
                  {5, "11"}, {6, "13"}}));
  m.set_entry(2, 1,
              lp({{0, "2"}, {1, "3"}, {2, "5"}, {3, "7"}, {4, "11"},
                  {5, "13"}, {6, "17"}}));
  return m;
}

LoopMatrix wrap_fixture() {
  LoopMatrix m(2, 1);
  m.set_entry(1, 1, lp({{0, "1"}, {1, "1"}}));
  m.set_entry(2, 1, lp({{1, "1"}, {2, "1"}}));
  return m;
}

// Four-row, two-column matrix with every entry supported on degrees 0..2 and
// a nonzero constant term, so the corner scanner lands on row 4.
LoopMatrix four_row_fixture() {
  SplitMix64 rng(1212);
  LoopMatrix m(4, 2);
  for (long i = 1; i <= 4; ++i) {
    for (long j = 1; j <= 2; ++j) {
      LaurentPoly p;
      p.add_term(Rational(rng.range(1, 5)), 0);
      for (long g = 1; g <= 2; ++g) {
        const long c = rng.range(0, 4);
        if (c != 0) p.add_term(Rational(c), g);
      }
      m.set_entry(i, j, p);
    }
  }
  return m;
}

// Alternating-sign expansion over subsets of the changed rows; equals the
// minor of the eliminated matrix when the identities hold.
Rational subset_expansion(const LoopMatrix& m, const CornerLocation& corner,
                          const std::vector<long>& I,
                          const std::vector<long>& J, const Rational& c,
                          const std::vector<long>& A) {
  Rational total(0);
  for (size_t mask = 0; mask < (size_t{1} << A.size()); ++mask) {
    std::vector<long> S;
    for (size_t b = 0; b < A.size(); ++b)
      if (mask & (size_t{1} << b)) S.push_back(A[b]);
    Rational term = delta_s(m, corner, I, J, S).determinant();
    for (size_t k = 0; k < S.size(); ++k) term *= -c;
    total += term;
  }
  return total;
}

}  // namespace

TEST_CASE("two-row fixture: machinery fields") {
  const LoopMatrix m = two_row_fixture();
  const auto corner_opt = find_special_sw_corner(m);
  REQUIRE(corner_opt.has_value());
  const CornerLocation corner = *corner_opt;
  CHECK(corner.i_star == 2);
  CHECK(corner.j_star == 1);
  CHECK(corner.a0 == 2);
  CHECK(corner.b0 == 1);

  const std::vector<long> I = {2, 5, 8};
  const std::vector<long> J = {5, 6, 7};
  const DeltaMachinery mach = build_delta_machinery(m, corner, I, J);

  CHECK(mach.A == std::vector<long>{2, 8});
  CHECK(mach.A_minus == std::vector<long>{1, 7});
  CHECK(mach.C == std::vector<long>{1, 4});
  CHECK(mach.rows == std::vector<long>{1, 2, 5, 7, 8});
  CHECK(mach.cols == std::vector<long>{1, 4, 5, 6, 7});
  CHECK(mach.col_from_c == std::vector<bool>{true, true, false, false, false});

  const long expected[5][5] = {{1, 5, 7, 11, 13},
                               {2, 7, 11, 13, 17},
                               {0, 2, 3, 5, 7},
                               {0, 1, 2, 3, 5},
                               {0, 2, 3, 5, 7}};
  DenseMatrix tilde(5, 5);
  for (long r = 1; r <= 5; ++r)
    for (long c = 1; c <= 5; ++c)
      tilde.set(r, c, Rational(expected[r - 1][c - 1]));
  CHECK(mach.tilde == tilde);

  using L = std::vector<DotColor>;
  using R = std::vector<DecDot>;
  CHECK(mach.diagram.left == L{DotColor::Black, DotColor::Black,
                               DotColor::White, DotColor::White,
                               DotColor::White});
  CHECK(mach.diagram.right == R{DecDot::GrayTop, DecDot::GrayBottom,
                                DecDot::Black, DecDot::GrayTop,
                                DecDot::GrayBottom});
}

TEST_CASE("two-row fixture: expansion terms and pivot minors") {
  const LoopMatrix m = two_row_fixture();
  const CornerLocation corner = *find_special_sw_corner(m);
  const std::vector<long> I = {2, 5, 8};
  const std::vector<long> J = {5, 6, 7};
  const DeltaMachinery mach = build_delta_machinery(m, corner, I, J);

  const auto terms = expand_decorated(mach.diagram);
  REQUIRE(terms.size() == 4);
  const int signs[] = {1, -1, -1, 1};
  const std::vector<long> white_rows[] = {{1, 4}, {2, 4}, {1, 5}, {2, 5}};
  for (int k = 0; k < 4; ++k) {
    CHECK(terms[k].first == signs[k]);
    CHECK(terms[k].second.left == mach.diagram.left);
    CHECK(evaluate_cm(terms[k].second, mach.tilde) ==
          comp_minor_immanant(mach.tilde, white_rows[k], {1, 2}));
  }

  // Gray-block pivot rows against the corner columns: upper rows give b0,
  // lower rows a0, one factor per block.
  CHECK(mach.tilde.submatrix({1, 4}, {1, 2}).determinant() ==
        corner.b0 * corner.b0);
  CHECK(mach.tilde.submatrix({2, 5}, {1, 2}).determinant() ==
        corner.a0 * corner.a0);
  CHECK(mach.tilde.submatrix({2, 4}, {1, 2}).determinant() ==
        corner.a0 * corner.b0);
  CHECK(mach.tilde.submatrix({1, 5}, {1, 2}).determinant() ==
        corner.b0 * corner.a0);
}

TEST_CASE("specialized windows select predecessor rows") {
  const LoopMatrix m = two_row_fixture();
  const CornerLocation corner = *find_special_sw_corner(m);
  const std::vector<long> I = {2, 5, 8};
  const std::vector<long> J = {5, 6, 7};

  CHECK(delta_s(m, corner, I, J, {}) == m.window(I, J));
  CHECK(delta_s(m, corner, I, J, {2}) == m.window({1, 5, 8}, J));
  CHECK(delta_s(m, corner, I, J, {2, 8}) == m.window({1, 5, 7}, J));
  CHECK_THROWS_WITH_AS(delta_s(m, corner, I, J, {5}),
                       "S must select changed rows only",
                       std::invalid_argument);

  // The alternating expansion over changed-row subsets reproduces the minor
  // of the eliminated matrix.
  const auto [c, eliminated] = apply_corner_elimination(m, corner);
  CHECK(eliminated.window(I, J).determinant() ==
        subset_expansion(m, corner, I, J, c, {2, 8}));
}

TEST_CASE("two-row fixture: full verification") {
  const LoopMatrix m = two_row_fixture();
  const CornerLocation corner = *find_special_sw_corner(m);
  CHECK(verify_dcmd_det(m, corner, {2, 5, 8}, {5, 6, 7}));

  SplitMix64 rng(1313);
  for (int trial = 0; trial < 10; ++trial) {
    const long k = rng.range(1, 4);
    const auto I = testutil::random_subset(rng, 12, k);
    const auto J = testutil::random_subset(rng, 12, k);
    CAPTURE(trial);
    CHECK(verify_dcmd_det(m, corner, I, J));
  }

  // Rows entirely outside the changed residue class leave nothing to track.
  const DeltaMachinery idle =
      build_delta_machinery(m, corner, {1, 3, 5}, {5, 6, 7});
  CHECK(idle.A.empty());
  CHECK(idle.rows == std::vector<long>{1, 3, 5});
  CHECK(verify_dcmd_det(m, corner, {1, 3, 5}, {5, 6, 7}));
}

TEST_CASE("wrapping corners and out-of-reach predecessors") {
  const LoopMatrix m = wrap_fixture();
  const auto corner_opt = find_special_sw_corner(m);
  REQUIRE(corner_opt.has_value());
  const CornerLocation corner = *corner_opt;
  CHECK(corner.i_star == 3);
  CHECK(corner.j_star == 2);

  CHECK_THROWS_WITH_AS(build_delta_machinery(m, corner, {1, 3}, {2, 3}),
                       "predecessor row falls below 1", std::invalid_argument);
  CHECK_THROWS_WITH_AS(delta_s(m, corner, {1, 3}, {2, 3}, {1}),
                       "predecessor row falls below 1", std::invalid_argument);

  const DeltaMachinery mach = build_delta_machinery(m, corner, {3, 5}, {2, 3});
  CHECK(mach.A == std::vector<long>{3, 5});
  CHECK(mach.C == std::vector<long>{2, 3});
  CHECK(verify_dcmd_det(m, corner, {3, 5}, {2, 3}));

  // A corner placed far to the right can demand a column copy left of the
  // unfolding's edge.
  const CornerLocation manual{7, 1, Rational(1), Rational(1)};
  CHECK_THROWS_WITH_AS(build_delta_machinery(m, manual, {3}, {2}),
                       "corner column copy falls below 1",
                       std::invalid_argument);
}

TEST_CASE("selection validation") {
  const LoopMatrix m = two_row_fixture();
  const CornerLocation corner = *find_special_sw_corner(m);
  CHECK_THROWS_WITH_AS(build_delta_machinery(m, corner, {1, 2}, {1}),
                       "row and column sets must have equal size",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_delta_machinery(m, corner, {0, 2}, {1, 2}),
                       "global index below 1", std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_delta_machinery(m, corner, {2, 2}, {1, 2}),
                       "index set must be strictly increasing",
                       std::invalid_argument);
}

TEST_CASE("four-row fixture: machinery fields and verification") {
  const LoopMatrix m = four_row_fixture();
  const auto corner_opt = find_special_sw_corner(m);
  REQUIRE(corner_opt.has_value());
  const CornerLocation corner = *corner_opt;
  CHECK(corner.i_star == 4);
  CHECK(corner.j_star == 1);

  const std::vector<long> I = {4, 6, 8, 12};
  const std::vector<long> J = {2, 3, 4, 5};
  const DeltaMachinery mach = build_delta_machinery(m, corner, I, J);

  CHECK(mach.A == std::vector<long>{4, 8, 12});
  CHECK(mach.A_minus == std::vector<long>{3, 7, 11});
  CHECK(mach.C == std::vector<long>{1, 3, 5});
  CHECK(mach.rows == std::vector<long>{3, 4, 6, 7, 8, 11, 12});
  CHECK(mach.cols == std::vector<long>{1, 2, 3, 3, 4, 5, 5});
  CHECK(mach.col_from_c ==
        std::vector<bool>{true, false, true, false, false, true, false});

  using L = std::vector<DotColor>;
  using R = std::vector<DecDot>;
  CHECK(mach.diagram.left == L{DotColor::Black, DotColor::White,
                               DotColor::Black, DotColor::White,
                               DotColor::White, DotColor::Black,
                               DotColor::White});
  CHECK(mach.diagram.right == R{DecDot::GrayTop, DecDot::GrayBottom,
                                DecDot::Black, DecDot::GrayTop,
                                DecDot::GrayBottom, DecDot::GrayTop,
                                DecDot::GrayBottom});

  // Upper gray rows against the three corner-column copies: lower triangular
  // with the sub-corner entry down the diagonal.
  CHECK(mach.tilde.submatrix({1, 4, 6}, {1, 3, 6}).determinant() ==
        corner.b0 * corner.b0 * corner.b0);

  CHECK(verify_dcmd_det(m, corner, I, J));

  SplitMix64 rng(1414);
  for (int trial = 0; trial < 6; ++trial) {
    const long k = rng.range(1, 4);
    const auto ri = testutil::random_subset(rng, 14, k);
    const auto rj = testutil::random_subset(rng, 14, k);
    CAPTURE(trial);
    CHECK(verify_dcmd_det(m, corner, ri, rj));
  }
}
