#include "cyltn/delta.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cyltn {

namespace {

void check_selection(const std::vector<long>& s) {
  for (size_t k = 0; k < s.size(); ++k) {
    if (s[k] < 1) throw std::invalid_argument("global index below 1");
    if (k > 0 && s[k - 1] >= s[k]) {
      throw std::invalid_argument("index set must be strictly increasing");
    }
  }
}

Rational rat_pow(const Rational& x, long e) {
  Rational out(1);
  for (long k = 0; k < e; ++k) out *= x;
  return out;
}

// Rows of I in the residue class of the corner whose predecessor is absent
// from I.
std::vector<long> changed_rows(long n, const CornerLocation& corner,
                               const std::vector<long>& I) {
  long res = corner.i_star % n;
  if (res <= 0) res += n;
  std::set<long> iset(I.begin(), I.end());
  std::vector<long> a;
  for (long r : I) {
    if ((r - res) % n != 0) continue;
    if (iset.count(r - 1)) continue;
    a.push_back(r);
  }
  return a;
}

}  // namespace

DeltaMachinery build_delta_machinery(const LoopMatrix& m,
                                     const CornerLocation& corner,
                                     const std::vector<long>& I,
                                     const std::vector<long>& J) {
  if (I.size() != J.size()) {
    throw std::invalid_argument("row and column sets must have equal size");
  }
  check_selection(I);
  check_selection(J);

  DeltaMachinery out;
  out.corner = corner;
  out.I = I;
  out.J = J;
  out.A = changed_rows(m.n(), corner, I);
  for (long r : out.A) {
    if (r - 1 < 1) {
      throw std::invalid_argument("predecessor row falls below 1");
    }
    out.A_minus.push_back(r - 1);
    long k = (r - corner.i_star) / m.n();
    long cj = corner.j_star + k * m.m();
    if (cj < 1) {
      throw std::invalid_argument("corner column copy falls below 1");
    }
    out.C.push_back(cj);
  }

  std::merge(I.begin(), I.end(), out.A_minus.begin(), out.A_minus.end(),
             std::back_inserter(out.rows));

  // Columns: J merged with C, the C copy first on ties. Duplicates are
  // intentional; col_from_c tells the copies apart.
  size_t pj = 0, pc = 0;
  while (pj < J.size() || pc < out.C.size()) {
    bool take_c = pc < out.C.size() &&
                  (pj >= J.size() || out.C[pc] <= J[pj]);
    if (take_c) {
      out.cols.push_back(out.C[pc]);
      out.col_from_c.push_back(true);
      ++pc;
    } else {
      out.cols.push_back(J[pj]);
      out.col_from_c.push_back(false);
      ++pj;
    }
  }

  out.tilde = m.window(out.rows, out.cols);

  out.diagram.left.assign(out.cols.size(), DotColor::White);
  for (size_t p = 0; p < out.cols.size(); ++p) {
    if (out.col_from_c[p]) out.diagram.left[p] = DotColor::Black;
  }
  out.diagram.right.assign(out.rows.size(), DecDot::Black);
  std::map<long, size_t> row_pos;
  for (size_t p = 0; p < out.rows.size(); ++p) row_pos[out.rows[p]] = p;
  for (long r : out.A) {
    // r-1 and r are adjacent in rows: nothing in I or A_minus sits between.
    out.diagram.right[row_pos.at(r - 1)] = DecDot::GrayTop;
    out.diagram.right[row_pos.at(r)] = DecDot::GrayBottom;
  }
  return out;
}

DenseMatrix delta_s(const LoopMatrix& m, const CornerLocation& corner,
                    const std::vector<long>& I, const std::vector<long>& J,
                    const std::vector<long>& S) {
  check_selection(I);
  check_selection(J);
  const std::vector<long> a = changed_rows(m.n(), corner, I);
  std::set<long> aset(a.begin(), a.end());
  std::set<long> sset;
  for (long s : S) {
    if (!aset.count(s)) {
      throw std::invalid_argument("S must select changed rows only");
    }
    if (s - 1 < 1) {
      throw std::invalid_argument("predecessor row falls below 1");
    }
    sset.insert(s);
  }
  std::vector<long> rows;
  for (long i : I) {
    if (!sset.count(i)) rows.push_back(i);
  }
  for (long s : S) rows.push_back(s - 1);
  std::sort(rows.begin(), rows.end());
  return m.window(rows, J);
}

bool verify_dcmd_det(const LoopMatrix& m, const CornerLocation& corner,
                     const std::vector<long>& I, const std::vector<long>& J) {
  const DeltaMachinery mach = build_delta_machinery(m, corner, I, J);
  const auto [c, eliminated] = apply_corner_elimination(m, corner);
  const Rational lhs = eliminated.window(I, J).determinant();

  std::map<long, long> row_pos;
  for (size_t p = 0; p < mach.rows.size(); ++p) {
    row_pos[mach.rows[p]] = static_cast<long>(p) + 1;
  }
  std::vector<long> c_pos, j_pos;
  for (size_t p = 0; p < mach.cols.size(); ++p) {
    (mach.col_from_c[p] ? c_pos : j_pos).push_back(static_cast<long>(p) + 1);
  }

  const size_t asz = mach.A.size();
  Rational expansion(0);
  for (size_t mask = 0; mask < (size_t{1} << asz); ++mask) {
    std::vector<long> S;
    for (size_t b = 0; b < asz; ++b) {
      if (mask & (size_t{1} << b)) S.push_back(mach.A[b]);
    }
    const long ssz = static_cast<long>(S.size());
    const DenseMatrix ds = delta_s(m, corner, I, J, S);

    // One gray-block row per element of A: the lower row for S, the upper
    // row for the rest. On those rows the C columns carry a triangular
    // pattern whose determinant is a plain monomial in the corner entries.
    std::vector<long> pivot_rows;
    {
      std::set<long> sset(S.begin(), S.end());
      for (long r : mach.A) {
        pivot_rows.push_back(sset.count(r) ? row_pos.at(r)
                                           : row_pos.at(r - 1));
      }
      std::sort(pivot_rows.begin(), pivot_rows.end());
    }
    const Rational pivot_det =
        mach.tilde.submatrix(pivot_rows, c_pos).determinant();
    if (pivot_det != rat_pow(corner.a0, ssz) *
                         rat_pow(corner.b0, static_cast<long>(asz) - ssz)) {
      return false;
    }

    // The same selection read inside tilde must reproduce delta_s exactly.
    std::vector<long> ds_rows;
    {
      std::set<long> sset(S.begin(), S.end());
      for (long i : I) {
        if (!sset.count(i)) ds_rows.push_back(row_pos.at(i));
      }
      for (long s : S) ds_rows.push_back(row_pos.at(s - 1));
      std::sort(ds_rows.begin(), ds_rows.end());
    }
    if (!(mach.tilde.submatrix(ds_rows, j_pos) == ds)) return false;

    Rational sign = (ssz % 2 == 0) ? Rational(1) : Rational(-1);
    expansion += sign * rat_pow(c, ssz) * ds.determinant();
  }
  if (lhs != expansion) return false;

  // Empty selection: every window is 0 x 0 and the diagram side degenerates
  // to the empty product.
  if (mach.rows.empty()) return lhs == 1;

  Rational dcmd(0);
  for (const auto& [sign, cm] : expand_decorated(mach.diagram)) {
    dcmd += Rational(sign) * evaluate_cm(cm, mach.tilde);
  }
  return rat_pow(corner.b0, static_cast<long>(asz)) * lhs == dcmd;
}

}  // namespace cyltn
