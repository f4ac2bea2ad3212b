#include "cyltn/tncheck.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyltn/dense.hpp"

namespace cyltn {

std::optional<MinorWitness> is_tn_window(const LoopMatrix& m, long row_span,
                                         long max_order) {
  if (row_span < 1) throw std::invalid_argument("row span must be >= 1");
  const long rows = row_span * m.n();
  long support_width = 0;
  if (auto range = m.degree_range()) {
    support_width = range->second - range->first + 1;
  }
  const long cols = row_span * m.m() + support_width * m.m();
  if (max_order <= 0) max_order = std::min<long>(4, m.n() * row_span);
  max_order = std::min(max_order, std::min(rows, cols));

  const DenseMatrix w = m.window(rows, cols);
  for (long order = 1; order <= max_order; ++order) {
    for (const auto& r : k_subsets(rows, order)) {
      for (const auto& c : k_subsets(cols, order)) {
        Rational d = w.submatrix(r, c).determinant();
        if (d < 0) return MinorWitness{r, c, d};
      }
    }
  }
  return std::nullopt;
}

namespace {

// Global column indices with nonzero entries in unfolded row i (one period
// representative, i in 1..n), sorted ascending.
std::vector<long> row_support(const LoopMatrix& m, long i) {
  std::vector<long> s;
  for (long j = 1; j <= m.m(); ++j) {
    for (const auto& [d, coeff] : m.entry(i, j).terms()) {
      s.push_back(j + d * m.m());
    }
  }
  std::sort(s.begin(), s.end());
  return s;
}

// Global row indices with nonzero entries in unfolded column j (one period
// representative, j in 1..m), sorted ascending. A coefficient at degree d of
// entry (i, j) sits at unfolded position (i - d*n, j).
std::vector<long> col_support(const LoopMatrix& m, long j) {
  std::vector<long> s;
  for (long i = 1; i <= m.n(); ++i) {
    for (const auto& [d, coeff] : m.entry(i, j).terms()) {
      s.push_back(i - d * m.n());
    }
  }
  std::sort(s.begin(), s.end());
  return s;
}

bool contiguous(const std::vector<long>& s) {
  for (size_t k = 1; k < s.size(); ++k) {
    if (s[k] != s[k - 1] + 1) return false;
  }
  return true;
}

}  // namespace

bool convex_support(const LoopMatrix& m) {
  for (long i = 1; i <= m.n(); ++i) {
    auto s = row_support(m, i);
    if (s.empty()) {
      throw std::invalid_argument("convexity scan requires nonzero rows");
    }
    if (!contiguous(s)) return false;
  }
  for (long j = 1; j <= m.m(); ++j) {
    auto s = col_support(m, j);
    if (s.empty()) {
      throw std::invalid_argument("convexity scan requires nonzero columns");
    }
    if (!contiguous(s)) return false;
  }
  return true;
}

std::vector<long> row_leftmost_support(const LoopMatrix& m) {
  std::vector<long> ell;
  ell.reserve(static_cast<size_t>(m.n()));
  for (long i = 1; i <= m.n(); ++i) {
    auto s = row_support(m, i);
    if (s.empty()) {
      throw std::invalid_argument("zero row has no leftmost support");
    }
    ell.push_back(s.front());
  }
  return ell;
}

std::optional<CornerLocation> find_special_sw_corner(const LoopMatrix& m) {
  const long n = m.n();
  const std::vector<long> ell = row_leftmost_support(m);
  // Periodic extension: ell(i + n) = ell(i) + m, defined for i in 1..n+2.
  auto ell_ext = [&](long i) -> long {
    if (i <= n) return ell[static_cast<size_t>(i - 1)];
    return ell[static_cast<size_t>(i - n - 1)] + m.m();
  };
  for (long i = 1; i <= n; ++i) {
    if (ell_ext(i + 1) < ell_ext(i)) {
      throw std::invalid_argument("support is not weakly monotone");
    }
  }
  // A pair of rows sharing their leftmost column is special only when the
  // next row starts strictly further right; scanning downward from the
  // largest residue finds one whenever any equal pair exists.
  for (long i_star = n + 1; i_star >= 2; --i_star) {
    if (ell_ext(i_star - 1) == ell_ext(i_star) &&
        ell_ext(i_star + 1) > ell_ext(i_star)) {
      const long j_star = ell_ext(i_star);
      return CornerLocation{i_star, j_star,
                            m.unfold_entry_extended(i_star, j_star),
                            m.unfold_entry_extended(i_star - 1, j_star)};
    }
  }
  return std::nullopt;
}

std::pair<Rational, LoopMatrix> apply_corner_elimination(
    const LoopMatrix& m, const CornerLocation& corner) {
  const long n = m.n();
  const long k = corner.i_star;
  if (k < 2 || k > n + 1) {
    throw std::invalid_argument("corner row out of range");
  }
  if (corner.b0 == 0) {
    throw std::invalid_argument("corner elimination needs a nonzero pivot");
  }
  const Rational c = corner.a0 / corner.b0;
  LoopMatrix out = m;
  if (k <= n) {
    for (long j = 1; j <= m.m(); ++j) {
      out.set_entry(k, j, m.entry(k, j) - c * m.entry(k - 1, j));
    }
  } else {
    // Wrapping residue: row n+1 is folded row 1 one period down, so the
    // subtracted row n enters with its degrees shifted by -1.
    for (long j = 1; j <= m.m(); ++j) {
      out.set_entry(1, j, m.entry(1, j) - c * m.entry(n, j).shifted(-1));
    }
  }
  return {c, out};
}

LoopMatrix lw_generator(long size, LwKind kind, long position,
                        const Rational& value) {
  if (value < 0) throw std::invalid_argument("generator value must be >= 0");
  LoopMatrix g = LoopMatrix::identity(size);
  switch (kind) {
    case LwKind::Upper:
      if (position < 1 || position >= size) {
        throw std::out_of_range("generator position out of range");
      }
      g.set_entry(position, position + 1, LaurentPoly(value));
      break;
    case LwKind::Lower:
      if (position < 1 || position >= size) {
        throw std::out_of_range("generator position out of range");
      }
      g.set_entry(position + 1, position, LaurentPoly(value));
      break;
    case LwKind::Diagonal:
      if (position < 1 || position > size) {
        throw std::out_of_range("generator position out of range");
      }
      g.set_entry(position, position, LaurentPoly(value));
      break;
  }
  return g;
}

}  // namespace cyltn
