#include "cyltn/loop_matrix.hpp"

#include <stdexcept>

namespace cyltn {

namespace {

// Residue in 1..mod and block index for a (possibly nonpositive) global
// index: I = res + block*mod with res in 1..mod.
std::pair<long, long> split_index(long I, long mod) {
  long res = I % mod;
  if (res <= 0) res += mod;
  return {res, (I - res) / mod};
}

}  // namespace

LoopMatrix::LoopMatrix(long n, long m) : n_(n), m_(m) {
  if (n < 1 || m < 1) {
    throw std::invalid_argument("folded matrix dimensions must be >= 1");
  }
  e_.assign(static_cast<size_t>(n),
            std::vector<LaurentPoly>(static_cast<size_t>(m)));
}

LoopMatrix LoopMatrix::identity(long n) {
  LoopMatrix m(n, n);
  for (long i = 1; i <= n; ++i) m.set_entry(i, i, LaurentPoly(Rational(1)));
  return m;
}

const LaurentPoly& LoopMatrix::entry(long i, long j) const {
  if (i < 1 || i > n_ || j < 1 || j > m_) {
    throw std::out_of_range("folded entry index out of range");
  }
  return e_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
}

void LoopMatrix::set_entry(long i, long j, const LaurentPoly& p) {
  if (i < 1 || i > n_ || j < 1 || j > m_) {
    throw std::out_of_range("folded entry index out of range");
  }
  e_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = p;
}

void LoopMatrix::add_unfolded(long I, long J, const Rational& v) {
  const auto [i, r] = split_index(I, n_);
  const auto [j, s] = split_index(J, m_);
  e_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)].add_term(v, s - r);
}

Rational LoopMatrix::unfold_entry(long I, long J) const {
  if (I < 1 || J < 1) {
    throw std::invalid_argument("unfolded indices must be >= 1");
  }
  return unfold_entry_extended(I, J);
}

Rational LoopMatrix::unfold_entry_extended(long I, long J) const {
  const auto [i, r] = split_index(I, n_);
  const auto [j, s] = split_index(J, m_);
  return entry(i, j).coeff(s - r);
}

DenseMatrix LoopMatrix::window(long rows, long cols) const {
  DenseMatrix out(rows, cols);
  for (long i = 1; i <= rows; ++i) {
    for (long j = 1; j <= cols; ++j) out.set(i, j, unfold_entry(i, j));
  }
  return out;
}

DenseMatrix LoopMatrix::window(const std::vector<long>& row_idx,
                               const std::vector<long>& col_idx) const {
  DenseMatrix out(static_cast<long>(row_idx.size()),
                  static_cast<long>(col_idx.size()));
  for (size_t r = 0; r < row_idx.size(); ++r) {
    for (size_t c = 0; c < col_idx.size(); ++c) {
      out.set(static_cast<long>(r) + 1, static_cast<long>(c) + 1,
              unfold_entry(row_idx[r], col_idx[c]));
    }
  }
  return out;
}

LoopMatrix LoopMatrix::transpose() const {
  LoopMatrix out(m_, n_);
  for (long i = 1; i <= n_; ++i) {
    for (long j = 1; j <= m_; ++j) {
      out.set_entry(j, i, entry(i, j).reversed_degrees());
    }
  }
  return out;
}

bool LoopMatrix::is_zero() const {
  for (const auto& row : e_) {
    for (const auto& p : row) {
      if (!p.is_zero()) return false;
    }
  }
  return true;
}

bool LoopMatrix::row_is_zero(long i) const {
  for (long j = 1; j <= m_; ++j) {
    if (!entry(i, j).is_zero()) return false;
  }
  return true;
}

bool LoopMatrix::col_is_zero(long j) const {
  for (long i = 1; i <= n_; ++i) {
    if (!entry(i, j).is_zero()) return false;
  }
  return true;
}

LoopMatrix LoopMatrix::drop_row(long i) const {
  if (n_ < 2) throw std::invalid_argument("cannot drop the only row");
  if (i < 1 || i > n_) throw std::out_of_range("row index out of range");
  LoopMatrix out(n_ - 1, m_);
  for (long r = 1, q = 1; r <= n_; ++r) {
    if (r == i) continue;
    for (long j = 1; j <= m_; ++j) out.set_entry(q, j, entry(r, j));
    ++q;
  }
  return out;
}

LoopMatrix LoopMatrix::drop_col(long j) const {
  if (m_ < 2) throw std::invalid_argument("cannot drop the only column");
  if (j < 1 || j > m_) throw std::out_of_range("column index out of range");
  LoopMatrix out(n_, m_ - 1);
  for (long i = 1; i <= n_; ++i) {
    for (long c = 1, q = 1; c <= m_; ++c) {
      if (c == j) continue;
      out.set_entry(i, q, entry(i, c));
      ++q;
    }
  }
  return out;
}

long LoopMatrix::nonzero_coeff_count() const {
  long count = 0;
  for (const auto& row : e_) {
    for (const auto& p : row) count += p.term_count();
  }
  return count;
}

std::optional<std::pair<long, long>> LoopMatrix::degree_range() const {
  std::optional<std::pair<long, long>> out;
  for (const auto& row : e_) {
    for (const auto& p : row) {
      if (p.is_zero()) continue;
      if (!out) {
        out = {p.min_degree(), p.max_degree()};
      } else {
        out->first = std::min(out->first, p.min_degree());
        out->second = std::max(out->second, p.max_degree());
      }
    }
  }
  return out;
}

bool operator==(const LoopMatrix& a, const LoopMatrix& b) {
  return a.n_ == b.n_ && a.m_ == b.m_ && a.e_ == b.e_;
}

LoopMatrix loop_mul(const LoopMatrix& a, const LoopMatrix& b) {
  if (a.m() != b.n()) {
    throw std::invalid_argument("folded product shape mismatch");
  }
  LoopMatrix out(a.n(), b.m());
  for (long i = 1; i <= a.n(); ++i) {
    for (long k = 1; k <= b.m(); ++k) {
      LaurentPoly acc;
      for (long j = 1; j <= a.m(); ++j) acc += a.entry(i, j) * b.entry(j, k);
      out.set_entry(i, k, acc);
    }
  }
  return out;
}

LoopMatrix loop_add(const LoopMatrix& a, const LoopMatrix& b) {
  if (a.n() != b.n() || a.m() != b.m()) {
    throw std::invalid_argument("folded sum shape mismatch");
  }
  LoopMatrix out(a.n(), a.m());
  for (long i = 1; i <= a.n(); ++i) {
    for (long j = 1; j <= a.m(); ++j) {
      out.set_entry(i, j, a.entry(i, j) + b.entry(i, j));
    }
  }
  return out;
}

}  // namespace cyltn
