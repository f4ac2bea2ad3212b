#include "cyltn/dense.hpp"

#include <stdexcept>
#include <utility>

namespace cyltn {

DenseMatrix::DenseMatrix(long rows, long cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw std::invalid_argument("matrix dimensions must be nonnegative");
  }
  a_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Rational(0));
}

DenseMatrix DenseMatrix::identity(long k) {
  DenseMatrix m(k, k);
  for (long i = 1; i <= k; ++i) m.set(i, i, Rational(1));
  return m;
}

const Rational& DenseMatrix::at(long i, long j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw std::out_of_range("dense matrix index out of range");
  }
  return a_[static_cast<size_t>(i - 1) * cols_ + static_cast<size_t>(j - 1)];
}

void DenseMatrix::set(long i, long j, const Rational& v) {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw std::out_of_range("dense matrix index out of range");
  }
  a_[static_cast<size_t>(i - 1) * cols_ + static_cast<size_t>(j - 1)] = v;
}

DenseMatrix DenseMatrix::submatrix(const std::vector<long>& row_idx,
                                   const std::vector<long>& col_idx) const {
  DenseMatrix out(static_cast<long>(row_idx.size()),
                  static_cast<long>(col_idx.size()));
  for (size_t r = 0; r < row_idx.size(); ++r) {
    for (size_t c = 0; c < col_idx.size(); ++c) {
      out.set(static_cast<long>(r) + 1, static_cast<long>(c) + 1,
              at(row_idx[r], col_idx[c]));
    }
  }
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix out(cols_, rows_);
  for (long i = 1; i <= rows_; ++i) {
    for (long j = 1; j <= cols_; ++j) out.set(j, i, at(i, j));
  }
  return out;
}

Rational DenseMatrix::determinant() const {
  if (rows_ != cols_) {
    throw std::invalid_argument("determinant of non-square matrix");
  }
  const long k = rows_;
  if (k == 0) return Rational(1);

  std::vector<Rational> w = a_;
  auto el = [&](long i, long j) -> Rational& {
    return w[static_cast<size_t>(i) * k + static_cast<size_t>(j)];
  };

  Rational det(1);
  for (long c = 0; c < k; ++c) {
    long pivot = -1;
    for (long r = c; r < k; ++r) {
      if (el(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != c) {
      for (long j = c; j < k; ++j) std::swap(el(pivot, j), el(c, j));
      det = -det;
    }
    det *= el(c, c);
    for (long r = c + 1; r < k; ++r) {
      if (el(r, c) == 0) continue;
      const Rational f = el(r, c) / el(c, c);
      for (long j = c; j < k; ++j) el(r, j) -= f * el(c, j);
    }
  }
  return det;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::vector<long> position_complement(const std::vector<long>& subset,
                                      long k) {
  std::vector<long> out;
  out.reserve(static_cast<size_t>(k) - subset.size());
  size_t s = 0;
  for (long v = 1; v <= k; ++v) {
    if (s < subset.size() && subset[s] == v) {
      ++s;
    } else {
      out.push_back(v);
    }
  }
  if (s != subset.size()) {
    throw std::invalid_argument(
        "subset must be strictly increasing within 1..k");
  }
  return out;
}

std::vector<std::vector<long>> k_subsets(long universe, long k) {
  std::vector<std::vector<long>> out;
  if (k < 0 || k > universe) return out;
  std::vector<long> cur(static_cast<size_t>(k));
  for (long i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i + 1;
  while (true) {
    out.push_back(cur);
    // Advance to the next subset in lexicographic order.
    long i = k - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == universe - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (long j = i + 1; j < k; ++j) {
      cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return out;
}

}  // namespace cyltn
