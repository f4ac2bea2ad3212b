#include "cyltn/tl.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace cyltn {

NcMatching::NcMatching(std::vector<long> partner) : partner_(std::move(partner)) {
  const long sz = static_cast<long>(partner_.size());
  if (sz < 2 || sz % 2 != 0) {
    throw std::invalid_argument("matching needs an even number of points");
  }
  for (long p = 0; p < sz; ++p) {
    long q = partner_[static_cast<size_t>(p)];
    if (q < 0 || q >= sz || q == p ||
        partner_[static_cast<size_t>(q)] != p) {
      throw std::invalid_argument("partner array is not a perfect matching");
    }
  }
}

NcMatching NcMatching::from_pairs(
    long n, const std::vector<std::pair<long, long>>& pairs) {
  if (n < 1) throw std::invalid_argument("matching size must be >= 1");
  if (static_cast<long>(pairs.size()) != n) {
    throw std::invalid_argument("expected exactly n pairs");
  }
  std::vector<long> partner(static_cast<size_t>(2 * n), -1);
  for (const auto& [x, y] : pairs) {
    if (x < 1 || x > 2 * n || y < 1 || y > 2 * n || x == y) {
      throw std::invalid_argument("pair out of range");
    }
    if (partner[static_cast<size_t>(x - 1)] != -1 ||
        partner[static_cast<size_t>(y - 1)] != -1) {
      throw std::invalid_argument("point paired twice");
    }
    partner[static_cast<size_t>(x - 1)] = y - 1;
    partner[static_cast<size_t>(y - 1)] = x - 1;
  }
  return NcMatching(std::move(partner));
}

long NcMatching::partner(long p) const {
  if (p < 0 || p >= 2 * n()) throw std::out_of_range("point out of range");
  return partner_[static_cast<size_t>(p)];
}

namespace {

// Boundary cycle position: down the left column, then up the right column.
long cycle_pos(long p, long n) { return p < n ? p : 3 * n - p - 1; }

long point_of_cycle_pos(long c, long n) { return c < n ? c : 3 * n - c - 1; }

}  // namespace

bool NcMatching::noncrossing() const {
  const long half = n();
  std::vector<std::pair<long, long>> arcs;
  for (long p = 0; p < 2 * half; ++p) {
    long q = partner_[static_cast<size_t>(p)];
    if (p < q) {
      long a = cycle_pos(p, half), b = cycle_pos(q, half);
      arcs.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  for (size_t s = 0; s < arcs.size(); ++s) {
    for (size_t t = s + 1; t < arcs.size(); ++t) {
      auto [a, b] = arcs[s];
      auto [c, d] = arcs[t];
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
    }
  }
  return true;
}

std::vector<std::pair<long, long>> NcMatching::pairs() const {
  std::vector<std::pair<long, long>> out;
  for (long p = 0; p < 2 * n(); ++p) {
    long q = partner_[static_cast<size_t>(p)];
    if (p < q) out.emplace_back(p + 1, q + 1);
  }
  return out;
}

NcMatching identity_matching(long n) {
  if (n < 1) throw std::invalid_argument("matching size must be >= 1");
  std::vector<long> partner(static_cast<size_t>(2 * n));
  for (long p = 0; p < n; ++p) {
    partner[static_cast<size_t>(p)] = n + p;
    partner[static_cast<size_t>(n + p)] = p;
  }
  return NcMatching(std::move(partner));
}

NcMatching tl_generator(long n, long i) {
  if (n < 2 || i < 1 || i > n - 1) {
    throw std::invalid_argument("generator index out of range");
  }
  std::vector<long> partner(static_cast<size_t>(2 * n));
  for (long p = 0; p < n; ++p) {
    partner[static_cast<size_t>(p)] = n + p;
    partner[static_cast<size_t>(n + p)] = p;
  }
  auto pair_up = [&](long x, long y) {
    partner[static_cast<size_t>(x)] = y;
    partner[static_cast<size_t>(y)] = x;
  };
  pair_up(i - 1, i);
  pair_up(n + i - 1, n + i);
  return NcMatching(std::move(partner));
}

namespace {

// Noncrossing matchings of the contiguous cycle positions lo..hi.
std::vector<std::vector<std::pair<long, long>>> nc_range(long lo, long hi) {
  if (lo > hi) return {{}};
  std::vector<std::vector<std::pair<long, long>>> out;
  for (long q = lo + 1; q <= hi; q += 2) {
    const auto inner = nc_range(lo + 1, q - 1);
    const auto outer = nc_range(q + 1, hi);
    for (const auto& in : inner) {
      for (const auto& ou : outer) {
        std::vector<std::pair<long, long>> v;
        v.reserve(in.size() + ou.size() + 1);
        v.emplace_back(lo, q);
        v.insert(v.end(), in.begin(), in.end());
        v.insert(v.end(), ou.begin(), ou.end());
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<NcMatching> tl_basis(long n) {
  if (n < 1) throw std::invalid_argument("matching size must be >= 1");
  std::vector<NcMatching> basis;
  for (const auto& arcs : nc_range(0, 2 * n - 1)) {
    std::vector<long> partner(static_cast<size_t>(2 * n));
    for (const auto& [a, b] : arcs) {
      long x = point_of_cycle_pos(a, n), y = point_of_cycle_pos(b, n);
      partner[static_cast<size_t>(x)] = y;
      partner[static_cast<size_t>(y)] = x;
    }
    basis.emplace_back(std::move(partner));
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::pair<NcMatching, long> diagram_mult(const NcMatching& a,
                                         const NcMatching& b) {
  if (a.n() != b.n()) throw std::invalid_argument("matching sizes differ");
  const long n = a.n();
  std::vector<long> partner(static_cast<size_t>(2 * n), -1);
  // Glue position k means a's right point n+k identified with b's left
  // point k.
  std::vector<char> glue_used(static_cast<size_t>(n), 0);

  // Walks from a result point to its partner, marking glue positions.
  auto trace = [&](long start) -> long {
    if (start < n) {
      long q = a.partner(start);
      while (true) {
        if (q < n) return q;
        long k = q - n;
        glue_used[static_cast<size_t>(k)] = 1;
        long r = b.partner(k);
        if (r >= n) return r;
        glue_used[static_cast<size_t>(r)] = 1;
        q = a.partner(n + r);
      }
    }
    long r = b.partner(start);
    while (true) {
      if (r >= n) return r;
      glue_used[static_cast<size_t>(r)] = 1;
      long q = a.partner(n + r);
      if (q < n) return q;
      glue_used[static_cast<size_t>(q - n)] = 1;
      r = b.partner(q - n);
    }
  };

  for (long p = 0; p < 2 * n; ++p) {
    if (partner[static_cast<size_t>(p)] != -1) continue;
    long q = trace(p);
    partner[static_cast<size_t>(p)] = q;
    partner[static_cast<size_t>(q)] = p;
  }

  // Unvisited glue positions sit on closed loops that alternate a-strands
  // and b-strands.
  long loops = 0;
  for (long k = 0; k < n; ++k) {
    if (glue_used[static_cast<size_t>(k)]) continue;
    ++loops;
    long cur = k;
    while (true) {
      long q = a.partner(n + cur) - n;
      glue_used[static_cast<size_t>(cur)] = 1;
      glue_used[static_cast<size_t>(q)] = 1;
      cur = b.partner(q);
      if (cur == k) break;
    }
  }
  return {NcMatching(std::move(partner)), loops};
}

TlElement::TlElement(long n) : n_(n) {
  if (n < 1) throw std::invalid_argument("matching size must be >= 1");
}

TlElement TlElement::from_diagram(const NcMatching& d) {
  TlElement e(d.n());
  e.add_term(d, LaurentPoly(Rational(1)));
  return e;
}

void TlElement::add_term(const NcMatching& d, const LaurentPoly& coeff) {
  if (d.n() != n_) throw std::invalid_argument("matching size mismatch");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(d, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TlElement& TlElement::operator+=(const TlElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("matching size mismatch");
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

TlElement tl_multiply(const TlElement& a, const TlElement& b) {
  if (a.n() != b.n()) throw std::invalid_argument("matching size mismatch");
  TlElement out(a.n());
  for (const auto& [da, ca] : a.terms()) {
    for (const auto& [db, cb] : b.terms()) {
      auto [d, loops] = diagram_mult(da, db);
      out.add_term(d, (ca * cb).shifted(loops));
    }
  }
  return out;
}

TlElement tl_scale(const LaurentPoly& coeff, const TlElement& a) {
  TlElement out(a.n());
  for (const auto& [d, c] : a.terms()) out.add_term(d, c * coeff);
  return out;
}

bool is_permutation(const Perm& w) {
  const long n = static_cast<long>(w.size());
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (long v : w) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)]) return false;
    seen[static_cast<size_t>(v - 1)] = 1;
  }
  return n >= 1;
}

Perm perm_identity(long n) {
  Perm w(static_cast<size_t>(n));
  for (long i = 1; i <= n; ++i) w[static_cast<size_t>(i - 1)] = i;
  return w;
}

Perm perm_multiply(const Perm& u, const Perm& v) {
  if (u.size() != v.size()) throw std::invalid_argument("size mismatch");
  Perm out(u.size());
  for (size_t x = 0; x < v.size(); ++x) {
    out[x] = u[static_cast<size_t>(v[x] - 1)];
  }
  return out;
}

std::vector<Perm> all_permutations(long n) {
  if (n < 1) throw std::invalid_argument("size must be >= 1");
  Perm w = perm_identity(n);
  std::vector<Perm> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<long> reduced_word(Perm w) {
  if (!is_permutation(w)) throw std::invalid_argument("not a permutation");
  const long n = static_cast<long>(w.size());
  std::vector<long> word;
  while (true) {
    std::vector<long> pos(static_cast<size_t>(n + 1), 0);
    for (long i = 0; i < n; ++i) pos[static_cast<size_t>(w[static_cast<size_t>(i)])] = i;
    long j = 0;
    for (long cand = 1; cand <= n - 1; ++cand) {
      if (pos[static_cast<size_t>(cand + 1)] < pos[static_cast<size_t>(cand)]) {
        j = cand;
        break;
      }
    }
    if (j == 0) break;
    // Left multiplication by the adjacent transposition swaps the values
    // j and j+1 wherever they stand.
    std::swap(w[static_cast<size_t>(pos[static_cast<size_t>(j)])],
              w[static_cast<size_t>(pos[static_cast<size_t>(j + 1)])]);
    word.push_back(j);
  }
  return word;
}

std::vector<long> reduced_word_right(Perm w) {
  if (!is_permutation(w)) throw std::invalid_argument("not a permutation");
  const long n = static_cast<long>(w.size());
  std::vector<long> tail;
  while (true) {
    long i = 0;
    for (long cand = 1; cand <= n - 1; ++cand) {
      if (w[static_cast<size_t>(cand - 1)] > w[static_cast<size_t>(cand)]) {
        i = cand;
        break;
      }
    }
    if (i == 0) break;
    std::swap(w[static_cast<size_t>(i - 1)], w[static_cast<size_t>(i)]);
    tail.push_back(i);
  }
  std::reverse(tail.begin(), tail.end());
  return tail;
}

namespace {

struct PhiTable {
  std::vector<NcMatching> basis;
  std::map<NcMatching, long> index;
  // act[i-1][b]: index and loop count of basis[b] composed with t_i.
  std::vector<std::vector<std::pair<long, long>>> act;
};

std::mutex phi_mutex;

const PhiTable& phi_table(long n) {
  static std::map<long, PhiTable> tables;
  auto it = tables.find(n);
  if (it != tables.end()) return it->second;
  PhiTable t;
  t.basis = tl_basis(n);
  for (long b = 0; b < static_cast<long>(t.basis.size()); ++b) {
    t.index.emplace(t.basis[static_cast<size_t>(b)], b);
  }
  t.act.resize(static_cast<size_t>(std::max<long>(n - 1, 0)));
  for (long i = 1; i <= n - 1; ++i) {
    const NcMatching gen = tl_generator(n, i);
    auto& row = t.act[static_cast<size_t>(i - 1)];
    row.reserve(t.basis.size());
    for (const NcMatching& d : t.basis) {
      auto [prod, loops] = diagram_mult(d, gen);
      row.emplace_back(t.index.at(prod), loops);
    }
  }
  return tables.emplace(n, std::move(t)).first->second;
}

// Expansion coefficients of (t_{j1}-1)(t_{j2}-1)... over the diagram basis
// with each closed loop worth 2.
std::vector<Rational> phi_coeffs(long n, const std::vector<long>& word) {
  const PhiTable& table = phi_table(n);
  std::vector<Rational> v(table.basis.size(), Rational(0));
  v[static_cast<size_t>(table.index.at(identity_matching(n)))] = 1;
  for (long j : word) {
    std::vector<Rational> next(v.size(), Rational(0));
    const auto& row = table.act[static_cast<size_t>(j - 1)];
    for (size_t b = 0; b < v.size(); ++b) {
      if (v[b] == 0) continue;
      const auto& [idx, loops] = row[b];
      Rational scaled = v[b];
      for (long l = 0; l < loops; ++l) scaled *= 2;
      next[static_cast<size_t>(idx)] += scaled;
      next[b] -= v[b];
    }
    v = std::move(next);
  }
  return v;
}

const std::vector<Rational>& phi_memo(const Perm& w) {
  static std::map<std::pair<long, Perm>, std::vector<Rational>> memo;
  const long n = static_cast<long>(w.size());
  auto key = std::make_pair(n, w);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  auto v = phi_coeffs(n, reduced_word(w));
  return memo.emplace(std::move(key), std::move(v)).first->second;
}

}  // namespace

Rational phi(const NcMatching& T, const Perm& w) {
  if (!is_permutation(w)) throw std::invalid_argument("not a permutation");
  if (T.n() != static_cast<long>(w.size())) {
    throw std::invalid_argument("size mismatch");
  }
  std::lock_guard<std::mutex> lock(phi_mutex);
  const auto& v = phi_memo(w);
  return v[static_cast<size_t>(phi_table(T.n()).index.at(T))];
}

std::vector<Rational> phi_vector(const Perm& w) {
  if (!is_permutation(w)) throw std::invalid_argument("not a permutation");
  std::lock_guard<std::mutex> lock(phi_mutex);
  return phi_memo(w);
}

Rational tl_immanant(const NcMatching& T, const DenseMatrix& m) {
  if (m.rows() != m.cols() || m.rows() != T.n()) {
    throw std::invalid_argument("matrix and diagram sizes must agree");
  }
  const long n = m.rows();
  Rational total(0);
  for (const Perm& w : all_permutations(n)) {
    Rational coeff = phi(T, w);
    if (coeff == 0) continue;
    Rational prod(1);
    for (long i = 1; i <= n; ++i) {
      prod *= m.at(i, w[static_cast<size_t>(i - 1)]);
    }
    total += coeff * prod;
  }
  return total;
}

std::vector<Rational> immanant_vector(const DenseMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("matrix must be square");
  }
  const long n = m.rows();
  std::vector<Rational> total(static_cast<size_t>(tl_basis(n).size()),
                              Rational(0));
  for (const Perm& w : all_permutations(n)) {
    const std::vector<Rational> coeffs = phi_vector(w);
    Rational prod(1);
    for (long i = 1; i <= n; ++i) {
      prod *= m.at(i, w[static_cast<size_t>(i - 1)]);
    }
    if (prod == 0) continue;
    for (size_t b = 0; b < total.size(); ++b) {
      if (coeffs[b] != 0) total[b] += coeffs[b] * prod;
    }
  }
  return total;
}

namespace {

void check_index_set(const std::vector<long>& s, long size) {
  for (size_t k = 0; k < s.size(); ++k) {
    if (s[k] < 1 || s[k] > size) {
      throw std::invalid_argument("index out of range");
    }
    if (k > 0 && s[k - 1] >= s[k]) {
      throw std::invalid_argument("index set must be strictly increasing");
    }
  }
}

}  // namespace

Rational comp_minor_immanant(const DenseMatrix& m, const std::vector<long>& I,
                             const std::vector<long>& J) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("matrix must be square");
  }
  if (I.size() != J.size()) {
    throw std::invalid_argument("row and column sets must have equal size");
  }
  check_index_set(I, m.rows());
  check_index_set(J, m.rows());
  const auto Ic = position_complement(I, m.rows());
  const auto Jc = position_complement(J, m.rows());
  return m.submatrix(I, J).determinant() *
         m.submatrix(Ic, Jc).determinant();
}

CmDiagram cm_diagram(const std::vector<long>& I, const std::vector<long>& J,
                     long size) {
  if (size < 1) throw std::invalid_argument("diagram size must be >= 1");
  if (I.size() != J.size()) {
    throw std::invalid_argument("row and column sets must have equal size");
  }
  check_index_set(I, size);
  check_index_set(J, size);
  CmDiagram d;
  d.left.assign(static_cast<size_t>(size), DotColor::White);
  d.right.assign(static_cast<size_t>(size), DotColor::Black);
  for (long j : J) d.left[static_cast<size_t>(j - 1)] = DotColor::Black;
  for (long i : I) d.right[static_cast<size_t>(i - 1)] = DotColor::White;
  return d;
}

namespace {

DotColor point_color(const CmDiagram& d, long p) {
  const long n = static_cast<long>(d.left.size());
  return p < n ? d.left[static_cast<size_t>(p)]
               : d.right[static_cast<size_t>(p - n)];
}

}  // namespace

std::vector<NcMatching> theta(const CmDiagram& d) {
  if (d.left.size() != d.right.size() || d.left.empty()) {
    throw std::invalid_argument("diagram columns must have equal size >= 1");
  }
  const long n = static_cast<long>(d.left.size());
  std::vector<NcMatching> out;
  for (const NcMatching& T : tl_basis(n)) {
    bool ok = true;
    for (long p = 0; p < 2 * n && ok; ++p) {
      long q = T.partner(p);
      if (p < q && point_color(d, p) == point_color(d, q)) ok = false;
    }
    if (ok) out.push_back(T);
  }
  return out;
}

Rational evaluate_cm(const CmDiagram& d, const DenseMatrix& m) {
  if (d.left.size() != d.right.size()) {
    throw std::invalid_argument("diagram columns must have equal size");
  }
  if (m.rows() != m.cols() ||
      m.rows() != static_cast<long>(d.left.size())) {
    throw std::invalid_argument("matrix and diagram sizes must agree");
  }
  std::vector<long> I, J;
  for (long i = 1; i <= m.rows(); ++i) {
    if (d.right[static_cast<size_t>(i - 1)] == DotColor::White) {
      I.push_back(i);
    }
    if (d.left[static_cast<size_t>(i - 1)] == DotColor::Black) {
      J.push_back(i);
    }
  }
  if (I.size() != J.size()) {
    throw std::invalid_argument("diagram has unbalanced colors");
  }
  return comp_minor_immanant(m, I, J);
}

bool verify_rs(const DenseMatrix& m, const std::vector<long>& I,
               const std::vector<long>& J) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("matrix must be square");
  }
  const CmDiagram d = cm_diagram(I, J, m.rows());
  Rational sum(0);
  for (const NcMatching& T : theta(d)) sum += tl_immanant(T, m);
  return sum == comp_minor_immanant(m, I, J);
}

std::vector<std::pair<int, CmDiagram>> expand_decorated(
    const DecoratedCmDiagram& d) {
  const size_t size = d.right.size();
  if (d.left.size() != size || size == 0) {
    throw std::invalid_argument("diagram columns must have equal size >= 1");
  }
  std::vector<size_t> blocks;
  for (size_t p = 0; p < size; ++p) {
    if (d.right[p] == DecDot::GrayTop) {
      if (p + 1 >= size || d.right[p + 1] != DecDot::GrayBottom) {
        throw std::invalid_argument("gray block must be top over bottom");
      }
      blocks.push_back(p);
    } else if (d.right[p] == DecDot::GrayBottom) {
      if (p == 0 || d.right[p - 1] != DecDot::GrayTop) {
        throw std::invalid_argument("gray block must be top over bottom");
      }
    }
  }
  std::vector<std::pair<int, CmDiagram>> out;
  const size_t g = blocks.size();
  for (size_t mask = 0; mask < (size_t{1} << g); ++mask) {
    CmDiagram cm;
    cm.left = d.left;
    cm.right.assign(size, DotColor::Black);
    int sign = 1;
    for (size_t p = 0; p < size; ++p) {
      if (d.right[p] == DecDot::Black) cm.right[p] = DotColor::Black;
    }
    for (size_t b = 0; b < g; ++b) {
      const size_t p = blocks[b];
      if (mask & (size_t{1} << b)) {
        cm.right[p] = DotColor::Black;
        cm.right[p + 1] = DotColor::White;
        sign = -sign;
      } else {
        cm.right[p] = DotColor::White;
        cm.right[p + 1] = DotColor::Black;
      }
    }
    out.emplace_back(sign, std::move(cm));
  }
  return out;
}

}  // namespace cyltn
