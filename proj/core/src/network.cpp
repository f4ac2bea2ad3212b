#include "cyltn/network.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace cyltn {

CylNetwork::CylNetwork(long vertex_count, std::vector<long> sources,
                       std::vector<long> sinks, std::vector<Edge> edges)
    : vertex_count_(vertex_count),
      sources_(std::move(sources)),
      sinks_(std::move(sinks)),
      edges_(std::move(edges)) {
  if (vertex_count_ < 1) {
    throw std::invalid_argument("network needs at least one vertex");
  }
  auto check_vertex = [&](long v) {
    if (v < 0 || v >= vertex_count_) {
      throw std::invalid_argument("vertex id out of range");
    }
  };
  if (sources_.empty() || sinks_.empty()) {
    throw std::invalid_argument("sources and sinks must be nonempty");
  }
  // role: 0 none, 1 source, 2 sink
  std::vector<char> role(static_cast<size_t>(vertex_count_), 0);
  for (long v : sources_) {
    check_vertex(v);
    auto& r = role[static_cast<size_t>(v)];
    if (r != 0) throw std::invalid_argument("duplicate source vertex");
    r = 1;
  }
  for (long v : sinks_) {
    check_vertex(v);
    auto& r = role[static_cast<size_t>(v)];
    if (r == 1) {
      throw std::invalid_argument("sources and sinks must be disjoint");
    }
    if (r == 2) throw std::invalid_argument("duplicate sink vertex");
    r = 2;
  }
  out_.assign(static_cast<size_t>(vertex_count_), {});
  std::vector<long> indegree(static_cast<size_t>(vertex_count_), 0);
  for (size_t e = 0; e < edges_.size(); ++e) {
    check_vertex(edges_[e].tail);
    check_vertex(edges_[e].head);
    out_[static_cast<size_t>(edges_[e].tail)].push_back(
        static_cast<long>(e));
    ++indegree[static_cast<size_t>(edges_[e].head)];
  }
  std::queue<long> ready;
  for (long v = 0; v < vertex_count_; ++v) {
    if (indegree[static_cast<size_t>(v)] == 0) ready.push(v);
  }
  long processed = 0;
  while (!ready.empty()) {
    long v = ready.front();
    ready.pop();
    ++processed;
    for (long e : out_[static_cast<size_t>(v)]) {
      long h = edges_[static_cast<size_t>(e)].head;
      if (--indegree[static_cast<size_t>(h)] == 0) ready.push(h);
    }
  }
  if (processed != vertex_count_) {
    throw std::invalid_argument("network has a directed cycle");
  }
}

const std::vector<long>& CylNetwork::out_edges(long v) const {
  if (v < 0 || v >= vertex_count_) {
    throw std::out_of_range("vertex id out of range");
  }
  return out_[static_cast<size_t>(v)];
}

std::vector<NetPath> enumerate_paths(const CylNetwork& net, long i, long j) {
  if (i < 1 || i > net.n()) {
    throw std::out_of_range("source number out of range");
  }
  if (j < 1 || j > net.m()) {
    throw std::out_of_range("sink number out of range");
  }
  const long start = net.sources()[static_cast<size_t>(i - 1)];
  const long target = net.sinks()[static_cast<size_t>(j - 1)];
  std::vector<NetPath> out;
  std::vector<long> edge_stack;
  std::vector<long> vertex_stack{start};
  // Visiting out-edges in increasing index order makes the output
  // lexicographic in the edge sequence.
  auto dfs = [&](auto&& self, long v, const Rational& w, long rot) -> void {
    if (v == target) {
      if (static_cast<long>(out.size()) >= kPathLimit) {
        throw PathLimitError("path enumeration exceeded the path limit");
      }
      out.push_back(NetPath{edge_stack, vertex_stack, w, rot});
      return;
    }
    for (long e : net.out_edges(v)) {
      const Edge& ed = net.edges()[static_cast<size_t>(e)];
      edge_stack.push_back(e);
      vertex_stack.push_back(ed.head);
      self(self, ed.head, w * ed.weight, rot + ed.hcross);
      edge_stack.pop_back();
      vertex_stack.pop_back();
    }
  };
  dfs(dfs, start, Rational(1), 0);
  return out;
}

LoopMatrix folded_weight_matrix(const CylNetwork& net) {
  LoopMatrix w(net.n(), net.m());
  for (long i = 1; i <= net.n(); ++i) {
    for (long j = 1; j <= net.m(); ++j) {
      LaurentPoly acc;
      for (const NetPath& p : enumerate_paths(net, i, j)) {
        acc.add_term(p.weight, p.rot);
      }
      w.set_entry(i, j, acc);
    }
  }
  return w;
}

namespace {

// Candidate path for one (I_p, J_p) slot: the lift starting on source copy
// block r_p. level_at[v] is r_p plus the partial rotation when the path
// visits v, or the sentinel when it does not.
struct LiftedPath {
  Rational weight;
  std::vector<long> visited;
  std::vector<long> level_at;
};

constexpr long kNoVisit = std::numeric_limits<long>::min();

std::pair<long, long> split_block(long idx, long mod) {
  long r = idx % mod;
  if (r <= 0) r += mod;
  return {r, (idx - r) / mod};
}

// Two lifts collide when they meet at a vertex on the same level.
bool collides(const LiftedPath& a, const LiftedPath& b) {
  for (long v : b.visited) {
    long la = a.level_at[static_cast<size_t>(v)];
    if (la != kNoVisit && la == b.level_at[static_cast<size_t>(v)]) {
      return true;
    }
  }
  return false;
}

}  // namespace

Rational glv_minor(const CylNetwork& net, const std::vector<long>& I,
                   const std::vector<long>& J) {
  if (I.size() != J.size()) {
    throw std::invalid_argument("row and column sets must have equal size");
  }
  for (size_t p = 1; p < I.size(); ++p) {
    if (I[p - 1] >= I[p] || J[p - 1] >= J[p]) {
      throw std::invalid_argument("index sets must be strictly increasing");
    }
  }
  const size_t k = I.size();
  if (k == 0) return Rational(1);

  std::vector<std::vector<LiftedPath>> cands(k);
  for (size_t p = 0; p < k; ++p) {
    const auto [ri, bi] = split_block(I[p], net.n());
    const auto [rj, bj] = split_block(J[p], net.m());
    for (const NetPath& path : enumerate_paths(net, ri, rj)) {
      if (path.rot != bj - bi) continue;
      LiftedPath lift;
      lift.weight = path.weight;
      lift.visited = path.vertices;
      lift.level_at.assign(static_cast<size_t>(net.vertex_count()), kNoVisit);
      long level = bi;
      lift.level_at[static_cast<size_t>(path.vertices[0])] = level;
      for (size_t e = 0; e < path.edges.size(); ++e) {
        level += net.edges()[static_cast<size_t>(path.edges[e])].hcross;
        lift.level_at[static_cast<size_t>(path.vertices[e + 1])] = level;
      }
      cands[p].push_back(std::move(lift));
    }
    if (cands[p].empty()) return Rational(0);
  }

  Rational total(0);
  std::vector<const LiftedPath*> chosen;
  auto rec = [&](auto&& self, size_t p, const Rational& acc) -> void {
    if (p == k) {
      total += acc;
      return;
    }
    for (const LiftedPath& c : cands[p]) {
      bool ok = true;
      for (const LiftedPath* prev : chosen) {
        if (collides(*prev, c)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(&c);
      self(self, p + 1, acc * c.weight);
      chosen.pop_back();
    }
  };
  rec(rec, 0, Rational(1));
  return total;
}

CylNetwork concatenate(const CylNetwork& a, const CylNetwork& b) {
  if (a.m() != b.n()) {
    throw std::invalid_argument("glued boundary sizes differ");
  }
  // The product rule W(a.b) = W(a) W(b) needs every a-to-b path to cross the
  // glued layer exactly once.
  std::vector<char> a_sink(static_cast<size_t>(a.vertex_count()), 0);
  for (long v : a.sinks()) a_sink[static_cast<size_t>(v)] = 1;
  for (const Edge& e : a.edges()) {
    if (a_sink[static_cast<size_t>(e.tail)]) {
      throw std::invalid_argument("glued sinks must have no outgoing edges");
    }
  }
  std::vector<char> b_source(static_cast<size_t>(b.vertex_count()), 0);
  for (long v : b.sources()) b_source[static_cast<size_t>(v)] = 1;
  for (const Edge& e : b.edges()) {
    if (b_source[static_cast<size_t>(e.head)]) {
      throw std::invalid_argument("glued sources must have no incoming edges");
    }
  }

  std::vector<long> map_b(static_cast<size_t>(b.vertex_count()), -1);
  for (size_t j = 0; j < b.sources().size(); ++j) {
    map_b[static_cast<size_t>(b.sources()[j])] = a.sinks()[j];
  }
  long next = a.vertex_count();
  for (long v = 0; v < b.vertex_count(); ++v) {
    if (map_b[static_cast<size_t>(v)] < 0) map_b[static_cast<size_t>(v)] = next++;
  }

  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) {
    edges.push_back(Edge{map_b[static_cast<size_t>(e.tail)],
                         map_b[static_cast<size_t>(e.head)], e.weight,
                         e.hcross});
  }
  std::vector<long> sinks;
  sinks.reserve(b.sinks().size());
  for (long v : b.sinks()) sinks.push_back(map_b[static_cast<size_t>(v)]);
  return CylNetwork(next, a.sources(), std::move(sinks), std::move(edges));
}

CylNetwork transpose_network(const CylNetwork& net) {
  std::vector<Edge> edges;
  edges.reserve(net.edges().size());
  for (const Edge& e : net.edges()) {
    edges.push_back(Edge{e.head, e.tail, e.weight, -e.hcross});
  }
  return CylNetwork(net.vertex_count(), net.sinks(), net.sources(),
                    std::move(edges));
}

namespace {

void require_nonneg(const Rational& w) {
  if (w < 0) throw std::invalid_argument("edge weights must be >= 0");
}

}  // namespace

CylNetwork identity_network(long k) {
  if (k < 1) throw std::invalid_argument("boundary size must be >= 1");
  std::vector<long> sources, sinks;
  std::vector<Edge> edges;
  for (long i = 0; i < k; ++i) {
    sources.push_back(i);
    sinks.push_back(k + i);
    edges.push_back(Edge{i, k + i, Rational(1), 0});
  }
  return CylNetwork(2 * k, std::move(sources), std::move(sinks),
                    std::move(edges));
}

CylNetwork elementary_row_network(long k, long row, const Rational& c) {
  if (k < 1) throw std::invalid_argument("boundary size must be >= 1");
  if (row < 1 || row > k) throw std::out_of_range("row out of range");
  require_nonneg(c);
  std::vector<long> sources, sinks;
  std::vector<Edge> edges;
  for (long i = 0; i < k; ++i) {
    sources.push_back(i);
    sinks.push_back(k + i);
    edges.push_back(Edge{i, k + i, Rational(1), 0});
  }
  if (row >= 2) {
    edges.push_back(Edge{row - 1, k + row - 2, c, 0});
  } else {
    // Row 1 borrows from the previous period's last row, entering the folded
    // matrix as c * t^-1 at position (1, k).
    edges.push_back(Edge{0, 2 * k - 1, c, -1});
  }
  return CylNetwork(2 * k, std::move(sources), std::move(sinks),
                    std::move(edges));
}

CylNetwork row_deletion_network(long k, long row) {
  if (k < 2) throw std::invalid_argument("deletion needs boundary size >= 2");
  if (row < 1 || row > k) throw std::out_of_range("row out of range");
  std::vector<long> sources, sinks;
  std::vector<Edge> edges;
  for (long i = 0; i < k - 1; ++i) sources.push_back(i);
  for (long j = 0; j < k; ++j) sinks.push_back(k - 1 + j);
  for (long i = 1; i <= k - 1; ++i) {
    long j = i < row ? i : i + 1;
    edges.push_back(Edge{i - 1, k - 1 + j - 1, Rational(1), 0});
  }
  return CylNetwork(2 * k - 1, std::move(sources), std::move(sinks),
                    std::move(edges));
}

CylNetwork diagonal_base_network(const std::vector<Rational>& weights,
                                 long offset) {
  const long k = static_cast<long>(weights.size());
  if (k < 1) throw std::invalid_argument("need at least one weight");
  for (const Rational& w : weights) require_nonneg(w);
  std::vector<long> sources, sinks;
  std::vector<Edge> edges;
  for (long i = 0; i < k; ++i) {
    sources.push_back(i);
    sinks.push_back(k + i);
  }
  for (long i = 1; i <= k; ++i) {
    long pos = i - 1 + offset;
    long j0 = pos % k;
    if (j0 < 0) j0 += k;
    long h = (pos - j0) / k;
    edges.push_back(
        Edge{i - 1, k + j0, weights[static_cast<size_t>(i - 1)], h});
  }
  return CylNetwork(2 * k, std::move(sources), std::move(sinks),
                    std::move(edges));
}

CylNetwork bidiagonal_slice_network(const std::vector<Rational>& superdiag) {
  const long k = static_cast<long>(superdiag.size());
  if (k < 1) throw std::invalid_argument("need at least one weight");
  for (const Rational& w : superdiag) require_nonneg(w);
  std::vector<long> sources, sinks;
  std::vector<Edge> edges;
  for (long i = 0; i < k; ++i) {
    sources.push_back(i);
    sinks.push_back(k + i);
    edges.push_back(Edge{i, k + i, Rational(1), 0});
  }
  for (long j = 1; j <= k; ++j) {
    const Rational& w = superdiag[static_cast<size_t>(j - 1)];
    if (j < k) {
      edges.push_back(Edge{j - 1, k + j, w, 0});
    } else {
      edges.push_back(Edge{k - 1, k, w, 1});
    }
  }
  return CylNetwork(2 * k, std::move(sources), std::move(sinks),
                    std::move(edges));
}

}  // namespace cyltn
