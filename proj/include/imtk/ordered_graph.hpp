#ifndef IMTK_ORDERED_GRAPH_HPP
#define IMTK_ORDERED_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace imtk {

/// Parts are bit-indexed rows, so positions per part are capped at one word.
inline constexpr int max_part_size = 64;

enum class Side { A, B };

/// A vertex named by its part and 0-based position in that part's order.
struct VertexRef {
  int part = 0;  // bipartite: 0 = A, 1 = B
  int pos = 0;
};

/// Bipartite edge (A-position, B-position), 0-based.
struct Edge {
  int a = 0;
  int b = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Cross-part edge of a multipartite graph, canonical form u < v.
struct MultiEdge {
  int u = 0;
  int i = 0;
  int v = 0;
  int j = 0;
  friend bool operator==(const MultiEdge&, const MultiEdge&) = default;
  friend auto operator<=>(const MultiEdge&, const MultiEdge&) = default;
};

namespace detail {

inline void check_part_size(int n, const char* name) {
  if (n < 1) throw std::invalid_argument(std::string(name) + " must be >= 1");
  if (n > max_part_size)
    throw std::invalid_argument(std::string(name) + " exceeds the supported maximum of " +
                                std::to_string(max_part_size));
}

inline std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

inline std::uint64_t reverse_bits(std::uint64_t m, int n) {
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i)
    if (m >> i & 1) out |= std::uint64_t{1} << (n - 1 - i);
  return out;
}

}  // namespace detail

/// An ordered bipartite graph (G;A,B): parts of sizes p and q, each carrying
/// the linear order given by position, and a set of A-B edges.  Immutable;
/// every operation returns a new graph.  Positions are 0-based internally
/// (user-facing I/O is 1-based).
class OrderedBipartiteGraph {
 public:
  OrderedBipartiteGraph(int p, int q) : p_(p), q_(q), rows_(p, 0), cols_(q, 0) {
    detail::check_part_size(p, "p");
    detail::check_part_size(q, "q");
  }

  static OrderedBipartiteGraph complete(int p, int q) {
    OrderedBipartiteGraph g(p, q);
    std::fill(g.rows_.begin(), g.rows_.end(), detail::full_mask(q));
    std::fill(g.cols_.begin(), g.cols_.end(), detail::full_mask(p));
    g.edge_count_ = p * q;
    return g;
  }

  /// Builds from an edge list; duplicates collapse, out-of-range throws.
  static OrderedBipartiteGraph from_edges(int p, int q, std::span<const Edge> edges) {
    OrderedBipartiteGraph g(p, q);
    for (const Edge& e : edges) g.set_edge(e.a, e.b);
    return g;
  }

  int a_size() const { return p_; }
  int b_size() const { return q_; }
  int part_size(Side s) const { return s == Side::A ? p_ : q_; }
  int edge_count() const { return edge_count_; }

  bool has_edge(int i, int j) const {
    check_pos(i, j);
    return rows_[static_cast<std::size_t>(i)] >> j & 1;
  }

  /// Adjacency of a_i as a bitmask over B positions.
  std::uint64_t row(int i) const { return rows_[check_row(i)]; }
  /// Adjacency of b_j as a bitmask over A positions.
  std::uint64_t col(int j) const { return cols_[check_col(j)]; }

  int degree(VertexRef v) const {
    if (v.part == 0) return std::popcount(row(v.pos));
    if (v.part == 1) return std::popcount(col(v.pos));
    throw std::invalid_argument("bipartite vertex ref must name part 0 (A) or 1 (B)");
  }

  /// Edges sorted lexicographically by (a, b).
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int i = 0; i < p_; ++i)
      for (std::uint64_t m = rows_[static_cast<std::size_t>(i)]; m; m &= m - 1)
        out.push_back({i, std::countr_zero(m)});
    return out;
  }

  OrderedBipartiteGraph with_edge(int i, int j) const {
    OrderedBipartiteGraph g = *this;
    g.set_edge(i, j);
    return g;
  }

  /// (IM1) removes one edge; the edge must be present.
  OrderedBipartiteGraph delete_edge(int i, int j) const {
    if (!has_edge(i, j))
      throw std::invalid_argument("delete_edge: edge (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ") is not present");
    OrderedBipartiteGraph g = *this;
    g.rows_[static_cast<std::size_t>(i)] &= ~(std::uint64_t{1} << j);
    g.cols_[static_cast<std::size_t>(j)] &= ~(std::uint64_t{1} << i);
    --g.edge_count_;
    return g;
  }

  /// (IM2) merges positions i and i+1 of the named part; the merged vertex
  /// keeps the union of both neighborhoods and later positions shift down.
  OrderedBipartiteGraph identify_consecutive(Side part, int i) const {
    const int n = part_size(part);
    if (n < 2) throw std::invalid_argument("identify_consecutive: part has fewer than 2 vertices");
    if (i < 0 || i >= n - 1)
      throw std::invalid_argument("identify_consecutive: position " + std::to_string(i + 1) +
                                  " has no consecutive successor");
    if (part == Side::A) {
      OrderedBipartiteGraph g(p_ - 1, q_);
      for (int r = 0; r < p_ - 1; ++r) {
        const int src = r <= i ? r : r + 1;
        std::uint64_t m = rows_[static_cast<std::size_t>(src)];
        if (r == i) m |= rows_[static_cast<std::size_t>(i + 1)];
        for (; m; m &= m - 1) g.set_edge(r, std::countr_zero(m));
      }
      return g;
    }
    OrderedBipartiteGraph g(p_, q_ - 1);
    for (int c = 0; c < q_ - 1; ++c) {
      const int src = c <= i ? c : c + 1;
      std::uint64_t m = cols_[static_cast<std::size_t>(src)];
      if (c == i) m |= cols_[static_cast<std::size_t>(i + 1)];
      for (; m; m &= m - 1) g.set_edge(std::countr_zero(m), c);
    }
    return g;
  }

  /// Relabels the named part by position -> size-1-position.
  OrderedBipartiteGraph reverse_order(Side part) const {
    OrderedBipartiteGraph g(p_, q_);
    g.edge_count_ = edge_count_;
    if (part == Side::A) {
      for (int i = 0; i < p_; ++i)
        g.rows_[static_cast<std::size_t>(p_ - 1 - i)] = rows_[static_cast<std::size_t>(i)];
      for (int j = 0; j < q_; ++j)
        g.cols_[static_cast<std::size_t>(j)] =
            detail::reverse_bits(cols_[static_cast<std::size_t>(j)], p_);
    } else {
      for (int j = 0; j < q_; ++j)
        g.cols_[static_cast<std::size_t>(q_ - 1 - j)] = cols_[static_cast<std::size_t>(j)];
      for (int i = 0; i < p_; ++i)
        g.rows_[static_cast<std::size_t>(i)] =
            detail::reverse_bits(rows_[static_cast<std::size_t>(i)], q_);
    }
    return g;
  }

  /// Exchanges the two parts; each edge (i,j) becomes (j,i).
  OrderedBipartiteGraph swap_parts() const {
    OrderedBipartiteGraph g(q_, p_);
    g.rows_ = cols_;
    g.cols_ = rows_;
    g.edge_count_ = edge_count_;
    return g;
  }

  friend bool operator==(const OrderedBipartiteGraph& x, const OrderedBipartiteGraph& y) {
    return x.p_ == y.p_ && x.q_ == y.q_ && x.rows_ == y.rows_;
  }

 private:
  void set_edge(int i, int j) {
    check_pos(i, j);
    const std::uint64_t bit = std::uint64_t{1} << j;
    if (!(rows_[static_cast<std::size_t>(i)] & bit)) {
      rows_[static_cast<std::size_t>(i)] |= bit;
      cols_[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      ++edge_count_;
    }
  }

  std::size_t check_row(int i) const {
    if (i < 0 || i >= p_) throw std::invalid_argument("A-position out of range");
    return static_cast<std::size_t>(i);
  }
  std::size_t check_col(int j) const {
    if (j < 0 || j >= q_) throw std::invalid_argument("B-position out of range");
    return static_cast<std::size_t>(j);
  }
  void check_pos(int i, int j) const {
    check_row(i);
    check_col(j);
  }

  int p_;
  int q_;
  std::vector<std::uint64_t> rows_;  // per A-position, bits over B
  std::vector<std::uint64_t> cols_;  // per B-position, bits over A
  int edge_count_ = 0;
};

/// An ordered t-partite graph (t >= 2): parts with linear orders, cross-part
/// edges only.  Edges are stored canonically with the lower part id first.
class OrderedMultipartiteGraph {
 public:
  explicit OrderedMultipartiteGraph(std::vector<int> part_sizes) : sizes_(std::move(part_sizes)) {
    if (sizes_.size() < 2) throw std::invalid_argument("multipartite graph needs at least 2 parts");
    for (int n : sizes_) detail::check_part_size(n, "part size");
    mats_.resize(pair_total());
    for (int u = 0; u < part_count(); ++u)
      for (int v = u + 1; v < part_count(); ++v)
        mats_[pair_index(u, v)].assign(static_cast<std::size_t>(sizes_[static_cast<std::size_t>(u)]), 0);
  }

  static OrderedMultipartiteGraph complete(std::vector<int> part_sizes) {
    OrderedMultipartiteGraph g(std::move(part_sizes));
    for (int u = 0; u < g.part_count(); ++u)
      for (int v = u + 1; v < g.part_count(); ++v) {
        auto& m = g.mats_[g.pair_index(u, v)];
        std::fill(m.begin(), m.end(), detail::full_mask(g.part_size(v)));
        g.edge_count_ += g.part_size(u) * g.part_size(v);
      }
    return g;
  }

  static OrderedMultipartiteGraph from_edges(std::vector<int> part_sizes,
                                             std::span<const MultiEdge> edges) {
    OrderedMultipartiteGraph g(std::move(part_sizes));
    for (const MultiEdge& e : edges) g.set_edge(e.u, e.i, e.v, e.j);
    return g;
  }

  int part_count() const { return static_cast<int>(sizes_.size()); }
  int part_size(int u) const { return sizes_[check_part(u)]; }
  const std::vector<int>& part_sizes() const { return sizes_; }
  int edge_count() const { return edge_count_; }

  bool has_edge(int u, int i, int v, int j) const {
    check_vertex(u, i);
    check_vertex(v, j);
    if (u == v) throw std::invalid_argument("intra-part edge query");
    if (u > v) {
      std::swap(u, v);
      std::swap(i, j);
    }
    return mats_[pair_index(u, v)][static_cast<std::size_t>(i)] >> j & 1;
  }

  /// Adjacency of vertex (u,i) within part v, as a bitmask over v's positions.
  std::uint64_t pair_row(int u, int i, int v) const {
    check_vertex(u, i);
    check_part(v);
    if (u == v) throw std::invalid_argument("pair_row: parts must differ");
    if (u < v) return mats_[pair_index(u, v)][static_cast<std::size_t>(i)];
    std::uint64_t out = 0;
    const auto& m = mats_[pair_index(v, u)];
    for (int r = 0; r < part_size(v); ++r)
      if (m[static_cast<std::size_t>(r)] >> i & 1) out |= std::uint64_t{1} << r;
    return out;
  }

  int degree(VertexRef x) const {
    check_vertex(x.part, x.pos);
    int d = 0;
    for (int v = 0; v < part_count(); ++v)
      if (v != x.part) d += std::popcount(pair_row(x.part, x.pos, v));
    return d;
  }

  /// Canonical edges (u < v) sorted lexicographically by (u, v, i, j).
  std::vector<MultiEdge> edges() const {
    std::vector<MultiEdge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < part_count(); ++u)
      for (int v = u + 1; v < part_count(); ++v) {
        const auto& m = mats_[pair_index(u, v)];
        for (int i = 0; i < part_size(u); ++i)
          for (std::uint64_t b = m[static_cast<std::size_t>(i)]; b; b &= b - 1)
            out.push_back({u, i, v, std::countr_zero(b)});
      }
    return out;
  }

  OrderedMultipartiteGraph with_edge(int u, int i, int v, int j) const {
    OrderedMultipartiteGraph g = *this;
    g.set_edge(u, i, v, j);
    return g;
  }

  OrderedMultipartiteGraph delete_edge(int u, int i, int v, int j) const {
    if (!has_edge(u, i, v, j))
      throw std::invalid_argument("delete_edge: edge (" + std::to_string(u + 1) + "," +
                                  std::to_string(i + 1) + ")-(" + std::to_string(v + 1) + "," +
                                  std::to_string(j + 1) + ") is not present");
    OrderedMultipartiteGraph g = *this;
    if (u > v) {
      std::swap(u, v);
      std::swap(i, j);
    }
    g.mats_[pair_index(u, v)][static_cast<std::size_t>(i)] &= ~(std::uint64_t{1} << j);
    --g.edge_count_;
    return g;
  }

  /// (IM2) within part u: merge positions i and i+1, neighborhoods union.
  OrderedMultipartiteGraph identify_consecutive(int u, int i) const {
    check_part(u);
    const int n = part_size(u);
    if (n < 2) throw std::invalid_argument("identify_consecutive: part has fewer than 2 vertices");
    if (i < 0 || i >= n - 1)
      throw std::invalid_argument("identify_consecutive: position " + std::to_string(i + 1) +
                                  " has no consecutive successor");
    std::vector<int> ns = sizes_;
    ns[static_cast<std::size_t>(u)] -= 1;
    OrderedMultipartiteGraph g(std::move(ns));
    for (const MultiEdge& e : edges()) {
      const int ni = e.u == u ? collapse(e.i, i) : e.i;
      const int nj = e.v == u ? collapse(e.j, i) : e.j;
      g.set_edge(e.u, ni, e.v, nj);
    }
    return g;
  }

  OrderedMultipartiteGraph reverse_order(int u) const {
    check_part(u);
    OrderedMultipartiteGraph g(sizes_);
    const int n = part_size(u);
    for (const MultiEdge& e : edges()) {
      const int ni = e.u == u ? n - 1 - e.i : e.i;
      const int nj = e.v == u ? n - 1 - e.j : e.j;
      g.set_edge(e.u, ni, e.v, nj);
    }
    return g;
  }

  /// The bipartite graph induced on parts u and v, with u giving the A side.
  OrderedBipartiteGraph induced_bipartite(int u, int v) const {
    check_part(u);
    check_part(v);
    if (u == v) throw std::invalid_argument("induced_bipartite: parts must differ");
    OrderedBipartiteGraph g(part_size(u), part_size(v));
    for (int i = 0; i < part_size(u); ++i)
      for (std::uint64_t m = pair_row(u, i, v); m; m &= m - 1)
        g = g.with_edge(i, std::countr_zero(m));
    return g;
  }

  friend bool operator==(const OrderedMultipartiteGraph& x, const OrderedMultipartiteGraph& y) {
    return x.sizes_ == y.sizes_ && x.mats_ == y.mats_;
  }

 private:
  void set_edge(int u, int i, int v, int j) {
    check_vertex(u, i);
    check_vertex(v, j);
    if (u == v) throw std::invalid_argument("intra-part edges are not allowed");
    if (u > v) {
      std::swap(u, v);
      std::swap(i, j);
    }
    auto& row = mats_[pair_index(u, v)][static_cast<std::size_t>(i)];
    const std::uint64_t bit = std::uint64_t{1} << j;
    if (!(row & bit)) {
      row |= bit;
      ++edge_count_;
    }
  }

  static int collapse(int pos, int merged) { return pos <= merged ? pos : pos - 1; }

  std::size_t check_part(int u) const {
    if (u < 0 || u >= part_count()) throw std::invalid_argument("part id out of range");
    return static_cast<std::size_t>(u);
  }
  void check_vertex(int u, int i) const {
    if (i < 0 || i >= part_size(u)) throw std::invalid_argument("position out of range in part");
  }

  std::size_t pair_total() const {
    const std::size_t t = sizes_.size();
    return t * (t - 1) / 2;
  }
  std::size_t pair_index(int u, int v) const {
    const std::size_t t = sizes_.size();
    const auto su = static_cast<std::size_t>(u);
    const auto sv = static_cast<std::size_t>(v);
    return su * t - su * (su + 1) / 2 + (sv - su - 1);
  }

  std::vector<int> sizes_;
  std::vector<std::vector<std::uint64_t>> mats_;  // per pair u<v: rows over u, bits over v
  int edge_count_ = 0;
};

}  // namespace imtk

#endif
