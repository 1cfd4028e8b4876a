#ifndef IMTK_CONSTRUCTIONS_HPP
#define IMTK_CONSTRUCTIONS_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "imtk/formulas.hpp"
#include "imtk/minor_check.hpp"
#include "imtk/ordered_graph.hpp"

namespace imtk {

/// The k-1 A-positions joined to all of B (the free choice i_h); 0-based.
inline std::vector<int> default_spine(int count) {
  std::vector<int> s(static_cast<std::size_t>(count));
  std::iota(s.begin(), s.end(), 0);
  return s;
}

namespace detail {

inline void check_spine(const std::vector<int>& spine, int count, int part_size) {
  if (static_cast<int>(spine.size()) != count)
    throw std::invalid_argument("spine selection must pick exactly " + std::to_string(count) +
                                " positions");
  std::vector<int> s = spine;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("spine selection must be distinct positions");
  if (!s.empty() && (s.front() < 0 || s.back() >= part_size))
    throw std::invalid_argument("spine selection out of range");
}

}  // namespace detail

/// Parameters of the dense-columns-plus-spine family: every A-vertex sees the
/// first l-1 B-vertices, and the chosen k-1 spine vertices see all of B.
struct ExamplePqParams {
  int p = 1;
  int q = 1;
  int k = 1;
  int l = 1;
  std::vector<int> spine;  // k-1 distinct A-positions; empty means 0..k-2
};

/// Builds the family above.  Edge count is (l-1)(p-k+1)+q(k-1); the graph is
/// K_{k,l}-interval-minor free whenever k <= p <= l-1, which is checked when
/// verify is on and p is in that range.
inline OrderedBipartiteGraph example_pq(const ExamplePqParams& params, bool verify = true) {
  const auto [p, q, k, l] = std::tuple(params.p, params.q, params.k, params.l);
  if (k < 1 || l < k) throw std::invalid_argument("example_pq needs 1 <= k <= l");
  if (p < k) throw std::invalid_argument("example_pq needs p >= k");
  if (q < l) throw std::invalid_argument("example_pq needs q >= l");
  std::vector<int> spine = params.spine.empty() && k > 1 ? default_spine(k - 1) : params.spine;
  detail::check_spine(spine, k - 1, p);
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < l - 1; ++j) edges.push_back({i, j});
  for (int i : spine)
    for (int j = l - 1; j < q; ++j) edges.push_back({i, j});
  OrderedBipartiteGraph g = OrderedBipartiteGraph::from_edges(p, q, edges);
  if (g.edge_count() != bipartite_extremal_value(p, q, k, l))
    throw std::logic_error("internal: example_pq edge count mismatch");
  if (verify && p <= l - 1 && contains_kl_greedy(g, k, l))
    throw std::logic_error("internal: example_pq output failed the avoidance check");
  return g;
}

/// Concatenation: glues the k-1 top vertices of each part of g to the k-1
/// bottom vertices of the corresponding part of h.  g keeps its positions,
/// h's remaining vertices follow.  Both corners must be complete; for k = 1
/// this is the disjoint union.  If g and h both avoid K_{k,l} (l >= k >= 2),
/// so does the result.
inline OrderedBipartiteGraph concatenate(const OrderedBipartiteGraph& g,
                                         const OrderedBipartiteGraph& h, int k) {
  if (k < 1) throw std::invalid_argument("concatenate needs k >= 1");
  const int c = k - 1;
  if (g.a_size() < c || g.b_size() < c || h.a_size() < c || h.b_size() < c)
    throw std::invalid_argument("concatenate: every part needs at least k-1 vertices");
  for (int a = 0; a < c; ++a)
    for (int b = 0; b < c; ++b) {
      if (!g.has_edge(g.a_size() - c + a, g.b_size() - c + b))
        throw std::invalid_argument("concatenate: top (k-1) x (k-1) corner of g is not complete");
      if (!h.has_edge(a, b))
        throw std::invalid_argument("concatenate: bottom (k-1) x (k-1) corner of h is not complete");
    }
  std::vector<Edge> edges = g.edges();
  const int da = g.a_size() - c;
  const int db = g.b_size() - c;
  for (const Edge& e : h.edges()) edges.push_back({e.a + da, e.b + db});
  return OrderedBipartiteGraph::from_edges(g.a_size() + h.a_size() - c,
                                           g.b_size() + h.b_size() - c, edges);
}

/// The staircase family: a chain of K_{l-1,l-1} blocks over a K_{e,l-1} base,
/// concatenated onto K_{k-1, q-q'+(k-1)}.  Exactly p x q, exactly the
/// Theorem 1 edge count, and verified K_{k,l}-interval-minor free.  Requires
/// 2 <= k < l (the closure of concatenation fails for k = 1: disjoint union
/// does not preserve K_{1,l}-freeness) and one part long enough (q >= q');
/// if only the exchanged orientation fits, the transpose is built and
/// swapped back.
inline OrderedBipartiteGraph extremal_bipartite(int p, int q, int k, int l, bool verify = true) {
  if (k < 2 || l <= k) throw std::invalid_argument("extremal_bipartite needs 2 <= k < l");
  if (p < k - 1 || p < 1 || q < 1)
    throw std::invalid_argument("extremal_bipartite needs p >= max(1, k-1)");
  const int r = (p - k + 1) / (l - k);
  const int e = p - (l - k) * r;
  const int qprime = (l - k) * (r + 1) + (k - 1);
  if (q < qprime) {
    if (q >= k - 1) {
      const int r2 = (q - k + 1) / (l - k);
      const int q2prime = (l - k) * (r2 + 1) + (k - 1);
      if (p >= q2prime) return extremal_bipartite(q, p, k, l, verify).swap_parts();
    }
    throw std::invalid_argument("extremal_bipartite: q < q' = " + std::to_string(qprime) +
                                " and the exchanged orientation does not fit either; "
                                "this range is not covered");
  }
  // chain H_0 + H_1 + ... + H_r over the base H_0 = K_{e,l-1} (e >= k-1 >= 1)
  OrderedBipartiteGraph chain = OrderedBipartiteGraph::complete(e, l - 1);
  for (int i = 0; i < r; ++i)
    chain = concatenate(chain, OrderedBipartiteGraph::complete(l - 1, l - 1), k);
  OrderedBipartiteGraph result =
      concatenate(OrderedBipartiteGraph::complete(k - 1, q - qprime + k - 1), chain, k);
  if (result.a_size() != p || result.b_size() != q)
    throw std::logic_error("internal: extremal_bipartite produced wrong part sizes");
  if (result.edge_count() != bipartite_extremal_value(p, q, k, l))
    throw std::logic_error("internal: extremal_bipartite edge count mismatch");
  if (verify && contains_kl_greedy(result, k, l))
    throw std::logic_error("internal: extremal_bipartite output failed the avoidance check");
  return result;
}

/// Parameters for the multipartite family: complete between all part pairs
/// except (1,2), which carries the dense-columns-plus-spine bipartite family.
struct MultipartiteConstructionParams {
  std::vector<int> part_sizes;     // n_1 < ... < n_t
  std::vector<int> pattern_sizes;  // l_1 < ... < l_t
  std::vector<int> spine;          // l_1 - 1 distinct positions in part 1; empty = default
};

/// Builds the family above; requires n_i < l_{i+1}.  The output is verified
/// K_{l_1,...,l_t}-interval-minor free.
inline OrderedMultipartiteGraph multipartite_construction(
    const MultipartiteConstructionParams& params, bool verify = true) {
  const std::vector<int>& n = params.part_sizes;
  const std::vector<int>& l = params.pattern_sizes;
  const int t = static_cast<int>(n.size());
  if (t < 2 || l.size() != n.size())
    throw std::invalid_argument("multipartite construction needs t >= 2 parts and sizes for each");
  for (int i = 0; i < t; ++i) {
    if (n[static_cast<std::size_t>(i)] < 1 || l[static_cast<std::size_t>(i)] < 1)
      throw std::invalid_argument("part and pattern sizes must be >= 1");
    if (i > 0 && n[static_cast<std::size_t>(i)] <= n[static_cast<std::size_t>(i - 1)])
      throw std::invalid_argument("part sizes must be strictly increasing");
    if (i > 0 && l[static_cast<std::size_t>(i)] <= l[static_cast<std::size_t>(i - 1)])
      throw std::invalid_argument("pattern sizes must be strictly increasing");
    if (i + 1 < t && n[static_cast<std::size_t>(i)] >= l[static_cast<std::size_t>(i + 1)])
      throw std::invalid_argument("hypothesis n_i < l_{i+1} violated at i = " +
                                  std::to_string(i + 1));
  }
  const int n1 = n[0], n2 = n[1], l1 = l[0], l2 = l[1];
  const bool spine_used = n2 >= l2;  // otherwise the dense columns already cover part 2
  std::vector<int> spine = params.spine;
  if (spine_used) {
    if (spine.empty() && l1 > 1) {
      if (l1 - 1 > n1)
        throw std::invalid_argument("spine needs l_1 - 1 distinct positions in part 1");
      spine = default_spine(l1 - 1);
    }
    detail::check_spine(spine, l1 - 1, n1);
  }
  std::vector<MultiEdge> edges;
  for (int u = 0; u < t; ++u)
    for (int v = u + 1; v < t; ++v) {
      if (u == 0 && v == 1) continue;  // the (1,2) pair is the sparse family below
      for (int i = 0; i < n[static_cast<std::size_t>(u)]; ++i)
        for (int j = 0; j < n[static_cast<std::size_t>(v)]; ++j) edges.push_back({u, i, v, j});
    }
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < std::min(l2 - 1, n2); ++j) edges.push_back({0, i, 1, j});
  if (spine_used)
    for (int i : spine)
      for (int j = l2 - 1; j < n2; ++j) edges.push_back({0, i, 1, j});
  OrderedMultipartiteGraph g = OrderedMultipartiteGraph::from_edges(n, edges);
  if (verify && contains_multipartite(g, CompletePatternSpec(l)))
    throw std::logic_error("internal: multipartite construction failed the avoidance check");
  return g;
}

}  // namespace imtk

#endif
