#ifndef IMTK_ORACLE_HPP
#define IMTK_ORACLE_HPP

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "imtk/constructions.hpp"
#include "imtk/formulas.hpp"
#include "imtk/minor_check.hpp"
#include "imtk/ordered_graph.hpp"

namespace imtk {

struct OracleOptions {
  long long budget = 26;  // maximum number of potential edges
  int jobs = 1;
  bool seed_with_construction = true;
};

/// Exact extremal value with a maximizing avoiding graph and the parameters
/// echoed.  The witness is the first maximizer in the fixed search order
/// (include-first DFS over edges in lexicographic order), independent of the
/// parallelism degree.
struct BipartiteExtremalResult {
  long long value = 0;
  OrderedBipartiteGraph witness{1, 1};
  std::uint64_t explored = 0;
  int p = 0, q = 0, k = 0, l = 0;
};

struct MultipartiteExtremalResult {
  long long value = 0;
  OrderedMultipartiteGraph witness{{1, 1}};
  std::uint64_t explored = 0;
  std::vector<int> part_sizes;
  std::vector<int> pattern_sizes;
};

namespace detail {

/// Branch-and-bound over include/exclude decisions for a fixed edge list.
/// Prunings: (a) a partial graph that already contains the pattern is dead,
/// since containment is monotone under edge addition; (b) a branch that
/// cannot beat the best known value is dead, except that branches able to TIE
/// it stay alive until the subproblem has its first tying witness, which
/// keeps the returned witness equal to the sequential first maximizer even
/// when the bound was seeded or raised by another worker.
template <typename Graph, typename AddEdge, typename Contains>
class BnbSearch {
 public:
  BnbSearch(Graph empty, int edge_total, AddEdge add, Contains contains, long long seed_value)
      : empty_(std::move(empty)),
        edge_total_(edge_total),
        add_(std::move(add)),
        contains_(std::move(contains)) {
    best_.store(seed_value >= 0 ? seed_value : -1);
  }

  struct Candidate {
    long long value = -1;
    std::uint64_t order_rank = 0;  // subproblem index in search order
    std::optional<Graph> witness;
  };

  std::uint64_t explored() const { return explored_.load(); }

  Candidate run(int jobs) {
    int depth = 0;
    if (jobs > 1) {
      while (depth < edge_total_ && (1u << depth) < 8u * static_cast<unsigned>(jobs) &&
             depth < 14)
        ++depth;
    }
    const std::uint64_t sub_count = std::uint64_t{1} << depth;
    std::vector<Candidate> results;
    results.reserve(64);
    std::mutex results_mutex;
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::uint64_t idx = next.fetch_add(1);
        if (idx >= sub_count) return;
        Candidate local;
        local.order_rank = idx;
        if (!run_subproblem(idx, depth, local)) continue;
        if (local.witness) {
          std::lock_guard<std::mutex> lock(results_mutex);
          results.push_back(std::move(local));
        }
      }
    };
    if (jobs <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    Candidate out;
    for (Candidate& c : results)
      if (!out.witness || c.value > out.value ||
          (c.value == out.value && c.order_rank < out.order_rank))
        out = std::move(c);
    return out;
  }

 private:
  // prefix bits: edge d included iff bit (depth-1-d) of idx is 0, so ascending
  // idx enumerates prefixes in include-first DFS order
  bool run_subproblem(std::uint64_t idx, int depth, Candidate& local) {
    Graph g = empty_;
    long long count = 0;
    for (int d = 0; d < depth; ++d) {
      const bool include = ((idx >> (depth - 1 - d)) & 1) == 0;
      if (!include) continue;
      g = add_(g, d);
      ++count;
      if (contains_(g)) return false;  // the whole subtree is dead
    }
    dfs(depth, g, count, local);
    return true;
  }

  void dfs(int t, const Graph& g, long long count, Candidate& local) {
    explored_.fetch_add(1, std::memory_order_relaxed);
    const long long upper = count + (edge_total_ - t);
    const long long gb = best_.load(std::memory_order_relaxed);
    if (upper < gb) return;
    if (upper == gb && local.value == gb && local.witness) return;
    if (t == edge_total_) {
      long long cur = best_.load(std::memory_order_relaxed);
      while (count > cur && !best_.compare_exchange_weak(cur, count, std::memory_order_relaxed)) {
      }
      if (count > local.value) {
        local.value = count;
        local.witness = g;
      }
      return;
    }
    Graph g2 = add_(g, t);
    if (!contains_(g2)) dfs(t + 1, g2, count + 1, local);
    dfs(t + 1, g, count, local);
  }

  Graph empty_;
  int edge_total_;
  AddEdge add_;
  Contains contains_;
  std::atomic<long long> best_{-1};
  std::atomic<std::uint64_t> explored_{0};
};

}  // namespace detail

/// Exact m(p,q,k,l) by exhaustive branch-and-bound over all edge subsets.
/// When the parameters fall in a proved-exact regime the search is seeded
/// with the corresponding verified construction, which only tightens the
/// bound pruning.
inline BipartiteExtremalResult exact_m_bipartite(int p, int q, int k, int l,
                                                 const OracleOptions& options = {}) {
  if (k < 1 || l < 1) throw std::invalid_argument("pattern sizes must be >= 1");
  const long long potential = static_cast<long long>(p) * q;
  if (potential > options.budget)
    throw std::invalid_argument("oracle budget exceeded: needs " + std::to_string(potential) +
                                " potential edges, budget is " + std::to_string(options.budget));
  long long seed = -1;
  std::optional<OrderedBipartiteGraph> seed_graph;
  if (options.seed_with_construction) {
    const ExtremalFormulaResult f = m_formula(p, q, k, l);
    const TheoremCase& c = f.theorem_case;
    if (f.exactness == Exactness::Exact) {
      if (c.kind == CaseKind::TrivialObs1) {
        seed_graph = OrderedBipartiteGraph::complete(p, q);
      } else {
        long long np = p, nq = q, nk = k, nl = l;
        if (c.swapped_kl) {
          std::swap(nk, nl);
          std::swap(np, nq);
        }
        const int x = static_cast<int>(c.swapped_pq ? nq : np);
        const int y = static_cast<int>(c.swapped_pq ? np : nq);
        OrderedBipartiteGraph built =
            c.kind == CaseKind::Thm1Case1
                ? example_pq({x, y, static_cast<int>(nk), static_cast<int>(nl), {}})
                : extremal_bipartite(x, y, static_cast<int>(nk), static_cast<int>(nl));
        const bool built_swapped = c.swapped_kl != c.swapped_pq;
        seed_graph = built_swapped ? built.swap_parts() : built;
      }
      if (contains_kl_greedy(*seed_graph, k, l))
        throw std::logic_error("internal: oracle seed graph is not avoiding");
      seed = seed_graph->edge_count();
    }
  }
  detail::BnbSearch search(
      OrderedBipartiteGraph(p, q), p * q,
      [q](const OrderedBipartiteGraph& g, int t) { return g.with_edge(t / q, t % q); },
      [k, l](const OrderedBipartiteGraph& g) { return contains_kl_greedy(g, k, l).has_value(); },
      seed);
  auto cand = search.run(options.jobs);
  BipartiteExtremalResult out{cand.value,
                              cand.witness ? *cand.witness : OrderedBipartiteGraph(p, q),
                              search.explored(),
                              p,
                              q,
                              k,
                              l};
  if (!cand.witness) {
    if (!seed_graph || seed != cand.value)
      throw std::logic_error("internal: oracle search ended without a witness");
    out.witness = *seed_graph;  // unreachable in practice; kept as a safety net
    out.value = seed;
  }
  if (contains_kl_exhaustive(out.witness, k, l))
    throw std::logic_error("internal: oracle witness failed final exhaustive validation");
  return out;
}

/// Exact multipartite extremal value, as exact_m_bipartite with the
/// multipartite checker; edge order is lexicographic by (part pair, indices).
inline MultipartiteExtremalResult exact_m_multipartite(const std::vector<int>& part_sizes,
                                                       const std::vector<int>& pattern_sizes,
                                                       const OracleOptions& options = {}) {
  const CompletePatternSpec spec(pattern_sizes);
  const OrderedMultipartiteGraph empty(part_sizes);
  const std::vector<MultiEdge> all_edges = OrderedMultipartiteGraph::complete(part_sizes).edges();
  const long long potential = static_cast<long long>(all_edges.size());
  if (potential > options.budget)
    throw std::invalid_argument("oracle budget exceeded: needs " + std::to_string(potential) +
                                " potential edges, budget is " + std::to_string(options.budget));
  long long seed = -1;
  std::optional<OrderedMultipartiteGraph> seed_graph;
  if (options.seed_with_construction) {
    std::vector<long long> nv(part_sizes.begin(), part_sizes.end());
    std::vector<long long> lv(pattern_sizes.begin(), pattern_sizes.end());
    bool formula_applies = true;
    MultipartiteFormulaResult f;
    try {
      f = multipartite_m_formula(nv, lv);
    } catch (const std::invalid_argument&) {
      formula_applies = false;  // e.g. non-monotone sizes; search unseeded
    }
    if (formula_applies && f.exactness == Exactness::Exact) {
      seed_graph = f.kind == MultipartiteCaseKind::TrivialNoFit
                       ? OrderedMultipartiteGraph::complete(part_sizes)
                       : multipartite_construction({part_sizes, pattern_sizes, {}});
      if (contains_multipartite(*seed_graph, spec))
        throw std::logic_error("internal: oracle seed graph is not avoiding");
      seed = seed_graph->edge_count();
    }
  }
  detail::BnbSearch search(
      empty, static_cast<int>(all_edges.size()),
      [&all_edges](const OrderedMultipartiteGraph& g, int t) {
        const MultiEdge& e = all_edges[static_cast<std::size_t>(t)];
        return g.with_edge(e.u, e.i, e.v, e.j);
      },
      [&spec](const OrderedMultipartiteGraph& g) {
        return contains_multipartite(g, spec).has_value();
      },
      seed);
  auto cand = search.run(options.jobs);
  MultipartiteExtremalResult out{cand.value, cand.witness ? *cand.witness : empty,
                                 search.explored(), part_sizes, pattern_sizes};
  if (!cand.witness) {
    if (!seed_graph || seed != cand.value)
      throw std::logic_error("internal: oracle search ended without a witness");
    out.witness = *seed_graph;
    out.value = seed;
  }
  if (contains_multipartite(out.witness, spec))
    throw std::logic_error("internal: oracle witness failed final validation");
  return out;
}

/// True iff g avoids the pattern and adding any one non-edge stops that.
inline bool is_maximal_avoiding(const OrderedBipartiteGraph& g, int k, int l) {
  if (contains_kl_greedy(g, k, l)) return false;
  for (int i = 0; i < g.a_size(); ++i)
    for (int j = 0; j < g.b_size(); ++j)
      if (!g.has_edge(i, j) && !contains_kl_greedy(g.with_edge(i, j), k, l)) return false;
  return true;
}

inline bool is_maximal_avoiding(const OrderedMultipartiteGraph& g,
                                const CompletePatternSpec& spec) {
  if (contains_multipartite(g, spec)) return false;
  for (int u = 0; u < g.part_count(); ++u)
    for (int v = u + 1; v < g.part_count(); ++v)
      for (int i = 0; i < g.part_size(u); ++i)
        for (int j = 0; j < g.part_size(v); ++j)
          if (!g.has_edge(u, i, v, j) &&
              !contains_multipartite(g.with_edge(u, i, v, j), spec))
            return false;
  return true;
}

}  // namespace imtk

#endif
