#ifndef IMTK_MINOR_CHECK_HPP
#define IMTK_MINOR_CHECK_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "imtk/interval_partition.hpp"
#include "imtk/ordered_graph.hpp"

namespace imtk {

/// Target pattern K_{l_1,...,l_t} given by nondecreasing part sizes, all >= 1.
class CompletePatternSpec {
 public:
  explicit CompletePatternSpec(std::vector<int> part_sizes) : sizes_(std::move(part_sizes)) {
    if (sizes_.empty()) throw std::invalid_argument("pattern needs at least one part");
    for (int s : sizes_)
      if (s < 1) throw std::invalid_argument("pattern part sizes must be >= 1");
    if (!std::is_sorted(sizes_.begin(), sizes_.end()))
      throw std::invalid_argument("pattern part sizes must be nondecreasing");
  }

  static CompletePatternSpec bipartite(int k, int l) {
    return CompletePatternSpec({std::min(k, l), std::max(k, l)});
  }

  int part_count() const { return static_cast<int>(sizes_.size()); }
  int part_size(int i) const { return sizes_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& part_sizes() const { return sizes_; }

  friend bool operator==(const CompletePatternSpec&, const CompletePatternSpec&) = default;

 private:
  std::vector<int> sizes_;
};

/// Certificate of containment: which host part each pattern part maps to,
/// plus one interval partition per host part.  For every pattern edge the
/// corresponding pair of host blocks is joined by at least one host edge.
struct ContainmentWitness {
  std::vector<int> host_of_part;
  std::vector<IntervalPartition> partitions;
};

namespace detail {

inline std::uint64_t range_mask(int begin, int len) {
  return (len >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1)) << begin;
}

/// OR of the rows of g in each block of the composition (masks over B).
inline void block_row_or(const OrderedBipartiteGraph& g, std::span<const int> blocks,
                         std::vector<std::uint64_t>& out) {
  out.clear();
  int r = 0;
  for (int s : blocks) {
    std::uint64_t m = 0;
    for (int i = r; i < r + s; ++i) m |= g.row(i);
    out.push_back(m);
    r += s;
  }
}

/// True iff every (A-block, B-block) pair has at least one edge.
inline bool all_pairs_joined(std::span<const std::uint64_t> a_or, std::span<const int> b_blocks) {
  for (std::uint64_t am : a_or) {
    int c = 0;
    for (int s : b_blocks) {
      if (!(am & range_mask(c, s))) return false;
      c += s;
    }
  }
  return true;
}

/// Earliest-cut scan of B into kb blocks, each joined to every A-block.
/// Enlarging a block never loses pair edges, so this finds a valid
/// composition exactly when one exists, and the one it finds is lex-first.
inline std::optional<std::vector<int>> greedy_b_blocks(const OrderedBipartiteGraph& g,
                                                       std::span<const int> a_blocks, int kb) {
  const int q = g.b_size();
  if (kb > q) return std::nullopt;
  const int ka = static_cast<int>(a_blocks.size());
  const std::uint64_t full = range_mask(0, ka);
  // per column: which A-blocks have an edge in it
  std::vector<std::uint64_t> col_blocks(static_cast<std::size_t>(q), 0);
  {
    int r = 0;
    for (int b = 0; b < ka; ++b) {
      const std::uint64_t arange = range_mask(r, a_blocks[static_cast<std::size_t>(b)]);
      for (int j = 0; j < q; ++j)
        if (g.col(j) & arange) col_blocks[static_cast<std::size_t>(j)] |= std::uint64_t{1} << b;
      r += a_blocks[static_cast<std::size_t>(b)];
    }
  }
  std::vector<int> sizes;
  std::uint64_t acc = 0;
  int start = 0;
  for (int j = 0; j < q; ++j) {
    acc |= col_blocks[static_cast<std::size_t>(j)];
    if (acc == full && static_cast<int>(sizes.size()) < kb - 1) {
      sizes.push_back(j + 1 - start);
      start = j + 1;
      acc = 0;
    }
  }
  if (static_cast<int>(sizes.size()) != kb - 1 || start >= q || acc != full) return std::nullopt;
  sizes.push_back(q - start);
  return sizes;
}

inline ContainmentWitness make_bipartite_witness(bool k_on_a, std::vector<int> a_blocks,
                                                 std::vector<int> b_blocks) {
  ContainmentWitness w;
  w.host_of_part = k_on_a ? std::vector<int>{0, 1} : std::vector<int>{1, 0};
  w.partitions.emplace_back(std::move(a_blocks));
  w.partitions.emplace_back(std::move(b_blocks));
  return w;
}

}  // namespace detail

/// Checks a witness independently of how it was produced.  Malformed
/// witnesses (wrong shapes or sums) throw; a well-formed witness returns
/// whether every required block pair is joined.
inline bool verify_witness(const OrderedBipartiteGraph& g, int k, int l,
                           const ContainmentWitness& w) {
  if (k < 1 || l < 1) throw std::invalid_argument("pattern sizes must be >= 1");
  if (w.host_of_part.size() != 2 || w.partitions.size() != 2)
    throw std::invalid_argument("bipartite witness must map 2 pattern parts onto 2 hosts");
  const std::vector<int>& h = w.host_of_part;
  if (!((h[0] == 0 && h[1] == 1) || (h[0] == 1 && h[1] == 0)))
    throw std::invalid_argument("witness part assignment is not a permutation of the hosts");
  if (w.partitions[0].total() != g.a_size() || w.partitions[1].total() != g.b_size())
    throw std::invalid_argument("witness block sizes do not sum to the part sizes");
  if (w.partitions[static_cast<std::size_t>(h[0])].block_count() != k ||
      w.partitions[static_cast<std::size_t>(h[1])].block_count() != l)
    throw std::invalid_argument("witness block counts do not match the pattern");
  std::vector<std::uint64_t> a_or;
  const auto a_sizes = w.partitions[0].sizes();
  detail::block_row_or(g, a_sizes, a_or);
  return detail::all_pairs_joined(a_or, w.partitions[1].sizes());
}

/// Exact decision for K_{k,l} containment as an interval minor: enumerates
/// every composition of A and B (both block orientations, lexicographic
/// order, k-on-A first) and returns the first witness, if any.
inline std::optional<ContainmentWitness> contains_kl_exhaustive(const OrderedBipartiteGraph& g,
                                                                int k, int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("pattern sizes must be >= 1");
  std::vector<std::uint64_t> a_or;
  for (const bool k_on_a : {true, false}) {
    if (!k_on_a && k == l) break;
    const int ka = k_on_a ? k : l;
    const int kb = k_on_a ? l : k;
    if (ka > g.a_size() || kb > g.b_size()) continue;
    for (CompositionEnumerator ca(g.a_size(), ka); ca.valid(); ca.next()) {
      const std::vector<int> a_sizes = ca.sizes();
      detail::block_row_or(g, a_sizes, a_or);
      for (CompositionEnumerator cb(g.b_size(), kb); cb.valid(); cb.next()) {
        const std::vector<int> b_sizes = cb.sizes();
        if (detail::all_pairs_joined(a_or, b_sizes)) {
          ContainmentWitness w = detail::make_bipartite_witness(k_on_a, a_sizes, b_sizes);
          if (!verify_witness(g, k, l, w))
            throw std::logic_error("internal: exhaustive witness failed re-verification");
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

/// Same verdict and same witness as contains_kl_exhaustive, but the B side is
/// found by the earliest-cut greedy scan instead of enumeration.
inline std::optional<ContainmentWitness> contains_kl_greedy(const OrderedBipartiteGraph& g, int k,
                                                            int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("pattern sizes must be >= 1");
  for (const bool k_on_a : {true, false}) {
    if (!k_on_a && k == l) break;
    const int ka = k_on_a ? k : l;
    const int kb = k_on_a ? l : k;
    if (ka > g.a_size() || kb > g.b_size()) continue;
    for (CompositionEnumerator ca(g.a_size(), ka); ca.valid(); ca.next()) {
      const std::vector<int> a_sizes = ca.sizes();
      if (auto b_sizes = detail::greedy_b_blocks(g, a_sizes, kb)) {
        ContainmentWitness w = detail::make_bipartite_witness(k_on_a, a_sizes, *b_sizes);
        if (!verify_witness(g, k, l, w))
          throw std::logic_error("internal: greedy witness failed re-verification");
        return w;
      }
    }
  }
  return std::nullopt;
}

inline bool verify_witness(const OrderedMultipartiteGraph& g, const CompletePatternSpec& spec,
                           const ContainmentWitness& w) {
  const int t = g.part_count();
  if (spec.part_count() != t)
    throw std::invalid_argument("pattern and host must have the same number of parts");
  if (static_cast<int>(w.host_of_part.size()) != t || static_cast<int>(w.partitions.size()) != t)
    throw std::invalid_argument("witness shape does not match the host");
  std::vector<bool> seen(static_cast<std::size_t>(t), false);
  for (int h : w.host_of_part) {
    if (h < 0 || h >= t || seen[static_cast<std::size_t>(h)])
      throw std::invalid_argument("witness part assignment is not a permutation of the hosts");
    seen[static_cast<std::size_t>(h)] = true;
  }
  for (int h = 0; h < t; ++h)
    if (w.partitions[static_cast<std::size_t>(h)].total() != g.part_size(h))
      throw std::invalid_argument("witness block sizes do not sum to the part sizes");
  for (int i = 0; i < t; ++i)
    if (w.partitions[static_cast<std::size_t>(w.host_of_part[static_cast<std::size_t>(i)])]
            .block_count() != spec.part_size(i))
      throw std::invalid_argument("witness block counts do not match the pattern");
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      const int u = w.host_of_part[static_cast<std::size_t>(i)];
      const int v = w.host_of_part[static_cast<std::size_t>(j)];
      const IntervalPartition& pu = w.partitions[static_cast<std::size_t>(u)];
      const IntervalPartition& pv = w.partitions[static_cast<std::size_t>(v)];
      for (int bu = 0; bu < pu.block_count(); ++bu) {
        std::uint64_t or_mask = 0;
        for (int r = pu.block_begin(bu); r < pu.block_begin(bu) + pu.block_size(bu); ++r)
          or_mask |= g.pair_row(u, r, v);
        for (int bv = 0; bv < pv.block_count(); ++bv)
          if (!(or_mask & detail::range_mask(pv.block_begin(bv), pv.block_size(bv)))) return false;
      }
    }
  return true;
}

namespace detail {

struct MultiSearchState {
  const OrderedMultipartiteGraph* g;
  const CompletePatternSpec* spec;
  std::vector<int> tau;                          // pattern part -> host part
  std::vector<IntervalPartition> chosen;         // per pattern part index
};

inline bool pair_ok(const MultiSearchState& st, int i, int j) {
  const int u = st.tau[static_cast<std::size_t>(i)];
  const int v = st.tau[static_cast<std::size_t>(j)];
  const IntervalPartition& pu = st.chosen[static_cast<std::size_t>(i)];
  const IntervalPartition& pv = st.chosen[static_cast<std::size_t>(j)];
  for (int bu = 0; bu < pu.block_count(); ++bu) {
    std::uint64_t or_mask = 0;
    for (int r = pu.block_begin(bu); r < pu.block_begin(bu) + pu.block_size(bu); ++r)
      or_mask |= st.g->pair_row(u, r, v);
    for (int bv = 0; bv < pv.block_count(); ++bv)
      if (!(or_mask & range_mask(pv.block_begin(bv), pv.block_size(bv)))) return false;
  }
  return true;
}

inline bool multi_search(MultiSearchState& st, int i) {
  const int t = st.spec->part_count();
  if (i == t) return true;
  const int host = st.tau[static_cast<std::size_t>(i)];
  for (CompositionEnumerator c(st.g->part_size(host), st.spec->part_size(i)); c.valid();
       c.next()) {
    st.chosen.emplace_back(c.sizes());
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) ok = pair_ok(st, j, i);
    if (ok && multi_search(st, i + 1)) return true;
    st.chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// Containment of a complete multipartite pattern: searches part assignments
/// (all permutations by default, identity only when restricted) and interval
/// partitions of each host part, lexicographically; the returned witness is
/// re-verified before it is handed back.
inline std::optional<ContainmentWitness> contains_multipartite(const OrderedMultipartiteGraph& g,
                                                               const CompletePatternSpec& spec,
                                                               bool identity_assignment_only = false) {
  const int t = g.part_count();
  if (spec.part_count() != t)
    throw std::invalid_argument("pattern and host must have the same number of parts");
  std::vector<int> tau(static_cast<std::size_t>(t));
  std::iota(tau.begin(), tau.end(), 0);
  do {
    bool fits = true;
    for (int i = 0; i < t && fits; ++i)
      fits = g.part_size(tau[static_cast<std::size_t>(i)]) >= spec.part_size(i);
    if (!fits) continue;
    detail::MultiSearchState st{&g, &spec, tau, {}};
    st.chosen.reserve(static_cast<std::size_t>(t));
    if (detail::multi_search(st, 0)) {
      ContainmentWitness w;
      w.host_of_part = tau;
      std::vector<std::optional<IntervalPartition>> by_host(static_cast<std::size_t>(t));
      for (int i = 0; i < t; ++i)
        by_host[static_cast<std::size_t>(tau[static_cast<std::size_t>(i)])] =
            st.chosen[static_cast<std::size_t>(i)];
      for (int h = 0; h < t; ++h) w.partitions.push_back(*by_host[static_cast<std::size_t>(h)]);
      if (!verify_witness(g, spec, w))
        throw std::logic_error("internal: multipartite witness failed re-verification");
      return w;
    }
  } while (!identity_assignment_only && std::next_permutation(tau.begin(), tau.end()));
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Operational reference
// ---------------------------------------------------------------------------

namespace detail {

inline std::uint64_t pack_state(int p, int q, std::uint64_t mask) {
  return mask | (static_cast<std::uint64_t>(p) << 52) | (static_cast<std::uint64_t>(q) << 58);
}

inline std::uint64_t graph_mask(const OrderedBipartiteGraph& g) {
  std::uint64_t m = 0;
  for (int i = 0; i < g.a_size(); ++i)
    m |= g.row(i) << (static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(g.b_size()));
  return m;
}

inline std::uint64_t swap_mask(int p, int q, std::uint64_t m) {
  std::uint64_t out = 0;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j)
      if (m >> (i * q + j) & 1) out |= std::uint64_t{1} << (j * p + i);
  return out;
}

struct OperationalTarget {
  int p, q;
  std::uint64_t mask;
  std::uint64_t swapped;
  int edges;
};

inline bool operational_reachable(int p, int q, std::uint64_t mask, const OperationalTarget& t,
                                  std::unordered_map<std::uint64_t, bool>& memo) {
  if ((p == t.p && q == t.q && mask == t.mask) || (p == t.q && q == t.p && mask == t.swapped))
    return true;
  // sizes and edge counts never grow under IM1/IM2
  const bool fits = (p >= t.p && q >= t.q) || (p >= t.q && q >= t.p);
  if (!fits || std::popcount(mask) < t.edges) return false;
  const std::uint64_t key = pack_state(p, q, mask);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  memo.emplace(key, false);
  bool found = false;
  // (IM1) delete one edge
  for (std::uint64_t m = mask; m && !found; m &= m - 1)
    found = operational_reachable(p, q, mask & ~(m & ~(m - 1)) , t, memo);
  // (IM2) identify consecutive vertices of A
  const std::uint64_t row_mask = range_mask(0, q);
  for (int i = 0; i + 1 < p && !found; ++i) {
    std::uint64_t nm = 0;
    for (int r = 0; r < p - 1; ++r) {
      std::uint64_t rm = (mask >> ((r <= i ? r : r + 1) * q)) & row_mask;
      if (r == i) rm |= (mask >> ((i + 1) * q)) & row_mask;
      nm |= rm << (r * q);
    }
    found = operational_reachable(p - 1, q, nm, t, memo);
  }
  // (IM2) identify consecutive vertices of B
  for (int j = 0; j + 1 < q && !found; ++j) {
    std::uint64_t nm = 0;
    for (int r = 0; r < p; ++r) {
      const std::uint64_t rm = (mask >> (r * q)) & row_mask;
      const std::uint64_t low = rm & range_mask(0, j);
      const std::uint64_t mid = ((rm >> j) | (rm >> (j + 1))) & 1;
      const std::uint64_t high = rm >> (j + 2);
      nm |= (low | (mid << j) | (high << (j + 1))) << (r * (q - 1));
    }
    found = operational_reachable(p, q - 1, nm, t, memo);
  }
  memo[key] = found;
  return found;
}

}  // namespace detail

/// Decides interval-minor containment of an arbitrary bipartite pattern
/// straight from the operational definition: memoized search over all (IM1)
/// edge deletions and (IM2) identifications.  Exponential; this is the slow
/// reference path for tiny graphs (at most 52 potential edges).  A caller
/// sweeping many hosts against one fixed pattern can pass a shared memo.
inline bool contains_minor_operational(const OrderedBipartiteGraph& g,
                                       const OrderedBipartiteGraph& pattern,
                                       std::unordered_map<std::uint64_t, bool>* shared_memo =
                                           nullptr) {
  if (g.a_size() * g.b_size() > 52)
    throw std::invalid_argument("operational reference supports at most 52 potential edges");
  detail::OperationalTarget t{pattern.a_size(), pattern.b_size(), detail::graph_mask(pattern), 0,
                              pattern.edge_count()};
  t.swapped = detail::swap_mask(t.p, t.q, t.mask);
  std::unordered_map<std::uint64_t, bool> local;
  return detail::operational_reachable(g.a_size(), g.b_size(), detail::graph_mask(g), t,
                                       shared_memo ? *shared_memo : local);
}

}  // namespace imtk

#endif
