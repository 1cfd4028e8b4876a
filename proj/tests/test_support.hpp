#ifndef IMTK_TEST_SUPPORT_HPP
#define IMTK_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "imtk/ordered_graph.hpp"

namespace imtk::test {

inline constexpr std::uint64_t default_seed = 0x1ce5eedULL;

inline OrderedBipartiteGraph random_bipartite(std::mt19937_64& rng, int p, int q,
                                              double density) {
  std::bernoulli_distribution keep(density);
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j)
      if (keep(rng)) edges.push_back({i, j});
  return OrderedBipartiteGraph::from_edges(p, q, edges);
}

inline OrderedMultipartiteGraph random_multipartite(std::mt19937_64& rng,
                                                    const std::vector<int>& sizes,
                                                    double density) {
  std::bernoulli_distribution keep(density);
  std::vector<MultiEdge> edges;
  const int t = static_cast<int>(sizes.size());
  for (int u = 0; u < t; ++u)
    for (int v = u + 1; v < t; ++v)
      for (int i = 0; i < sizes[static_cast<std::size_t>(u)]; ++i)
        for (int j = 0; j < sizes[static_cast<std::size_t>(v)]; ++j)
          if (keep(rng)) edges.push_back({u, i, v, j});
  return OrderedMultipartiteGraph::from_edges(sizes, edges);
}

/// Bipartite graph from the low pq bits of mask, row-major.
inline OrderedBipartiteGraph graph_from_mask(int p, int q, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j)
      if (mask >> (i * q + j) & 1) edges.push_back({i, j});
  return OrderedBipartiteGraph::from_edges(p, q, edges);
}

}  // namespace imtk::test

#endif
