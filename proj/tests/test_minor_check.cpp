#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <random>
#include <vector>

#include "imtk/minor_check.hpp"
#include "test_support.hpp"

using namespace imtk;

TEST_CASE("pattern spec validation", "[minor]") {
  CHECK(CompletePatternSpec({1, 2, 3}).part_count() == 3);
  CHECK(CompletePatternSpec::bipartite(4, 2).part_sizes() == std::vector<int>{2, 4});
  CHECK_THROWS_AS(CompletePatternSpec({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(CompletePatternSpec({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(CompletePatternSpec({}), std::invalid_argument);
}

TEST_CASE("complete host contains its own pattern with singleton blocks", "[minor]") {
  const auto w = contains_kl_exhaustive(OrderedBipartiteGraph::complete(2, 2), 2, 2);
  REQUIRE(w.has_value());
  CHECK(w->host_of_part == std::vector<int>{0, 1});
  CHECK(w->partitions[0].sizes()[0] == 1);
  CHECK(w->partitions[0].block_count() == 2);
  CHECK(w->partitions[1].block_count() == 2);
}

TEST_CASE("3x2 zigzag does not contain K_{2,2}", "[minor]") {
  const OrderedBipartiteGraph g =
      OrderedBipartiteGraph::from_edges(3, 2, std::vector<Edge>{{0, 0}, {1, 1}, {2, 0}});
  CHECK_FALSE(contains_kl_exhaustive(g, 2, 2).has_value());
  CHECK_FALSE(contains_kl_greedy(g, 2, 2).has_value());
}

TEST_CASE("K_{1,1} is contained exactly when an edge exists", "[minor]") {
  CHECK_FALSE(contains_kl_greedy(OrderedBipartiteGraph(3, 3), 1, 1).has_value());
  const OrderedBipartiteGraph g =
      OrderedBipartiteGraph::from_edges(3, 3, std::vector<Edge>{{1, 2}});
  const auto w = contains_kl_greedy(g, 1, 1);
  REQUIRE(w.has_value());
  CHECK(verify_witness(g, 1, 1, *w));
}

TEST_CASE("K_{1,l} needs l joined blocks of B", "[minor]") {
  // columns 0 and 2 have edges, column 1 does not: 2 blocks possible, not 3
  const OrderedBipartiteGraph g =
      OrderedBipartiteGraph::from_edges(2, 3, std::vector<Edge>{{0, 0}, {1, 2}});
  CHECK(contains_kl_exhaustive(g, 1, 2).has_value());
  CHECK_FALSE(contains_kl_exhaustive(g, 1, 3).has_value());
  const OrderedBipartiteGraph h = g.with_edge(0, 1);
  CHECK(contains_kl_exhaustive(h, 1, 3).has_value());
}

TEST_CASE("degenerate pattern sizes are rejected", "[minor]") {
  const OrderedBipartiteGraph g(2, 2);
  CHECK_THROWS_AS(contains_kl_exhaustive(g, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(contains_kl_greedy(g, 1, 0), std::invalid_argument);
}

TEST_CASE("patterns larger than the host are never contained", "[minor]") {
  const OrderedBipartiteGraph g = OrderedBipartiteGraph::complete(2, 3);
  CHECK_FALSE(contains_kl_exhaustive(g, 3, 3).has_value());
  CHECK_FALSE(contains_kl_exhaustive(g, 2, 4).has_value());
  CHECK(contains_kl_exhaustive(g, 3, 2).has_value());  // orientation swap fits
}

TEST_CASE("greedy agrees with exhaustive, witnesses included", "[minor]") {
  std::mt19937_64 rng(test::default_seed + 10);
  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_real_distribution<double> dens(0.15, 0.95);
  for (int trial = 0; trial < 200; ++trial) {
    const OrderedBipartiteGraph g = test::random_bipartite(rng, size(rng), size(rng), dens(rng));
    for (int k = 1; k <= 4; ++k)
      for (int l = k; l <= 4; ++l) {
        const auto we = contains_kl_exhaustive(g, k, l);
        const auto wg = contains_kl_greedy(g, k, l);
        REQUIRE(we.has_value() == wg.has_value());
        if (we) {
          REQUIRE(we->host_of_part == wg->host_of_part);
          REQUIRE(we->partitions[0] == wg->partitions[0]);
          REQUIRE(we->partitions[1] == wg->partitions[1]);
          REQUIRE(verify_witness(g, k, l, *we));
        }
      }
  }
}

TEST_CASE("partition characterization matches the operational definition", "[minor]") {
  // every graph with p+q <= 5, every pattern with k <= l <= 3
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; p + q <= 5; ++q)
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (p * q)); ++mask) {
        const OrderedBipartiteGraph g = test::graph_from_mask(p, q, mask);
        for (int k = 1; k <= 3; ++k)
          for (int l = k; l <= 3; ++l) {
            const bool partition_verdict = contains_kl_greedy(g, k, l).has_value();
            const bool operational_verdict =
                contains_minor_operational(g, OrderedBipartiteGraph::complete(k, l));
            REQUIRE(partition_verdict == operational_verdict);
          }
      }
}

TEST_CASE("operational reference handles a non-complete pattern", "[minor]") {
  // pattern a1-b1, a2-b2 inside a 3x3 path-ish host
  const OrderedBipartiteGraph pattern =
      OrderedBipartiteGraph::from_edges(2, 2, std::vector<Edge>{{0, 0}, {1, 1}});
  const OrderedBipartiteGraph host =
      OrderedBipartiteGraph::from_edges(3, 3, std::vector<Edge>{{0, 0}, {1, 1}, {2, 2}});
  CHECK(contains_minor_operational(host, pattern));
  const OrderedBipartiteGraph sparse =
      OrderedBipartiteGraph::from_edges(3, 3, std::vector<Edge>{{0, 0}});
  CHECK_FALSE(contains_minor_operational(sparse, pattern));
}

TEST_CASE("verdict is invariant under the equivalence transformations", "[minor]") {
  std::mt19937_64 rng(test::default_seed + 11);
  std::uniform_int_distribution<int> size(1, 7);
  std::uniform_real_distribution<double> dens(0.2, 0.9);
  for (int trial = 0; trial < 100; ++trial) {
    const OrderedBipartiteGraph g = test::random_bipartite(rng, size(rng), size(rng), dens(rng));
    const int k = 1 + static_cast<int>(rng() % 3);
    const int l = k + static_cast<int>(rng() % 3);
    const bool base = contains_kl_greedy(g, k, l).has_value();
    for (int combo = 0; combo < 8; ++combo) {
      OrderedBipartiteGraph h = g;
      if (combo & 1) h = h.reverse_order(Side::A);
      if (combo & 2) h = h.reverse_order(Side::B);
      if (combo & 4) h = h.swap_parts();
      REQUIRE(contains_kl_greedy(h, k, l).has_value() == base);
    }
  }
}

TEST_CASE("containment is monotone and closed under the minor operations", "[minor]") {
  std::mt19937_64 rng(test::default_seed + 12);
  std::uniform_int_distribution<int> size(2, 7);
  for (int trial = 0; trial < 120; ++trial) {
    const OrderedBipartiteGraph g = test::random_bipartite(rng, size(rng), size(rng), 0.5);
    const int k = 1 + static_cast<int>(rng() % 2);
    const int l = k + static_cast<int>(rng() % 2);
    const bool base = contains_kl_greedy(g, k, l).has_value();
    // adding an edge never destroys containment
    if (base) {
      OrderedBipartiteGraph h = g;
      h = h.with_edge(static_cast<int>(rng() % g.a_size()), static_cast<int>(rng() % g.b_size()));
      REQUIRE(contains_kl_greedy(h, k, l).has_value());
    }
    // containment in a child implies containment in the parent
    if (g.a_size() > 1) {
      const auto child = g.identify_consecutive(Side::A, static_cast<int>(rng() % (g.a_size() - 1)));
      if (contains_kl_greedy(child, k, l)) REQUIRE(base);
    }
    const auto es = g.edges();
    if (!es.empty()) {
      const Edge e = es[rng() % es.size()];
      if (contains_kl_greedy(g.delete_edge(e.a, e.b), k, l)) REQUIRE(base);
    }
  }
}

TEST_CASE("size necessity", "[minor]") {
  std::mt19937_64 rng(test::default_seed + 13);
  std::uniform_int_distribution<int> size(1, 6);
  for (int trial = 0; trial < 150; ++trial) {
    const int p = size(rng), q = size(rng);
    const OrderedBipartiteGraph g = test::random_bipartite(rng, p, q, 0.8);
    const int k = 1 + static_cast<int>(rng() % 4);
    const int l = 1 + static_cast<int>(rng() % 4);
    if (contains_kl_greedy(g, k, l)) {
      REQUIRE(std::min(k, l) <= std::min(p, q));
      REQUIRE(std::max(k, l) <= std::max(p, q));
    }
  }
}

TEST_CASE("witness verification rejects malformed witnesses", "[minor]") {
  const OrderedBipartiteGraph g = OrderedBipartiteGraph::complete(3, 3);
  const auto w = contains_kl_exhaustive(g, 2, 3);
  REQUIRE(w.has_value());
  CHECK(verify_witness(g, 2, 3, *w));

  ContainmentWitness bad_sum = *w;
  bad_sum.partitions[0] = IntervalPartition(std::vector<int>{1, 3});  // sums to 4, not 3
  CHECK_THROWS_AS(verify_witness(g, 2, 3, bad_sum), std::invalid_argument);

  ContainmentWitness bad_assign = *w;
  bad_assign.host_of_part = {0, 0};
  CHECK_THROWS_AS(verify_witness(g, 2, 3, bad_assign), std::invalid_argument);

  ContainmentWitness bad_counts = *w;
  bad_counts.partitions[0] = IntervalPartition(std::vector<int>{3});
  CHECK_THROWS_AS(verify_witness(g, 2, 3, bad_counts), std::invalid_argument);

  // well-formed witness whose block pair lacks edges -> false, not an error
  const OrderedBipartiteGraph sparse =
      OrderedBipartiteGraph::from_edges(3, 3, std::vector<Edge>{{0, 0}});
  ContainmentWitness shaped = *w;
  CHECK_FALSE(verify_witness(sparse, 2, 3, shaped));
}

TEST_CASE("multipartite containment on complete hosts", "[minor]") {
  const OrderedMultipartiteGraph full = OrderedMultipartiteGraph::complete({2, 3, 4});
  const CompletePatternSpec spec({2, 3, 4});
  const auto w = contains_multipartite(full, spec);
  REQUIRE(w.has_value());
  CHECK(w->host_of_part == std::vector<int>{0, 1, 2});
  for (const IntervalPartition& part : w->partitions)
    for (int s : part.sizes()) CHECK(s == 1);
  CHECK(verify_witness(full, spec, *w));

  // removing any cross edge kills containment: all blocks are forced singleton
  CHECK_FALSE(contains_multipartite(full.delete_edge(0, 0, 1, 0), spec).has_value());
  CHECK_FALSE(contains_multipartite(full.delete_edge(1, 2, 2, 3), spec).has_value());
}

TEST_CASE("multipartite part assignment permutations", "[minor]") {
  // hosts sized (3,2) can only fit pattern (2,3) by exchanging the parts
  const OrderedMultipartiteGraph host = OrderedMultipartiteGraph::complete({3, 2});
  const CompletePatternSpec spec({2, 3});
  const auto w = contains_multipartite(host, spec);
  REQUIRE(w.has_value());
  CHECK(w->host_of_part == std::vector<int>{1, 0});
  CHECK_FALSE(contains_multipartite(host, spec, /*identity_assignment_only=*/true).has_value());
}

TEST_CASE("multipartite witness verification re-checks shapes", "[minor]") {
  const OrderedMultipartiteGraph full = OrderedMultipartiteGraph::complete({2, 3});
  const CompletePatternSpec spec({2, 3});
  const auto w = contains_multipartite(full, spec);
  REQUIRE(w.has_value());
  ContainmentWitness bad = *w;
  bad.host_of_part = {1, 1};
  CHECK_THROWS_AS(verify_witness(full, spec, bad), std::invalid_argument);
  CHECK_THROWS_AS(contains_multipartite(full, CompletePatternSpec({2, 3, 4})),
                  std::invalid_argument);
}

namespace {

// independent naive containment check working off the edge list
bool naive_multipartite_contains(const OrderedMultipartiteGraph& g,
                                 const CompletePatternSpec& spec) {
  const int t = g.part_count();
  std::vector<int> tau(static_cast<std::size_t>(t));
  std::iota(tau.begin(), tau.end(), 0);
  const auto edge_list = g.edges();
  auto joined = [&](int pu, int pv, int u_begin, int u_end, int v_begin, int v_end) {
    for (const MultiEdge& e : edge_list) {
      if (e.u == pu && e.v == pv && e.i >= u_begin && e.i < u_end && e.j >= v_begin &&
          e.j < v_end)
        return true;
      if (e.u == pv && e.v == pu && e.j >= u_begin && e.j < u_end && e.i >= v_begin &&
          e.i < v_end)
        return true;
    }
    return false;
  };
  do {
    bool fits = true;
    for (int i = 0; i < t && fits; ++i)
      fits = g.part_size(tau[static_cast<std::size_t>(i)]) >= spec.part_size(i);
    if (!fits) continue;
    std::vector<std::vector<std::vector<int>>> comps(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i)
      for (CompositionEnumerator c(g.part_size(tau[static_cast<std::size_t>(i)]),
                                   spec.part_size(i));
           c.valid(); c.next())
        comps[static_cast<std::size_t>(i)].push_back(c.sizes());
    std::vector<std::size_t> pick(static_cast<std::size_t>(t), 0);
    for (;;) {
      bool all_ok = true;
      for (int i = 0; i < t && all_ok; ++i)
        for (int j = i + 1; j < t && all_ok; ++j) {
          const auto& ci = comps[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
          const auto& cj = comps[static_cast<std::size_t>(j)][pick[static_cast<std::size_t>(j)]];
          int ub = 0;
          for (int bs : ci) {
            int vb = 0;
            for (int cs : cj) {
              if (!joined(tau[static_cast<std::size_t>(i)], tau[static_cast<std::size_t>(j)], ub,
                          ub + bs, vb, vb + cs)) {
                all_ok = false;
                break;
              }
              vb += cs;
            }
            if (!all_ok) break;
            ub += bs;
          }
        }
      if (all_ok) return true;
      int level = t - 1;
      while (level >= 0 &&
             ++pick[static_cast<std::size_t>(level)] ==
                 comps[static_cast<std::size_t>(level)].size()) {
        pick[static_cast<std::size_t>(level)] = 0;
        --level;
      }
      if (level < 0) break;
    }
  } while (std::next_permutation(tau.begin(), tau.end()));
  return false;
}

}  // namespace

TEST_CASE("multipartite checker agrees with a naive enumeration", "[minor]") {
  std::mt19937_64 rng(test::default_seed + 15);
  std::uniform_int_distribution<int> size(1, 4);
  std::uniform_real_distribution<double> dens(0.3, 0.95);
  for (int trial = 0; trial < 120; ++trial) {
    const std::vector<int> sizes{size(rng), size(rng), size(rng)};
    const OrderedMultipartiteGraph g = test::random_multipartite(rng, sizes, dens(rng));
    std::vector<int> pat{1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3),
                         1 + static_cast<int>(rng() % 3)};
    std::sort(pat.begin(), pat.end());
    const CompletePatternSpec spec(pat);
    REQUIRE(contains_multipartite(g, spec).has_value() == naive_multipartite_contains(g, spec));
  }
}

TEST_CASE("multipartite verdict agrees with bipartite for t = 2", "[minor]") {
  std::mt19937_64 rng(test::default_seed + 14);
  std::uniform_int_distribution<int> size(1, 6);
  for (int trial = 0; trial < 80; ++trial) {
    const int p = size(rng), q = size(rng);
    const OrderedBipartiteGraph g = test::random_bipartite(rng, p, q, 0.6);
    OrderedMultipartiteGraph m({p, q});
    for (const Edge& e : g.edges()) m = m.with_edge(0, e.a, 1, e.b);
    const int k = 1 + static_cast<int>(rng() % 3);
    const int l = k + static_cast<int>(rng() % 3);
    REQUIRE(contains_multipartite(m, CompletePatternSpec({k, l})).has_value() ==
            contains_kl_greedy(g, k, l).has_value());
  }
}
