#include <gtest/gtest.h>

#include "dissoc/dissoc.hpp"
#include "support.hpp"

using namespace dissoc;

// Expected values frozen from tests/oracle/brute_force.py.

TEST(IsDissociation, Examples) {
  EXPECT_FALSE(is_dissociation(path_graph(3), {0, 1, 2}));
  EXPECT_TRUE(is_dissociation(complete_graph(5), {}));
  EXPECT_TRUE(is_dissociation(cycle_graph(4), {0, 1}));
  EXPECT_TRUE(is_dissociation(cycle_graph(4), {0, 2}));
}

TEST(CountBrute, Examples) {
  EXPECT_EQ(count_brute(Graph(1)), 2);
  EXPECT_EQ(count_brute(complete_graph(3)), 7);
  EXPECT_EQ(count_brute(path_graph(9)), 274);
  EXPECT_EQ(count_brute(Graph(0)), 1);
  EXPECT_THROW(count_brute(Graph(25)), std::invalid_argument);
}

TEST(Count, Examples) {
  EXPECT_EQ(count(path_graph(10)), 504);
  EXPECT_EQ(count(path_graph(11)), 927);
  EXPECT_EQ(count(disjoint_union(path_graph(2), Graph(1))), 8);
  EXPECT_EQ(count(Graph(0)), 1);
  EXPECT_EQ(count(cycle_graph(5)), 21);
  EXPECT_EQ(count(path_graph(5)), 24);
  EXPECT_EQ(count(path_graph(4)), 13);
  EXPECT_EQ(count(path_graph(6)), 44);
  EXPECT_EQ(count(complete_graph(4)), 11);
  EXPECT_EQ(count(Graph(32)), pow2(32));
}

TEST(Count, LargeSparseGraphsStayExact) {
  EXPECT_EQ(count(path_graph(32)), count_path(32));
  EXPECT_EQ(count(cycle_graph(32)), count_cycle(32));
  EXPECT_EQ(count(star_graph(32)), count_star(32));
  EXPECT_EQ(count(matching_union(0, 16)), pow2(32));
  EXPECT_EQ(count(complete_graph(32)), Count(1 + 32 + 32 * 31 / 2));
}

TEST(BranchPartition, Examples) {
  auto k2 = branch_partition(path_graph(2), 0);
  EXPECT_EQ(k2.excluded, 2);
  EXPECT_EQ(k2.isolated, 1);
  EXPECT_EQ(k2.matched, 1);
  auto k1 = branch_partition(Graph(1), 0);
  EXPECT_EQ(k1.excluded, 1);
  EXPECT_EQ(k1.isolated, 1);
  EXPECT_EQ(k1.matched, 0);
  auto p3 = branch_partition(path_graph(3), 1);
  EXPECT_EQ(p3.excluded, 4);
  EXPECT_EQ(p3.isolated, 1);
  EXPECT_EQ(p3.matched, 2);
  EXPECT_EQ(p3.total(), 7);
}

TEST(Polynomial, Examples) {
  auto coeffs = [](const Graph& g) {
    std::vector<int> out;
    for (const auto& c : dissociation_polynomial(g).coeffs) out.push_back(static_cast<int>(c));
    return out;
  };
  EXPECT_EQ(coeffs(complete_graph(3)), (std::vector<int>{1, 3, 3, 0}));
  EXPECT_EQ(coeffs(cycle_graph(4)), (std::vector<int>{1, 4, 6, 0, 0}));
  EXPECT_EQ(coeffs(matching_union(0, 2)), (std::vector<int>{1, 4, 6, 4, 1}));
  EXPECT_EQ(dissociation_polynomial(cycle_graph(4)).total(), 11);
}

TEST(Count, AgreesWithBruteForceOnAllSmallGraphs) {
  for (int n = 0; n <= 6; ++n)
    for_each_graph(n, [](const Graph& g) { ASSERT_EQ(count(g), count_brute(g)) << to_graph6(g); });
}

TEST(Count, AgreesWithBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1500; ++i) {
    Graph g = test::random_graph(rng, 8, 14);
    ASSERT_EQ(count(g), count_brute(g)) << to_graph6(g);
  }
}

TEST(Count, BranchPartitionSumsForEveryPivot) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    Graph g = test::random_graph(rng, 1, 12);
    const Count d = count(g);
    for (Vertex v = 0; v < g.order(); ++v) ASSERT_EQ(branch_partition(g, v).total(), d);
  }
}

TEST(Count, ComponentMultiplicativity) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 300; ++i) {
    Graph a = test::random_graph(rng, 0, 14);
    Graph b = test::random_graph(rng, 0, 14);
    ASSERT_EQ(count(disjoint_union(a, b)), count(a) * count(b));
  }
}

TEST(Count, StrictMonotoneUnderVertexDeletion) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    Graph g = test::random_graph(rng, 1, 16);
    VertexSet s = test::random_subset(rng, g.order());
    if (s.empty()) s = VertexSet::single(0);
    ASSERT_LT(count(delete_vertices(g, s)), count(g));
  }
}

TEST(Count, MemoizedCounterReusesWork) {
  DissociationCounter c(path_graph(20));
  EXPECT_EQ(c.count(), count_path(20));
  EXPECT_GT(c.memo_size(), 0u);
  EXPECT_EQ(c.count(VertexSet::full(10)), count_path(10));
}

TEST(Polynomial, Invariants) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 300; ++i) {
    Graph g = test::random_graph(rng, 0, 12);
    auto p = dissociation_polynomial(g);
    const int n = g.order();
    ASSERT_EQ(p.coeffs.size(), static_cast<std::size_t>(n + 1));
    EXPECT_EQ(p.coeffs[0], 1);
    if (n >= 1) {
      EXPECT_EQ(p.coeffs[1], n);
    }
    if (n >= 2) {
      EXPECT_EQ(p.coeffs[2], n * (n - 1) / 2);
    }
    if (n >= 3 && p.coeffs[3] == 0) {
      for (int k = 4; k <= n; ++k) EXPECT_EQ(p.coeffs[k], 0);
    }
    EXPECT_EQ(p.total(), count(g));
  }
}

TEST(Families, RecurrencesMatchDirectCount) {
  EXPECT_EQ(count_path(0), 1);
  EXPECT_EQ(count_path(1), 2);
  EXPECT_EQ(count_path(2), 4);
  EXPECT_EQ(count_path(9), 274);
  EXPECT_EQ(count_star(4), 12);
  EXPECT_EQ(count_star(6), 38);
  EXPECT_EQ(count_cycle(4), 11);
  EXPECT_EQ(count_cycle(3), 7);
  EXPECT_THROW(count_cycle(2), std::invalid_argument);
  for (int n = 3; n <= 16; ++n) {
    EXPECT_EQ(count_path(n), count(path_graph(n))) << n;
    EXPECT_EQ(count_cycle(n), count(cycle_graph(n))) << n;
    EXPECT_EQ(count_star(n), count(star_graph(n))) << n;
  }
}

TEST(Families, CycleBelowPathBelowH) {
  for (int n = 4; n <= 16; ++n) {
    EXPECT_LT(count(cycle_graph(n)), count(path_graph(n))) << n;
    EXPECT_LT(count(cycle_graph(n)), h_bound(n)) << n;
  }
  for (int n = 9; n <= 16; ++n) EXPECT_LT(count(path_graph(n)), h_bound(n)) << n;
}

TEST(Bounds, ClosedForms) {
  EXPECT_EQ(h_bound(3), 7);
  EXPECT_EQ(h_bound(6), 42);
  EXPECT_EQ(h_bound(9), 292);
  EXPECT_EQ(h_bound(10), 556);
  EXPECT_EQ(h_bound(11), 1104);
  EXPECT_EQ(f_bound(6), 44);
  EXPECT_EQ(f_bound(2), 4);
  EXPECT_EQ(f_bound(7), 84);
  EXPECT_EQ(g_bound(10), 1024);
  EXPECT_EQ(lower_bound(4), 11);
  EXPECT_EQ(lower_bound(5), 16);
}

TEST(Bounds, MatchExtremalGraphsUpToForty) {
  for (int n = 1; n <= 32; ++n)
    for (const auto& t : extremal_tree(n)) EXPECT_EQ(count(t), f_bound(n)) << n;
  for (int n = 3; n <= 32; ++n) EXPECT_EQ(count(extremal_unicyclic(n)), h_bound(n)) << n;
  for (int n = 1; n <= 40; ++n) EXPECT_EQ(count_star_join(extremal_tree_spec(n)), f_bound(n)) << n;
  for (int n = 3; n <= 40; ++n) EXPECT_EQ(count_star_join(extremal_unicyclic_spec(n)), h_bound(n)) << n;
  // Hand expansion at the hub: d(K_1 * kK_2) = 4^k + 2^k + k 2^{k-1}.
  for (unsigned k = 1; k <= 19; ++k)
    EXPECT_EQ(f_bound(2 * k + 1), pow2(2 * k) + pow2(k) + Count(k) * pow2(k - 1)) << k;
  for (int n = 7; n <= 40; ++n) {
    EXPECT_GT(f_bound(n), f_bound(n - 1));
    EXPECT_GT(h_bound(n), h_bound(n - 1));
    EXPECT_LT(h_bound(n), f_bound(n));
    EXPECT_LT(f_bound(n), g_bound(n));
  }
}

TEST(StarJoin, DecompositionMatchesDirectCount) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    StarJoinSpec spec{std::uniform_int_distribution<int>(1, 4)(rng), {}};
    const int parts = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int k = 0; k < parts; ++k) {
      Graph g = test::random_graph(rng, 1, 5);
      spec.parts.push_back({g, std::uniform_int_distribution<int>(0, g.order() - 1)(rng)});
    }
    ASSERT_EQ(count_star_join(spec), count(star_join(spec)));
  }
}
