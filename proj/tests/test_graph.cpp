#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "dissoc/dissoc.hpp"
#include "support.hpp"

using namespace dissoc;

namespace {

std::string refinement_form(const Graph& g) { return to_graph6(relabel(g, refinement_labeling(g))); }
std::string exhaustive_form(const Graph& g) { return to_graph6(relabel(g, max_string_labeling(g))); }

}  // namespace

TEST(VertexSet, BasicOps) {
  VertexSet s{0, 3, 5};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
  EXPECT_EQ(s.first(), 0);
  EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{0, 3, 5}));
  s.erase(0);
  EXPECT_EQ(s.first(), 3);
  EXPECT_TRUE(VertexSet({3}).subset_of(s));
  EXPECT_EQ((s - VertexSet{3}), VertexSet{5});
  EXPECT_EQ(VertexSet::full(32).size(), 32);
  EXPECT_EQ(VertexSet::full(0).size(), 0);
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(Graph(-1), std::invalid_argument);
  EXPECT_THROW(Graph(33), std::invalid_argument);
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
  EXPECT_THROW(g.degree(-1), std::out_of_range);
}

TEST(Graph, ClosedNeighborhood) {
  EXPECT_EQ(closed_neighborhood(path_graph(2), 0), (VertexSet{0, 1}));
  EXPECT_EQ(closed_neighborhood(path_graph(3), 1), (VertexSet{0, 1, 2}));
  EXPECT_EQ(closed_neighborhood(Graph(1), 0), VertexSet{0});
  EXPECT_EQ(open_neighborhood(path_graph(5), VertexSet{1, 2}), (VertexSet{0, 3}));
  EXPECT_EQ(closed_neighborhood(path_graph(5), VertexSet{1, 2}), (VertexSet{0, 1, 2, 3}));
}

TEST(Graph, InducedSubgraph) {
  const Graph c4 = cycle_graph(4);
  EXPECT_EQ(induced_subgraph(c4, {0, 1}), path_graph(2));
  EXPECT_EQ(induced_subgraph(c4, {0, 2}), Graph(2));
  EXPECT_EQ(induced_subgraph(path_graph(5), {0, 1, 2}), path_graph(3));
  EXPECT_EQ(delete_vertices(path_graph(5), {3, 4}), path_graph(3));
}

TEST(Graph, Components) {
  auto parts = components(disjoint_union(path_graph(2), Graph(1)));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], path_graph(2));
  EXPECT_EQ(parts[1], Graph(1));
  EXPECT_EQ(components(cycle_graph(5)).size(), 1u);
  EXPECT_EQ(components(Graph(3)).size(), 3u);
  EXPECT_TRUE(components(Graph(0)).empty());
}

TEST(Graph, CycleSpaceDimension) {
  EXPECT_EQ(cycle_space_dim(star_graph(7)), 0);
  EXPECT_EQ(cycle_space_dim(cycle_graph(5)), 1);
  EXPECT_EQ(cycle_space_dim(complete_graph(4)), 3);
  EXPECT_TRUE(is_tree(path_graph(1)));
  EXPECT_FALSE(is_tree(Graph(2)));
  EXPECT_TRUE(is_unicyclic(cycle_graph(3)));
}

TEST(Graph, TwinStatus) {
  const Graph k3 = complete_graph(3);
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = u + 1; v < 3; ++v) EXPECT_EQ(twin_status(k3, u, v), TwinStatus::kTrueTwin);
  EXPECT_EQ(twin_status(star_graph(4), 1, 2), TwinStatus::kFalseTwin);
  const Graph c5 = cycle_graph(5);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(twin_status(c5, v, (v + 1) % 5), TwinStatus::kNeither);
  EXPECT_THROW(twin_status(k3, 1, 1), std::invalid_argument);
}

TEST(Graph, RandomInvariants) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    Graph g = test::random_graph(rng, 0, 14);
    ASSERT_TRUE(test::symmetric_irreflexive(g));
    if (g.edge_count() > 0) {
      auto [u, v] = g.edges().front();
      ASSERT_TRUE(test::symmetric_irreflexive(g.without_edge(u, v)));
    }
    ASSERT_TRUE(test::symmetric_irreflexive(relabel(g, test::random_perm(rng, g.order()))));

    int total = 0;
    VertexSet seen;
    for (VertexSet c : component_sets(g)) {
      EXPECT_TRUE((seen & c).empty());
      seen |= c;
      total += c.size();
    }
    EXPECT_EQ(seen, g.vertices());
    EXPECT_EQ(total, g.order());

    for (auto [u, v] : twin_pairs(g, TwinStatus::kTrueTwin)) EXPECT_TRUE(g.has_edge(u, v));
    for (auto [u, v] : twin_pairs(g, TwinStatus::kFalseTwin)) EXPECT_FALSE(g.has_edge(u, v));
  }
}

// ---------------------------------------------------------------------------

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(from_graph6("A_"), path_graph(2));
  EXPECT_EQ(to_graph6(Graph(1)), "@");
  EXPECT_EQ(to_graph6(Graph(0)), "?");
  EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(from_graph6(">>graph6<<C~\n"), complete_graph(4));
}

TEST(Graph6, ErrorKinds) {
  auto kind = [](std::string_view s) {
    try {
      from_graph6(s);
    } catch (const Graph6Error& e) {
      return e.kind();
    }
    ADD_FAILURE() << "accepted " << s;
    return Graph6ErrorKind::kEmpty;
  };
  EXPECT_EQ(kind(""), Graph6ErrorKind::kEmpty);
  EXPECT_EQ(kind(":Fa@x^"), Graph6ErrorKind::kUnsupportedFormat);
  EXPECT_EQ(kind("&C~"), Graph6ErrorKind::kUnsupportedFormat);
  EXPECT_EQ(kind(">>sparse6<<:A_"), Graph6ErrorKind::kUnsupportedFormat);
  EXPECT_EQ(kind("!A_"), Graph6ErrorKind::kMalformedHeader);
  EXPECT_EQ(kind("~??~"), Graph6ErrorKind::kOrderTooLarge);
  EXPECT_EQ(kind("`"), Graph6ErrorKind::kOrderTooLarge);
  EXPECT_EQ(kind("C~ "), Graph6ErrorKind::kInvalidCharacter);
  EXPECT_EQ(kind("E?"), Graph6ErrorKind::kTruncated);
  EXPECT_EQ(kind("A_?"), Graph6ErrorKind::kTrailingGarbage);
  EXPECT_EQ(kind("A`"), Graph6ErrorKind::kTrailingGarbage);
}

TEST(Graph6, RoundTripTreesOfOrderEight) {
  for (const auto& t : all_trees(8)) EXPECT_EQ(from_graph6(to_graph6(t)), t);
}

TEST(Graph6, RoundTripEveryGeneratedGraph) {
  std::size_t n_checked = 0;
  for (int n = 0; n <= 8; ++n)
    for_each_graph(n, [&](const Graph& g) {
      ++n_checked;
      ASSERT_EQ(from_graph6(to_graph6(g)), g);
    });
  detail::orderly_graphs(9, [&](const Graph& g) { ASSERT_EQ(from_graph6(to_graph6(g)), g); });
  for (const auto& g : all_unicyclic(10)) EXPECT_EQ(from_graph6(to_graph6(g)), g);
  for (const auto& t : all_trees(10)) EXPECT_EQ(from_graph6(to_graph6(t)), t);
  EXPECT_EQ(n_checked, 1u + 1 + 2 + 4 + 11 + 34 + 156 + 1044 + 12346);
}

TEST(Graph6, RoundTripRandomLarge) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Graph g = test::random_graph(rng, 0, 32);
    ASSERT_EQ(from_graph6(to_graph6(g)), g);
  }
}

TEST(Graph6, StreamStrictAndLenient) {
  std::istringstream good("Cr\n\nCs\n");
  auto r = read_graph6_stream(good);
  ASSERT_EQ(r.graphs.size(), 2u);
  EXPECT_EQ(r.graphs[1].line, 3u);

  std::istringstream bad1("Cr\nC!\nCs\n");
  try {
    read_graph6_stream(bad1, ReadMode::kStrict);
    FAIL() << "strict mode accepted a corrupt line";
  } catch (const Graph6StreamError& e) {
    EXPECT_EQ(e.line(), 2u);
  }

  std::istringstream bad2("Cr\nC!\nCs\n");
  auto lenient = read_graph6_stream(bad2, ReadMode::kLenient);
  EXPECT_EQ(lenient.graphs.size(), 2u);
  ASSERT_EQ(lenient.skipped.size(), 1u);
  EXPECT_EQ(lenient.skipped[0].line, 2u);

  std::istringstream empty("");
  EXPECT_TRUE(read_graph6_stream(empty).graphs.empty());
}

// ---------------------------------------------------------------------------

TEST(Canonical, Examples) {
  EXPECT_EQ(canonical_form(path_graph(4)), canonical_form(relabel(path_graph(4), {3, 2, 1, 0})));
  EXPECT_NE(canonical_form(star_graph(4)), canonical_form(path_graph(4)));
  auto f6 = extremal_tree(6);
  ASSERT_EQ(f6.size(), 2u);
  EXPECT_NE(canonical_form(f6[0]), canonical_form(f6[1]));
}

TEST(Canonical, InvariantUnderRandomRelabeling) {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 1000; ++iter) {
    Graph g = test::random_graph(rng, 1, 8);
    Graph h = relabel(g, test::random_perm(rng, g.order()));
    ASSERT_EQ(canonical_form(g), canonical_form(h)) << to_graph6(g);
    ASSERT_EQ(exhaustive_form(g), exhaustive_form(h)) << to_graph6(g);
  }
}

TEST(Canonical, SeparatesAllClassesUpToSeven) {
  for (int n = 0; n <= 7; ++n) {
    std::set<std::string> forms, refined;
    auto graphs = all_graphs(n);
    for (const auto& g : graphs) {
      forms.insert(canonical_form(g));
      refined.insert(refinement_form(g));
    }
    EXPECT_EQ(forms.size(), graphs.size()) << n;
    EXPECT_EQ(refined.size(), graphs.size()) << n;
  }
}

TEST(Canonical, RefinementAgreesWithExhaustive) {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 400; ++iter) {
    Graph g = test::random_graph(rng, 1, 8);
    Graph h = relabel(g, test::random_perm(rng, g.order()));
    // Same class under both searches, and both distinguish what the other does.
    ASSERT_EQ(refinement_form(g), refinement_form(h));
    Graph k = test::random_graph(rng, g.order(), 0.5);
    ASSERT_EQ(refinement_form(g) == refinement_form(k), exhaustive_form(g) == exhaustive_form(k));
  }
}

TEST(Canonical, RefinementInvariantOnLargerGraphs) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    Graph g = test::random_graph(rng, 9, 20);
    Graph h = relabel(g, test::random_perm(rng, g.order()));
    ASSERT_EQ(canonical_form(g), canonical_form(h)) << to_graph6(g);
  }
  // Highly symmetric inputs stress automorphism pruning.
  for (const Graph& g : {cycle_graph(20), complete_graph(16), complete_multipartite({4, 4, 4}),
                         disjoint_union(cycle_graph(6), cycle_graph(6)), matching_union(2, 7)}) {
    Graph h = relabel(g, test::random_perm(rng, g.order()));
    EXPECT_EQ(canonical_form(g), canonical_form(h));
  }
  EXPECT_NE(canonical_form(disjoint_union(cycle_graph(6), cycle_graph(6))),
            canonical_form(disjoint_union(cycle_graph(5), cycle_graph(7))));
}

TEST(Canonical, TreeAndUnicyclicCodes) {
  std::mt19937_64 rng(3);
  for (int n = 3; n <= 10; ++n) {
    std::set<std::string> forms;
    auto graphs = all_unicyclic(n);
    for (const auto& g : graphs) {
      forms.insert(canonical_form(g));
      EXPECT_EQ(canonical_form(relabel(g, test::random_perm(rng, n))), canonical_form(g));
    }
    EXPECT_EQ(forms.size(), graphs.size());
  }
  for (const auto& t : all_trees(12))
    EXPECT_EQ(canonical_form(relabel(t, test::random_perm(rng, 12))), canonical_form(t));
}

TEST(Canonical, OrderlyGraphsAreMaxString) {
  for (const auto& g : all_graphs(6)) EXPECT_TRUE(is_max_string(g));
  EXPECT_FALSE(is_max_string(Graph(3, {{1, 2}})));
  EXPECT_TRUE(is_max_string(Graph(3, {{0, 1}})));
}
