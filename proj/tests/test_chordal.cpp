#include <catch_amalgamated.hpp>

#include <random>

#include "indcore/chordal.hpp"
#include "indcore/sweeps.hpp"
#include "oracles.hpp"

using namespace indcore;

namespace {

VertexSet vs(std::size_t n, std::initializer_list<Vertex> members) { return VertexSet::from_range(n, members); }

bool is_permutation_of_vertices(const std::vector<Vertex>& order, std::size_t n) {
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (Vertex v = 0; v < n; ++v)
    if (sorted.size() != n || sorted[v] != v) return false;
  return true;
}

}  // namespace

TEST_CASE("maximum cardinality search", "[chordal]") {
  const auto k3 = mcs_order(complete_graph(3));
  CHECK(k3 == mcs_order(complete_graph(3)));
  CHECK(is_permutation_of_vertices(k3, 3));
  CHECK(mcs_order(edgeless_graph(4)) == std::vector<Vertex>{0, 1, 2, 3});
  const auto p4 = path_graph(4);
  auto order = mcs_order(p4);
  std::vector<Vertex> peo(order.rbegin(), order.rend());
  CHECK(is_perfect_elimination_ordering(p4, peo));
  CHECK(mcs_order(Graph(0)).empty());
}

TEST_CASE("perfect elimination orderings", "[chordal]") {
  const auto p4 = path_graph(4);
  const std::vector<Vertex> good{0, 1, 2, 3};
  const std::vector<Vertex> bad{1, 0, 2, 3};
  CHECK(is_perfect_elimination_ordering(p4, good));
  CHECK_FALSE(is_perfect_elimination_ordering(p4, bad));
  const std::vector<Vertex> short_order{0, 1};
  CHECK_FALSE(is_perfect_elimination_ordering(p4, short_order));
}

TEST_CASE("chordality on named graphs", "[chordal]") {
  CHECK_FALSE(is_chordal(cycle_graph(4)));
  CHECK_FALSE(is_chordal(cycle_graph(7)));
  CHECK(is_chordal(cycle_graph(3)));
  CHECK(is_chordal(Graph(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {5, 6}})));
  CHECK(is_chordal(Graph(0)));
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) CHECK(is_chordal(random_forest(1 + rng() % 40, 0.8, rng())));
}

TEST_CASE("chordality agrees with the induced-cycle definition", "[chordal]") {
  for (std::size_t n = 0; n <= 6; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      auto g = detail::graph_from_edge_mask(n, mask);
      REQUIRE(is_chordal(g) == oracle::chordal(g));
    }
  }
}

TEST_CASE("simplicial and peeling vertices", "[chordal]") {
  const auto p4 = path_graph(4);
  CHECK(simplicial_vertices(p4) == vs(4, {0, 3}));
  CHECK(simplicial_vertices(complete_graph(5)) == VertexSet::full(5));
  CHECK(peeling_vertices(p4) == vs(4, {1, 2}));
  CHECK(peeling_vertices(path_graph(2)) == vs(2, {0, 1}));
  CHECK(is_clique(complete_graph(4), VertexSet::full(4)));
  CHECK_FALSE(is_clique(p4, vs(4, {0, 2})));

  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    auto g = random_chordal(1 + rng() % 25, 0.5, rng()).graph;
    REQUIRE(simplicial_vertices(g).any());
    if (g.size() > 0) REQUIRE(peeling_vertices(g).any());
  }
}

TEST_CASE("clique trees", "[chordal]") {
  auto p4 = clique_tree(path_graph(4));
  CHECK(p4.bags == std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(p4.edges.size() == 2);
  CHECK(validate_tree_model(p4, path_graph(4)));

  CHECK(clique_tree(complete_graph(3)).bags == std::vector<std::vector<Vertex>>{{0, 1, 2}});

  const auto k3k2 = disjoint_union(complete_graph(3), complete_graph(2));
  auto split = clique_tree(k3k2);
  CHECK(split.bags == std::vector<std::vector<Vertex>>{{0, 1, 2}, {3, 4}, {}});
  CHECK(validate_tree_model(split, k3k2));

  auto empty = clique_tree(Graph(0));
  CHECK(empty.node_count() == 1);
  CHECK(empty.bags[0].empty());
  CHECK_THROWS_AS(clique_tree(cycle_graph(5)), NotChordal);

  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    auto g = random_chordal(1 + rng() % 30, 0.4, rng()).graph;
    auto t = clique_tree(g);
    auto check = validate_tree_model(t, g);
    INFO(edge_string(g) << ": " << check.diagnostic);
    REQUIRE(check);
    for (const auto& bag : t.bags)
      if (!bag.empty()) REQUIRE(is_clique(g, VertexSet::from_range(g.order(), bag)));
  }
}

TEST_CASE("clique tree bags are exactly the maximal cliques", "[chordal]") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    auto g = random_chordal(1 + rng() % 9, 0.5, rng()).graph;
    std::vector<std::vector<Vertex>> bags;
    for (const auto& b : clique_tree(g).bags)
      if (!b.empty()) bags.push_back(b);
    std::sort(bags.begin(), bags.end());
    REQUIRE(bags == oracle::maximal_independent_sets(complement(g)));
  }
}

TEST_CASE("random chordal generator", "[chordal]") {
  auto zero = random_chordal(0, 0.5, 1);
  CHECK(zero.graph.order() == 0);
  CHECK(zero.model.node_count() == 1);
  CHECK(zero.model.bags[0].empty());
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto n = static_cast<std::size_t>(seed % 40);
    auto s = random_chordal(n, static_cast<double>(seed % 10) / 10.0, seed);
    REQUIRE(s.graph.order() == n);
    REQUIRE(is_chordal(s.graph));
    REQUIRE(validate_tree_model(s.model, s.graph));
  }
  CHECK(random_chordal(30, 0.5, 77).graph == random_chordal(30, 0.5, 77).graph);
}

TEST_CASE("chordal enumeration counts", "[chordal]") {
  std::size_t visited = 0;
  auto counts = enumerate_chordal(6, [&](const Graph&) { ++visited; });
  const std::vector<std::size_t> known{1, 1, 2, 8, 61, 822, 18154};
  CHECK(counts == known);
  CHECK(visited == std::accumulate(known.begin(), known.end(), std::size_t{0}));
  for (std::size_t n = 0; n <= 5; ++n) CHECK(oracle::count_chordal(n) == known[n]);
  CHECK_THROWS_AS(enumerate_chordal(10, [](const Graph&) {}), LimitExceeded);
}

TEST_CASE("parallel enumeration matches the serial one", "[chordal]") {
  std::vector<std::size_t> per_worker(3, 0);
  auto counts = enumerate_chordal_parallel(6, 3, [&](const Graph& g, unsigned w) {
    per_worker[w] += 1;
    (void)g;
  });
  CHECK(counts == enumerate_chordal(6, [](const Graph&) {}));
  CHECK(per_worker[0] + per_worker[1] + per_worker[2] == 1 + 1 + 2 + 8 + 61 + 822 + 18154);
}

TEST_CASE("enumerated graphs are distinct and chordal", "[chordal]") {
  std::set<std::vector<Edge>> seen;
  std::size_t total = 0;
  enumerate_chordal(5, [&](const Graph& g) {
    if (g.order() != 5) return;
    ++total;
    REQUIRE(oracle::chordal(g));
    seen.insert(g.edges());
  });
  CHECK(total == 822);
  CHECK(seen.size() == 822);
}
