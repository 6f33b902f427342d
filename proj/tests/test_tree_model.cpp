#include <catch_amalgamated.hpp>

#include <random>

#include "indcore/chordal.hpp"
#include "indcore/sweeps.hpp"
#include "indcore/tr_good.hpp"
#include "indcore/tree_model.hpp"

using namespace indcore;

namespace {

TreeModel model(std::vector<std::vector<Vertex>> bags, std::vector<std::pair<NodeId, NodeId>> edges) {
  TreeModel t;
  t.bags = std::move(bags);
  t.edges = std::move(edges);
  return t;
}

}  // namespace

TEST_CASE("tree model validation", "[tree_model]") {
  const auto p3 = path_graph(3);
  CHECK(validate_tree_model(model({{0, 1}, {1, 2}}, {{0, 1}}), p3));

  const Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  auto missing_edge = validate_tree_model(model({{0, 1}, {1, 2}}, {{0, 1}}), triangle);
  CHECK_FALSE(missing_edge);
  CHECK_FALSE(missing_edge.diagnostic.empty());

  CHECK_FALSE(validate_tree_model(model({{0, 1}, {2}, {1}}, {{0, 1}, {1, 2}}), p3));
  // Not a tree: a cycle, or too few edges.
  CHECK_FALSE(validate_tree_model(model({{0, 1}, {1, 2}, {1}}, {{0, 1}, {1, 2}, {2, 0}}), p3));
  CHECK_FALSE(validate_tree_model(model({{0, 1}, {1, 2}}, {}), p3));
  // A vertex in no bag, an out-of-range member, a vertex outside `within`.
  CHECK_FALSE(validate_tree_model(model({{0, 1}}, {}), p3));
  CHECK_FALSE(validate_tree_model(model({{0, 1}, {1, 2, 7}}, {{0, 1}}), p3));
  CHECK_FALSE(validate_tree_model(model({{0, 1}, {1, 2}}, {{0, 1}}), p3, VertexSet(3, {0, 1})));
  // A model of a subgraph needs edges only inside `within`.
  CHECK(validate_tree_model(model({{0, 1}, {}}, {{0, 1}}), p3, VertexSet(3, {0, 1})));
}

TEST_CASE("restriction", "[tree_model]") {
  const auto p4 = path_graph(4);
  const auto t = clique_tree(p4);
  auto none = restrict(t, VertexSet(4));
  CHECK(none.edges == t.edges);
  for (const auto& bag : none.bags) CHECK(bag.empty());
  CHECK(restrict(t, p4.vertices()) == t);

  const auto w = VertexSet(4, {0, 1, 3});
  auto r = restrict(t, w);
  CHECK(r.bags == std::vector<std::vector<Vertex>>{{0, 1}, {1}, {3}});
  auto sub = induced_subgraph(p4, w);
  CHECK(sub.graph == Graph(3, {{0, 1}}));
  CHECK(validate_tree_model(relabel(r, sub.labels), sub.graph));
  CHECK(validate_tree_model(r, p4, w));
}

TEST_CASE("contraction", "[tree_model]") {
  const auto p3 = path_graph(3);
  auto c = contract(model({{0, 1}, {1, 2}}, {{0, 1}}), 1, p3);
  CHECK(c.model.node_count() == 1);
  CHECK(c.model.bags[0].empty());
  CHECK(c.root == 0);
  CHECK(validate_tree_model(c.model, p3, VertexSet(3)));

  const auto p5 = path_graph(5);
  auto d = contract(clique_tree(p5), 0, p5);
  CHECK(d.model.bags[d.root].empty());
  const auto rest = VertexSet(5, {2, 3, 4});
  CHECK(validate_tree_model(d.model, p5, rest));
  for (NodeId a = 0; a < d.model.node_count(); ++a)
    for (Vertex v : d.model.bags[a]) CHECK(rest.test(v));

  CHECK_THROWS_AS(contract(model({{0}}, {}), 1, Graph(2)), PreconditionFailed);

  std::mt19937_64 rng(12);
  for (int i = 0; i < 500; ++i) {
    auto s = random_chordal(1 + rng() % 20, 0.5, rng());
    const Vertex u = static_cast<Vertex>(rng() % s.graph.order());
    auto k = contract(s.model, u, s.graph);
    const auto left = s.graph.vertices() - closed_neighborhood(s.graph, u);
    auto check = validate_tree_model(k.model, s.graph, left);
    INFO(edge_string(s.graph) << " u=" << u << ": " << check.diagnostic);
    REQUIRE(check);
    REQUIRE(k.model.bags[k.root].empty());
  }
}

TEST_CASE("relabeling", "[tree_model]") {
  auto t = model({{2, 5}, {5}}, {{0, 1}});
  const std::vector<Vertex> labels{5, 2};
  auto r = relabel(t, labels);
  CHECK(r.bags == std::vector<std::vector<Vertex>>{{0, 1}, {0}});
  const std::vector<Vertex> partial{5};
  CHECK_THROWS_AS(relabel(t, partial), InvalidVertex);
}

TEST_CASE("minimum depth", "[tree_model]") {
  const RootedTreeModel t{clique_tree(path_graph(4)), 0};
  REQUIRE(t.model.bags[0] == std::vector<Vertex>{0, 1});
  CHECK(min_depth(t, 0) == 0);
  CHECK(min_depth(t, 1) == 0);
  CHECK(min_depth(t, 2) == 1);
  CHECK(min_depth(t, 3) == 2);
  CHECK_THROWS_AS(min_depth(t, 9), PreconditionFailed);
}

TEST_CASE("rooted good pairs", "[tree_model]") {
  const auto p4 = path_graph(4);
  const auto tree = clique_tree(p4);
  const RootedTreeModel at01{tree, 0}, at23{tree, 2};
  REQUIRE(tree.bags[2] == std::vector<Vertex>{2, 3});
  CHECK(is_tr_good(at01, p4, 3, 1));
  CHECK(is_tr_good(at23, p4, 0, 2));
  CHECK_FALSE(is_tr_good(at23, p4, 3, 1));
  CHECK_FALSE(is_tr_good(at01, p4, 0, 2));
  for (Vertex x = 0; x < 4; ++x)
    for (Vertex y = 0; y < 4; ++y)
      if (!is_good_pair(p4, x, y)) CHECK_FALSE(is_tr_good(at01, p4, x, y));
}

TEST_CASE("finding rooted good pairs", "[tree_model]") {
  const auto p4 = path_graph(4);
  const auto tree = clique_tree(p4);
  for (NodeId root = 0; root < tree.node_count(); ++root) {
    const RootedTreeModel t{tree, root};
    auto pair = find_tr_good_pair(p4, t);
    CHECK(is_tr_good(t, p4, pair.x, pair.y));
  }
  CHECK_THROWS_AS(find_tr_good_pair(Graph(1), RootedTreeModel{clique_tree(Graph(1)), 0}), PreconditionFailed);
  CHECK_THROWS_AS(find_tr_good_pair(path_graph(3), RootedTreeModel{clique_tree(path_graph(3)), 0}),
                  PreconditionFailed);
  CHECK_THROWS_AS(find_tr_good_pair(p4, RootedTreeModel{tree, 7}), PreconditionFailed);
  CHECK_THROWS_AS(find_tr_good_pair(cycle_graph(4), RootedTreeModel{model({{0, 1, 2, 3}}, {}), 0}), NotChordal);

  // Larger inputs, any model and root.
  std::mt19937_64 rng(19);
  std::size_t tried = 0;
  while (tried < 200) {
    auto s = random_chordal(2 + rng() % 30, 0.5, rng());
    if (!is_connected(s.graph) || !is_dismantlable(s.graph)) continue;
    ++tried;
    for (NodeId root = 0; root < s.model.node_count(); ++root) {
      const RootedTreeModel t{s.model, root};
      auto pair = find_tr_good_pair(s.graph, t);
      INFO(edge_string(s.graph) << " root " << root);
      REQUIRE(is_tr_good(t, s.graph, pair.x, pair.y));
    }
  }
}
