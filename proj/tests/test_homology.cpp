#include <catch_amalgamated.hpp>

#include <random>

#include "indcore/homology.hpp"
#include "indcore/sweeps.hpp"
#include "oracles.hpp"

using namespace indcore;

using Facets = std::vector<Face>;
using Betti = std::vector<std::size_t>;

TEST_CASE("signature algebra", "[homology]") {
  CHECK(HomotopySignature::point().contractible());
  CHECK(HomotopySignature::sphere(-1).betti == Betti{1});
  CHECK(HomotopySignature::sphere(2).betti == Betti{0, 0, 0, 1});
  CHECK(HomotopySignature::sphere(2).single_sphere() == 2);
  CHECK(suspend(HomotopySignature::sphere(-1)) == HomotopySignature::sphere(0));
  CHECK(suspend(HomotopySignature::point()).contractible());
  auto two = wedge(HomotopySignature::sphere(1), HomotopySignature::sphere(1));
  CHECK(two.from_dimension_zero() == Betti{0, 2});
  CHECK(two.total() == 2);
  CHECK_FALSE(two.single_sphere());
  CHECK(wedge(two, HomotopySignature::point()) == two);
  CHECK_THROWS(wedge(HomotopySignature::sphere(-1), two));
  CHECK(describe(HomotopySignature::point()) == "point");
  CHECK(describe(two) == "S^1 v S^1");
  CHECK(describe(HomotopySignature::sphere(-1)) == "S^-1");
  CHECK(HomotopySignature::from_ranks({0, 0, 0}).contractible());
}

TEST_CASE("reduced Betti numbers of named complexes", "[homology]") {
  CHECK(reduced_betti(clique_complex(cycle_graph(4))).from_dimension_zero() == Betti{0, 1});
  CHECK(reduced_betti(independence_complex(complete_graph(4))).from_dimension_zero() == Betti{3});
  const Graph chain(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {5, 6}});
  CHECK(reduced_betti(independence_complex(chain)).from_dimension_zero() == Betti{0, 2});
  CHECK(reduced_betti(SimplicialComplex::empty_complex()) == HomotopySignature::sphere(-1));
  CHECK(reduced_betti(SimplicialComplex::void_complex()).contractible());
  CHECK(reduced_betti(SimplicialComplex(Facets{{0, 1, 2}})).contractible());
  // Torus-free sanity: the octahedron boundary is S^2.
  CHECK(reduced_betti(cross_polytope_boundary(3)) == HomotopySignature::sphere(2));
}

TEST_CASE("cross-polytope suspension shift", "[homology]") {
  for (std::size_t k = 0; k < 6; ++k)
    CHECK(reduced_betti(cross_polytope_boundary(k + 1)) == suspend(reduced_betti(cross_polytope_boundary(k))));
}

TEST_CASE("odd characteristic", "[homology]") {
  HomologyOptions gf3{3};
  CHECK(reduced_betti(cross_polytope_boundary(3), gf3) == HomotopySignature::sphere(2));
  CHECK_THROWS_AS(reduced_betti(cross_polytope_boundary(1), HomologyOptions{4}), PreconditionFailed);
  // Minimal triangulation of the real projective plane: torsion in
  // dimension 1 is visible over GF(2) only.
  const SimplicialComplex rp2(Facets{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                     {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
  CHECK(reduced_betti(rp2).from_dimension_zero() == Betti{0, 1, 1});
  CHECK(reduced_betti(rp2, gf3).contractible());
  std::mt19937_64 rng(15);
  for (int i = 0; i < 150; ++i) {
    auto g = random_chordal(1 + rng() % 10, 0.5, rng()).graph;
    auto k = independence_complex(g);
    REQUIRE(reduced_betti(k) == reduced_betti(k, gf3));
  }
}

TEST_CASE("limits", "[homology]") {
  CHECK_THROWS_AS(reduced_betti(independence_complex(edgeless_graph(22))), LimitExceeded);
  CHECK_THROWS_AS(reduced_betti(independence_complex(edgeless_graph(8)), HomologyOptions{2, 100}), LimitExceeded);
  CHECK_THROWS_AS(reduced_betti(independence_complex(complete_graph(65))), LimitExceeded);
}

TEST_CASE("reduced Betti numbers match dense elimination", "[homology]") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    auto g = random_graph(rng() % 10, static_cast<double>(rng() % 100) / 100.0, rng());
    REQUIRE(reduced_betti(independence_complex(g)).betti == oracle::reduced_betti_ind(g));
  }
}

TEST_CASE("peeling wedge recursion", "[homology]") {
  CHECK(wedge_decomposition(path_graph(2)) == HomotopySignature::sphere(0));
  CHECK(wedge_decomposition(path_graph(3)).from_dimension_zero() == Betti{1});
  CHECK(wedge_decomposition(Graph(0)) == HomotopySignature::sphere(-1));
  CHECK(wedge_decomposition(Graph(3, {{0, 1}})).contractible());
  CHECK_THROWS_AS(wedge_decomposition(cycle_graph(5)), NotChordal);
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    auto g = random_chordal(1 + rng() % 14, 0.5, rng()).graph;
    REQUIRE(wedge_decomposition(g) == reduced_betti(independence_complex(g)));
  }
}

TEST_CASE("simplicial wedge formula", "[homology]") {
  CHECK(wedge_via_simplicial(path_graph(3), 0) == HomotopySignature::sphere(0));
  const auto star = star_graph(3);
  CHECK(wedge_via_simplicial(star, 1).from_dimension_zero() == Betti{1});
  CHECK(wedge_via_simplicial(star, 1) == reduced_betti(independence_complex(star)));
  CHECK_THROWS_AS(wedge_via_simplicial(star, 0), PreconditionFailed);
  CHECK_THROWS_AS(wedge_via_simplicial(Graph(2), 0), PreconditionFailed);
  CHECK_THROWS_AS(wedge_via_simplicial(cycle_graph(4), 0), NotChordal);
  std::mt19937_64 rng(37);
  for (int i = 0; i < 200; ++i) {
    auto g = random_chordal(2 + rng() % 14, 0.5, rng()).graph;
    const auto expected = wedge_decomposition(g);
    for (Vertex v : simplicial_vertices(g))
      if (g.degree(v) > 0) REQUIRE(wedge_via_simplicial(g, v) == expected);
  }
}

TEST_CASE("dismantling preserves the signature", "[homology]") {
  enumerate_chordal(6, [](const Graph& g) {
    const auto core = compute_core(g).core;
    REQUIRE(reduced_betti(independence_complex(g)) == reduced_betti(independence_complex(core)));
  });
}
