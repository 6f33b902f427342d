#include <catch_amalgamated.hpp>

#include <random>

#include "indcore/decide.hpp"
#include "indcore/dismantle.hpp"
#include "indcore/sweeps.hpp"
#include "oracles.hpp"

using namespace indcore;

TEST_CASE("cores of small graphs", "[dismantle]") {
  auto single = compute_core(Graph(1));
  CHECK(single.steps.empty());
  CHECK(single.core.order() == 1);
  CHECK(single.core_labels == std::vector<Vertex>{0});

  auto p3 = compute_core(path_graph(3));
  REQUIRE(p3.steps.size() == 1);
  CHECK(p3.steps[0].removed != 1);
  CHECK(p3.steps[0].witness != 1);
  CHECK(is_matching(p3.core) == 1);

  auto p4 = compute_core(path_graph(4));
  CHECK(p4.steps.size() == 3);
  CHECK(p4.core.order() == 1);
  CHECK(reduced_betti(independence_complex(path_graph(4))).contractible());

  // Lexicographic policy: smallest removed vertex, then smallest witness.
  CHECK(p4.steps[0] == DismantleStep{1, 3});
  CHECK(compute_core(Graph(0)).core.order() == 0);
}

TEST_CASE("certificates round-trip", "[dismantle]") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    const auto g = i % 2 ? random_chordal(1 + rng() % 30, 0.5, rng()).graph : random_graph(1 + rng() % 12, 0.4, rng());
    for (auto policy : {DismantlePolicy::lexicographic(), DismantlePolicy::seeded(rng())}) {
      auto cert = compute_core(g, policy);
      auto check = verify_certificate(g, cert);
      INFO(edge_string(g) << ": " << check.reason);
      REQUIRE(check);
      REQUIRE_FALSE(oracle::has_good_pair(cert.core));
    }
  }
}

TEST_CASE("tampered certificates are rejected", "[dismantle]") {
  const auto g = path_graph(4);
  const auto cert = compute_core(g);

  auto witness = cert;
  witness.steps[0].witness = 0;
  auto c1 = verify_certificate(g, witness);
  CHECK_FALSE(c1);
  CHECK(c1.failed_step == 0);

  auto truncated = cert;
  truncated.steps.pop_back();
  CHECK_FALSE(verify_certificate(g, truncated));

  // Truncated with a matching core: the core still has a good pair.
  VertexSet alive = g.vertices();
  for (const auto& s : truncated.steps) alive.reset(s.removed);
  auto sub = induced_subgraph(g, alive);
  truncated.core = sub.graph;
  truncated.core_labels = sub.labels;
  auto c2 = verify_certificate(g, truncated);
  CHECK_FALSE(c2);
  CHECK(c2.failed_step == truncated.steps.size());

  auto out_of_range = cert;
  out_of_range.steps[0].removed = 17;
  CHECK_FALSE(verify_certificate(g, out_of_range));

  auto repeated = cert;
  repeated.steps[1] = repeated.steps[0];
  CHECK_FALSE(verify_certificate(g, repeated));
}

TEST_CASE("certificate mutants", "[dismantle]") {
  auto r = certificate_sweep(20, 20, 5);
  INFO((r.notes.empty() ? std::string() : r.notes.front()));
  CHECK(r.passed());
}

TEST_CASE("tautness", "[dismantle]") {
  for (std::size_t k = 1; k <= 4; ++k) CHECK(is_taut(matching_graph(k)));
  CHECK(is_taut(disjoint_union(complete_graph(3), complete_graph(2))));
  CHECK_FALSE(is_taut(path_graph(3)));
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    auto g = random_graph(1 + rng() % 8, 0.5, rng());
    REQUIRE(is_taut(g) == !oracle::has_good_pair(g));
  }
}

TEST_CASE("contractibility decisions", "[dismantle]") {
  CHECK(is_contractible_chordal(path_graph(4)));
  CHECK_FALSE(is_contractible_chordal(path_graph(3)));
  CHECK_FALSE(is_contractible_chordal(Graph(0)));
  CHECK(is_contractible_chordal(Graph(1)));
  CHECK_THROWS_AS(is_contractible_chordal(cycle_graph(4)), NotChordal);
  std::mt19937_64 rng(47);
  for (int i = 0; i < 300; ++i) {
    auto g = random_chordal(rng() % 20, static_cast<double>(rng() % 10) / 10.0, rng()).graph;
    REQUIRE(is_contractible_by_components(g) == is_contractible_chordal(g));
    if (g.order() <= 14) REQUIRE(is_contractible_chordal(g) == reduced_betti(independence_complex(g)).contractible());
  }
}

TEST_CASE("sphere classification", "[dismantle]") {
  auto m3 = classify_sphere_chordal(matching_graph(3));
  CHECK(m3.kind == SphereClassification::Kind::sphere);
  CHECK(m3.k == 3);
  auto p5 = classify_sphere_chordal(path_graph(5));
  CHECK(p5.kind == SphereClassification::Kind::sphere);
  CHECK(p5.k == 2);
  CHECK(reduced_betti(independence_complex(path_graph(5))).from_dimension_zero() == std::vector<std::size_t>{0, 1});
  const auto chain = Graph(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {5, 6}});
  auto other = classify_sphere_chordal(chain);
  CHECK(other.kind == SphereClassification::Kind::other);
  CHECK(other.core_size == 7);
  auto empty = classify_sphere_chordal(Graph(0));
  CHECK(empty.kind == SphereClassification::Kind::sphere);
  CHECK(empty.k == 0);
  CHECK(classify_sphere_chordal(Graph(1)).kind == SphereClassification::Kind::contractible);
  CHECK_THROWS_AS(classify_sphere_chordal(cycle_graph(5)), NotChordal);
}

TEST_CASE("confluence of cores", "[dismantle]") {
  auto r = confluence_sweep(60, 25, 5, 3);
  INFO(r.notes.front());
  CHECK(r.passed());
}

TEST_CASE("decision reports", "[dismantle]") {
  auto k1 = decide(Graph(1));
  CHECK(k1.chordal);
  CHECK(k1.label() == "contractible");
  CHECK(k1.certificate->steps.empty());
  CHECK(k1.dismantlable());

  auto c4 = decide(cycle_graph(4));
  CHECK_FALSE(c4.chordal);
  CHECK(c4.label() == "unknown(non-chordal)");
  CHECK_FALSE(c4.certificate);

  DecideOptions unsafe;
  unsafe.unsafe = true;
  auto forced = decide(cycle_graph(4), unsafe);
  CHECK(forced.certificate);
  CHECK_FALSE(forced.classification);
  CHECK(forced.label() == "unknown(non-chordal)");

  DecideOptions with_oracle;
  with_oracle.oracle = true;
  const auto chain = Graph(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {5, 6}});
  auto r = decide(chain, with_oracle);
  CHECK(r.label() == "other");
  CHECK(r.betti->from_dimension_zero() == std::vector<std::size_t>{0, 2});
  auto big = decide(path_graph(40), with_oracle);
  CHECK_FALSE(big.betti);
  CHECK_FALSE(big.oracle_error.empty());

  auto large = random_chordal(1000, 0.5, 1);
  auto timed = decide(large.graph);
  REQUIRE(timed.certificate);
  CHECK(verify_certificate(large.graph, *timed.certificate));
  CHECK(timed.elapsed_ms > 0.0);
}
