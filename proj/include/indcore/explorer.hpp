#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "indcore/chordal.hpp"
#include "indcore/complex.hpp"
#include "indcore/dismantle.hpp"
#include "indcore/homology.hpp"

namespace indcore {

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// k3_k2, triangle_chain_7, matchings m1..m4 and paths p2..p7 (p<k> has k
/// vertices).
inline std::vector<NamedGraph> builtin_fixtures() {
  std::vector<NamedGraph> out;
  out.push_back({"k3_k2", disjoint_union(complete_graph(3), complete_graph(2))});
  out.push_back({"triangle_chain_7",
                 Graph(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {5, 6}})});
  for (std::size_t k = 1; k <= 4; ++k) out.push_back({"m" + std::to_string(k), matching_graph(k)});
  for (std::size_t n = 2; n <= 7; ++n) out.push_back({"p" + std::to_string(n), path_graph(n)});
  return out;
}

inline Graph fixture(const std::string& name) {
  for (auto& f : builtin_fixtures())
    if (f.name == name) return std::move(f.graph);
  throw PreconditionFailed("unknown fixture '" + name + "'");
}

struct IsoClass {
  Graph representative;
  std::size_t labeled_count = 0;
};

struct CatalogEntry {
  HomotopySignature signature;
  std::size_t labeled_count = 0;
  std::vector<IsoClass> classes;  ///< sorted by (order, size)
};

struct TautCatalog {
  std::size_t n_max = 0;
  std::vector<std::size_t> chordal_counts;  ///< per vertex count
  std::vector<CatalogEntry> entries;        ///< sorted by signature
};

inline constexpr std::size_t kCatalogLimit = 8;

namespace detail {

struct CatalogBuilder {
  std::map<HomotopySignature, CatalogEntry> entries;

  void add(const Graph& g, const HomotopySignature& sig, std::size_t count = 1) {
    auto& e = entries[sig];
    e.signature = sig;
    e.labeled_count += count;
    const auto fp = fingerprint(g);
    for (auto& c : e.classes)
      if (fingerprint(c.representative) == fp && are_isomorphic(c.representative, g)) {
        c.labeled_count += count;
        // Smallest edge list represents the class, whatever the arrival order.
        if (g.edges() < c.representative.edges()) c.representative = g;
        return;
      }
    e.classes.push_back({g, count});
  }

  void merge(const CatalogBuilder& other) {
    for (const auto& [sig, e] : other.entries)
      for (const auto& c : e.classes) add(c.representative, sig, c.labeled_count);
  }
};

}  // namespace detail

/// Every labeled chordal graph on at most n_max vertices with no good pair,
/// grouped by the oracle signature of Ind(G) and then by isomorphism class.
inline TautCatalog taut_catalog(std::size_t n_max, unsigned jobs = 1) {
  if (n_max > kCatalogLimit) throw LimitExceeded("taut catalog is limited to n <= 8");
  jobs = std::max(1u, jobs);
  std::vector<detail::CatalogBuilder> parts(jobs);
  TautCatalog cat;
  cat.n_max = n_max;
  cat.chordal_counts = enumerate_chordal_parallel(n_max, jobs, [&](const Graph& g, unsigned worker) {
    if (!is_taut(g)) return;
    parts[worker].add(g, reduced_betti(independence_complex(g)));
  });
  for (std::size_t i = 1; i < parts.size(); ++i) parts[0].merge(parts[i]);
  for (auto& [sig, e] : parts[0].entries) {
    std::sort(e.classes.begin(), e.classes.end(), [](const IsoClass& a, const IsoClass& b) {
      if (a.representative.order() != b.representative.order())
        return a.representative.order() < b.representative.order();
      if (a.representative.size() != b.representative.size())
        return a.representative.size() < b.representative.size();
      return a.representative.edges() < b.representative.edges();
    });
    cat.entries.push_back(std::move(e));
  }
  return cat;
}

struct ForestReport {
  std::size_t trials = 0;
  std::map<std::string, std::size_t> outcomes;  ///< "K1", "M1", "M2", ...
  std::vector<Graph> violations;
};

/// Random forests with 1..n_max vertices; every core must be K_1 or some M_k.
inline ForestReport forest_core_check(std::size_t trials, std::size_t n_max, std::uint64_t seed) {
  if (n_max == 0) throw PreconditionFailed("forests need at least one vertex");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, n_max);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  ForestReport report;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto n = size(rng);
    const auto p = density(rng);
    const Graph f = random_forest(n, p, rng());
    const auto core = compute_core(f).core;
    if (core.order() == 1) {
      ++report.outcomes["K1"];
    } else if (auto k = is_matching(core); k && *k >= 1) {
      ++report.outcomes["M" + std::to_string(*k)];
    } else {
      report.violations.push_back(f);
    }
  }
  return report;
}

struct S0WedgeEntry {
  std::size_t m = 0;  ///< signature is a wedge of m copies of S^0
  std::size_t labeled_count = 0;
  std::vector<IsoClass> classes;
};

/// Taut chordal graphs whose Ind is a point or a wedge of 0-spheres.
inline std::vector<S0WedgeEntry> s0_wedge_check(const TautCatalog& cat) {
  std::vector<S0WedgeEntry> out;
  for (const auto& e : cat.entries) {
    const auto& b = e.signature.betti;
    const bool concentrated = b.empty() || (b.size() == 2 && b[0] == 0);
    if (!concentrated) continue;
    out.push_back({e.signature.at(0), e.labeled_count, e.classes});
  }
  std::sort(out.begin(), out.end(), [](const S0WedgeEntry& a, const S0WedgeEntry& b) { return a.m < b.m; });
  return out;
}

inline std::vector<S0WedgeEntry> s0_wedge_check(std::size_t n_max, unsigned jobs = 1) {
  return s0_wedge_check(taut_catalog(n_max, jobs));
}

}  // namespace indcore
