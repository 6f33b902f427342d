#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <random>
#include <string>
#include <vector>

#include "indcore/chordal.hpp"
#include "indcore/complex.hpp"
#include "indcore/decide.hpp"
#include "indcore/dismantle.hpp"
#include "indcore/explorer.hpp"
#include "indcore/homology.hpp"
#include "indcore/tr_good.hpp"

// Exhaustive and randomized verification suites. Each returns a
// SweepResult; a suite passes when it checked at least one case and found
// no failure.

namespace indcore {

struct SweepResult {
  SweepResult(std::string id_, std::string title_) : id(std::move(id_)), title(std::move(title_)) {}

  std::string id;
  std::string title;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string tolerance = "zero failures";
  std::vector<std::string> notes;  ///< counterexamples first, then remarks

  bool passed() const noexcept { return failures == 0 && cases > 0; }

  void fail(std::string why) {
    ++failures;
    if (notes.size() < 10) notes.push_back(std::move(why));
  }
  void merge_counts(const SweepResult& o) {
    cases += o.cases;
    failures += o.failures;
    for (const auto& n : o.notes)
      if (notes.size() < 10) notes.push_back(n);
  }
};

inline std::string edge_string(const Graph& g) {
  std::string s = "n=" + std::to_string(g.order()) + " {";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    s += (first ? "" : ",") + std::to_string(u) + "-" + std::to_string(v);
    first = false;
  }
  return s + "}";
}

/// Results of the single exhaustive pass over labeled chordal graphs.
struct ChordalSweep {
  SweepResult contractible{"AC1", "contractible iff dismantlable (oracle)"};
  SweepResult sphere{"AC2", "single sphere iff matching core"};
  SweepResult rooted{"AC4", "rooted good pair for every clique-tree root"};
};

/// Which of the three exhaustive checks to run.
struct ChordalChecks {
  bool contractible = true;
  bool sphere = true;
  bool rooted = true;
};

namespace detail {

inline void check_against_oracle(const Graph& g, bool contractible, const ChordalChecks& want, ChordalSweep& out) {
  const auto sig = reduced_betti(independence_complex(g));
  if (want.contractible) {
    ++out.contractible.cases;
    if (contractible != sig.contractible())
      out.contractible.fail(edge_string(g) + ": dismantling says " + (contractible ? "point" : "not a point") +
                            ", oracle says " + describe(sig));
  }
  if (!want.sphere) return;
  const auto cls = classify_sphere_chordal(g);
  ++out.sphere.cases;
  const auto sphere_dim = sig.single_sphere();
  const bool cls_sphere = cls.kind == SphereClassification::Kind::sphere;
  if (cls_sphere != sphere_dim.has_value() ||
      (cls_sphere && static_cast<int>(cls.k) - 1 != *sphere_dim))
    out.sphere.fail(edge_string(g) + ": classification " + to_string(cls.kind) + "(" + std::to_string(cls.k) +
                    "), oracle " + describe(sig));
  if (sphere_dim && is_taut(g)) {
    auto k = is_matching(g);
    if (!k || static_cast<int>(*k) - 1 != *sphere_dim)
      out.sphere.fail(edge_string(g) + ": taut single-sphere graph is not a matching");
  }
}

inline void check_rooted(const Graph& g, bool contractible, ChordalSweep& out) {
  if (!contractible || g.order() < 2 || !is_connected(g)) return;
  const auto tree = clique_tree(g);
  const auto simplicial = simplicial_vertices(g);
  for (NodeId root = 0; root < tree.node_count(); ++root) {
    ++out.rooted.cases;
    const RootedTreeModel rooted{tree, root};
    try {
      const auto pair = find_tr_good_pair(g, rooted);
      if (!is_tr_good(rooted, g, pair.x, pair.y))
        out.rooted.fail(edge_string(g) + " root " + std::to_string(root) + ": pair (" + std::to_string(pair.x) + "," +
                        std::to_string(pair.y) + ") is not rooted-good");
      else if (!simplicial.test(pair.x))
        out.rooted.fail(edge_string(g) + ": witness " + std::to_string(pair.x) + " is not simplicial");
    } catch (const std::exception& e) {
      out.rooted.fail(edge_string(g) + " root " + std::to_string(root) + ": " + e.what());
    }
  }
}

inline void check_chordal_graph(const Graph& g, const ChordalChecks& want, ChordalSweep& out) {
  const bool contractible = is_contractible_chordal(g);
  if (want.contractible || want.sphere) check_against_oracle(g, contractible, want, out);
  if (want.rooted) check_rooted(g, contractible, out);
}

}  // namespace detail

/// Every labeled chordal graph on <= n_max vertices: dismantling decisions
/// against the homology oracle, and the rooted good-pair construction.
inline ChordalSweep chordal_sweep(std::size_t n_max, unsigned jobs = 1, ChordalChecks want = {}) {
  jobs = std::max(1u, jobs);
  std::vector<ChordalSweep> parts(jobs);
  enumerate_chordal_parallel(n_max, jobs, [&](const Graph& g, unsigned worker) {
    detail::check_chordal_graph(g, want, parts[worker]);
  });
  ChordalSweep out;
  const auto scope = ", chordal n <= " + std::to_string(n_max);
  out.contractible.title += scope;
  out.sphere.title += scope;
  out.rooted.title += scope;
  for (const auto& p : parts) {
    out.contractible.merge_counts(p.contractible);
    out.sphere.merge_counts(p.sphere);
    out.rooted.merge_counts(p.rooted);
  }
  return out;
}

/// Taut catalog: the only taut graph with contractible Ind is K_1.
inline SweepResult taut_point_sweep(const TautCatalog& cat) {
  SweepResult r{"AC3", "taut and contractible means a single vertex, n <= " + std::to_string(cat.n_max)};
  for (const auto& e : cat.entries) {
    r.cases += e.labeled_count;
    if (!e.signature.contractible()) continue;
    for (const auto& c : e.classes)
      if (c.representative.order() != 1)
        r.fail("taut contractible graph " + edge_string(c.representative));
  }
  return r;
}

/// Cores under different seeded policies are isomorphic.
inline SweepResult confluence_sweep(std::size_t graphs, std::size_t n_max, std::size_t policies,
                                    std::uint64_t seed) {
  SweepResult r{"AC5", "core confluence under seeded policies"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, n_max);
  std::uniform_real_distribution<double> fill(0.0, 0.9);
  std::size_t large = 0;
  for (std::size_t i = 0; i < graphs; ++i) {
    const auto sample = random_chordal(size(rng), fill(rng), rng());
    const auto reference = compute_core(sample.graph, DismantlePolicy::seeded(1)).core;
    for (std::size_t p = 2; p <= policies; ++p) {
      ++r.cases;
      const auto other = compute_core(sample.graph, DismantlePolicy::seeded(p)).core;
      if (reference.order() <= kIsomorphismLimit && other.order() <= kIsomorphismLimit) {
        if (!are_isomorphic(reference, other))
          r.fail(edge_string(sample.graph) + ": cores for seeds 1 and " + std::to_string(p) + " differ");
      } else {
        ++large;
        if (fingerprint(reference) != fingerprint(other))
          r.fail(edge_string(sample.graph) + ": large cores differ in invariants (flagged)");
      }
    }
  }
  r.notes.push_back(std::to_string(large) + " comparisons used invariants (core > 12 vertices)");
  return r;
}

inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// Link/deletion identities on random graphs; both wedge recursions against
/// the oracle on every chordal graph with <= n_max vertices.
inline SweepResult identity_sweep(std::size_t random_graphs, std::size_t n_max, std::uint64_t seed) {
  SweepResult r{"AC6", "link, deletion and wedge identities"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, 10);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (std::size_t i = 0; i < random_graphs; ++i) {
    const auto g = random_graph(size(rng), density(rng), rng());
    const auto ind = independence_complex(g);
    for (Vertex u = 0; u < g.order(); ++u) {
      ++r.cases;
      auto rest = g.vertices();
      rest.reset(u);
      const auto del = induced_subgraph(g, rest);
      if (delete_vertex(ind, u) != rename_vertices(independence_complex(del.graph), del.labels))
        r.fail(edge_string(g) + ": deletion identity fails at " + std::to_string(u));
      const auto lk = induced_subgraph(g, g.vertices() - closed_neighborhood(g, u));
      if (link(ind, u) != rename_vertices(independence_complex(lk.graph), lk.labels))
        r.fail(edge_string(g) + ": link identity fails at " + std::to_string(u));
    }
  }
  enumerate_chordal(n_max, [&](const Graph& g) {
    ++r.cases;
    const auto peeled = wedge_decomposition(g);
    if (peeled != reduced_betti(independence_complex(g)))
      r.fail(edge_string(g) + ": peeling recursion disagrees with the oracle");
    for (Vertex v : simplicial_vertices(g)) {
      if (g.degree(v) == 0) continue;
      ++r.cases;
      if (wedge_via_simplicial(g, v) != peeled)
        r.fail(edge_string(g) + ": simplicial wedge at " + std::to_string(v) + " disagrees");
    }
  });
  return r;
}

/// Every graph on <= n_max vertices: chordal iff each connected induced
/// subgraph is cop-win.
inline SweepResult cop_win_sweep(std::size_t n_max) {
  SweepResult r{"AC7", "chordal iff hereditarily cop-win"};
  if (n_max > 8) throw LimitExceeded("cop-win sweep is limited to n <= 8");
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = detail::graph_from_edge_mask(n, mask);
      ++r.cases;
      bool hereditary = true;
      for (std::uint64_t w = 1; w < (std::uint64_t{1} << n) && hereditary; ++w) {
        VertexSet within(n);
        for (Vertex v = 0; v < n; ++v)
          if ((w >> v) & 1u) within.set(v);
        if (is_connected(g, within) && !is_cop_win(g, within)) hereditary = false;
      }
      if (hereditary != is_chordal(g))
        r.fail(edge_string(g) + ": chordal=" + std::to_string(is_chordal(g)) +
               " hereditary cop-win=" + std::to_string(hereditary));
    }
  }
  return r;
}

/// The two taut S^1 v S^1 fixtures, plus forest cores.
inline SweepResult fixture_forest_sweep(std::size_t forests, std::size_t n_max, std::uint64_t seed) {
  SweepResult r{"AC8", "taut fixtures and forest cores"};
  const auto expected = wedge(HomotopySignature::sphere(1), HomotopySignature::sphere(1));
  for (const char* name : {"k3_k2", "triangle_chain_7"}) {
    ++r.cases;
    const auto g = fixture(name);
    if (!is_chordal(g)) r.fail(std::string(name) + " is not chordal");
    if (!is_taut(g)) r.fail(std::string(name) + " is not taut");
    if (auto sig = reduced_betti(independence_complex(g)); sig != expected)
      r.fail(std::string(name) + " has signature " + describe(sig));
  }
  const auto report = forest_core_check(forests, n_max, seed);
  r.cases += report.trials;
  for (const auto& f : report.violations) r.fail("forest core violation: " + edge_string(f));
  std::string dist;
  for (const auto& [k, c] : report.outcomes) dist += (dist.empty() ? "" : " ") + k + ":" + std::to_string(c);
  r.notes.push_back("forest cores " + dist);
  return r;
}

struct TimingPoint {
  std::size_t n = 0;
  std::size_t edges = 0;
  double seconds = 0.0;
};

/// decide() on random chordal graphs. The cubic constant is fitted on all
/// sizes but the largest, which must stay within `slack` times the
/// extrapolation and under `limit_seconds`.
inline SweepResult performance_sweep(const std::vector<std::size_t>& sizes, std::size_t repeats, double fill,
                                     std::uint64_t seed, double slack, double limit_seconds,
                                     std::vector<TimingPoint>* points_out = nullptr) {
  SweepResult r{"AC9", "cubic-time decision"};
  r.tolerance = "largest size <= " + std::to_string(slack).substr(0, 3) + "x cubic fit and < " +
                std::to_string(static_cast<int>(limit_seconds)) + " s";
  std::vector<TimingPoint> points;
  for (auto n : sizes) {
    const auto sample = random_chordal(n, fill, seed + n);
    std::vector<double> runs;
    for (std::size_t i = 0; i < repeats; ++i) {
      const auto start = std::chrono::steady_clock::now();
      const auto report = decide(sample.graph);
      runs.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
      if (!report.chordal || !report.certificate || !verify_certificate(sample.graph, *report.certificate))
        r.fail("n=" + std::to_string(n) + ": decision did not produce a valid certificate");
    }
    std::sort(runs.begin(), runs.end());
    points.push_back({n, sample.graph.size(), runs[runs.size() / 2]});
    ++r.cases;
  }
  if (points.size() >= 2) {
    double num = 0, den = 0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
      const double c = std::pow(static_cast<double>(points[i].n), 3);
      num += points[i].seconds * c;
      den += c * c;
    }
    const auto& last = points.back();
    const double predicted = num / den * std::pow(static_cast<double>(last.n), 3);
    if (last.seconds > slack * predicted)
      r.fail("n=" + std::to_string(last.n) + " took " + std::to_string(last.seconds) + " s, cubic fit predicts " +
             std::to_string(predicted) + " s");
    r.notes.push_back("cubic extrapolation for n=" + std::to_string(last.n) + ": " + std::to_string(predicted) + " s");
  }
  for (const auto& p : points) {
    if (p.seconds > limit_seconds) r.fail("n=" + std::to_string(p.n) + " exceeded the time limit");
    r.notes.push_back("n=" + std::to_string(p.n) + " m=" + std::to_string(p.edges) + " " +
                      std::to_string(p.seconds * 1000.0) + " ms");
  }
  if (points_out) *points_out = points;
  return r;
}

namespace detail {

// Certificate replay written against induced subgraphs and is_good_pair,
// independent of verify_certificate's bitset bookkeeping.
inline bool replay_accepts(const Graph& g, const DismantleCertificate& cert) {
  std::vector<Vertex> alive(g.order());
  std::iota(alive.begin(), alive.end(), 0);
  for (const auto& step : cert.steps) {
    auto y = std::find(alive.begin(), alive.end(), step.removed);
    auto x = std::find(alive.begin(), alive.end(), step.witness);
    if (y == alive.end() || x == alive.end() || x == y) return false;
    const auto sub = induced_subgraph(g, std::span<const Vertex>(alive));
    if (!is_good_pair(sub.graph, static_cast<Vertex>(x - alive.begin()), static_cast<Vertex>(y - alive.begin())))
      return false;
    alive.erase(y);
  }
  auto labels = cert.core_labels;
  std::sort(labels.begin(), labels.end());
  if (labels != alive || cert.core.order() != alive.size()) return false;
  for (Vertex i = 0; i < cert.core.order(); ++i)
    for (Vertex j = 0; j < cert.core.order(); ++j)
      if (i != j && cert.core.adjacent(i, j) != g.adjacent(cert.core_labels[i], cert.core_labels[j])) return false;
  return enumerate_good_pairs(cert.core).empty();
}

inline std::vector<DismantleCertificate> mutations(const Graph& g, const DismantleCertificate& cert) {
  std::vector<DismantleCertificate> out;
  const auto n = static_cast<Vertex>(g.order());
  const auto& steps = cert.steps;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    for (Vertex w = 0; w < n; ++w) {
      if (w == steps[i].witness) continue;
      auto m = cert;
      m.steps[i].witness = w;
      out.push_back(std::move(m));
      break;
    }
    if (i + 1 < steps.size()) {
      auto m = cert;
      std::swap(m.steps[i], m.steps[i + 1]);
      out.push_back(std::move(m));
    }
  }
  if (!steps.empty()) {
    auto truncated = cert;
    truncated.steps.pop_back();
    out.push_back(truncated);
    // Truncated, with the core patched to the replayed graph.
    VertexSet alive = g.vertices();
    for (const auto& s : truncated.steps) alive.reset(s.removed);
    auto sub = induced_subgraph(g, alive);
    truncated.core = std::move(sub.graph);
    truncated.core_labels = std::move(sub.labels);
    out.push_back(std::move(truncated));
    auto reversed = cert;
    std::reverse(reversed.steps.begin(), reversed.steps.end());
    out.push_back(std::move(reversed));
    auto repeated = cert;
    repeated.steps.push_back(steps.front());
    out.push_back(std::move(repeated));
  }
  if (cert.core.order() >= 2) {
    auto m = cert;
    std::swap(m.core_labels[0], m.core_labels[1]);
    out.push_back(std::move(m));
  }
  {
    auto m = cert;
    m.steps.push_back({n, 0});
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace detail

/// Produced certificates are accepted; `mutants` mutated ones are rejected.
/// Mutants are only counted once the independent replay confirms they are
/// invalid.
inline SweepResult certificate_sweep(std::size_t random_graphs, std::size_t mutants, std::uint64_t seed) {
  SweepResult r{"AC10", "certificate soundness"};
  r.tolerance = "100% correct accept/reject, " + std::to_string(mutants) + " mutants";
  std::vector<Graph> graphs;
  for (auto& f : builtin_fixtures()) graphs.push_back(std::move(f.graph));
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_graphs; ++i) {
    graphs.push_back(random_chordal(5 + i % 20, 0.5, rng()).graph);
    graphs.push_back(random_graph(4 + i % 8, 0.4, rng()));
  }
  std::vector<std::pair<Graph, DismantleCertificate>> pool;
  for (const auto& g : graphs) {
    for (auto policy : {DismantlePolicy::lexicographic(), DismantlePolicy::seeded(rng())}) {
      auto cert = compute_core(g, policy);
      ++r.cases;
      if (!verify_certificate(g, cert)) r.fail(edge_string(g) + ": produced certificate rejected");
      pool.emplace_back(g, std::move(cert));
    }
  }
  std::size_t rejected = 0, tried = 0;
  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (auto i : order) {
    if (tried == mutants) break;
    const auto& [g, cert] = pool[i];
    for (const auto& m : detail::mutations(g, cert)) {
      if (tried == mutants) break;
      if (detail::replay_accepts(g, m)) continue;
      ++tried;
      ++r.cases;
      if (verify_certificate(g, m)) r.fail(edge_string(g) + ": mutated certificate accepted");
      else ++rejected;
    }
  }
  if (tried < mutants) r.fail("only " + std::to_string(tried) + " invalid mutants could be generated");
  r.notes.push_back(std::to_string(rejected) + "/" + std::to_string(tried) + " mutants rejected");
  return r;
}

/// Sizes and seeds of the acceptance suites.
struct AcceptanceConfig {
  std::size_t chordal_n_max = 8;      ///< AC1, AC2, AC4
  std::size_t catalog_n_max = 8;      ///< AC3
  std::size_t confluence_graphs = 500;
  std::size_t confluence_n_max = 40;
  std::size_t confluence_policies = 10;
  std::size_t identity_graphs = 200;
  std::size_t identity_n_max = 7;
  std::size_t cop_win_n_max = 7;
  std::size_t forests = 1000;
  std::size_t forest_n_max = 50;
  std::vector<std::size_t> timing_sizes{250, 500, 1000};
  std::size_t timing_repeats = 3;
  double timing_fill = 0.5;
  double timing_slack = 2.0;
  double timing_limit_seconds = 30.0;
  std::size_t certificate_graphs = 40;
  std::size_t certificate_mutants = 20;
  std::uint64_t seed = 20240601;
  unsigned jobs = 1;

  /// Reduced sizes for smoke runs; same code paths.
  static AcceptanceConfig quick() {
    AcceptanceConfig c;
    c.chordal_n_max = c.catalog_n_max = 6;
    c.confluence_graphs = 50;
    c.confluence_n_max = 20;
    c.identity_graphs = 20;
    c.identity_n_max = 5;
    c.cop_win_n_max = 5;
    c.forests = 100;
    c.timing_sizes = {60, 120, 240};
    c.timing_repeats = 1;
    c.timing_slack = 8.0;
    c.certificate_graphs = 10;
    return c;
  }
};

inline const std::vector<std::string>& acceptance_ids() {
  static const std::vector<std::string> ids{"AC1", "AC2", "AC3", "AC4", "AC5", "AC6", "AC7", "AC8", "AC9", "AC10"};
  return ids;
}

/// Runs the selected suites in id order and reports each result as soon as
/// it is known. Suites sharing the exhaustive chordal pass run it once.
inline std::vector<SweepResult> run_acceptance(const AcceptanceConfig& cfg, const std::vector<std::string>& selected,
                                               const std::function<void(const SweepResult&)>& report = {}) {
  auto wanted = [&](const std::string& id) {
    return std::find(selected.begin(), selected.end(), id) != selected.end();
  };
  for (const auto& id : selected)
    if (!std::count(acceptance_ids().begin(), acceptance_ids().end(), id))
      throw PreconditionFailed("unknown suite '" + id + "'");
  std::vector<SweepResult> out;
  auto emit = [&](SweepResult r) {
    if (report) report(r);
    out.push_back(std::move(r));
  };
  std::optional<ChordalSweep> chordal;
  const ChordalChecks needed{wanted("AC1"), wanted("AC2"), wanted("AC4")};
  auto chordal_pass = [&]() -> ChordalSweep& {
    if (!chordal) chordal = chordal_sweep(cfg.chordal_n_max, cfg.jobs, needed);
    return *chordal;
  };
  for (const auto& id : acceptance_ids()) {
    if (!wanted(id)) continue;
    if (id == "AC1") emit(chordal_pass().contractible);
    if (id == "AC2") emit(chordal_pass().sphere);
    if (id == "AC3") emit(taut_point_sweep(taut_catalog(cfg.catalog_n_max, cfg.jobs)));
    if (id == "AC4") emit(chordal_pass().rooted);
    if (id == "AC5")
      emit(confluence_sweep(cfg.confluence_graphs, cfg.confluence_n_max, cfg.confluence_policies, cfg.seed));
    if (id == "AC6") emit(identity_sweep(cfg.identity_graphs, cfg.identity_n_max, cfg.seed + 1));
    if (id == "AC7") emit(cop_win_sweep(cfg.cop_win_n_max));
    if (id == "AC8") emit(fixture_forest_sweep(cfg.forests, cfg.forest_n_max, cfg.seed + 2));
    if (id == "AC9")
      emit(performance_sweep(cfg.timing_sizes, cfg.timing_repeats, cfg.timing_fill, cfg.seed + 3, cfg.timing_slack,
                             cfg.timing_limit_seconds));
    if (id == "AC10") emit(certificate_sweep(cfg.certificate_graphs, cfg.certificate_mutants, cfg.seed + 4));
  }
  return out;
}

}  // namespace indcore
