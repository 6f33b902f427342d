#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "indcore/chordal.hpp"
#include "indcore/graph.hpp"

namespace indcore {

/// Removal of `removed`, justified by N(witness) ⊆ N(removed) at that moment.
struct DismantleStep {
  Vertex removed;
  Vertex witness;
  friend bool operator==(const DismantleStep&, const DismantleStep&) = default;
};

/// Dismantling sequence plus the graph it ends in. The core keeps dense ids;
/// core_labels maps them back to the input's vertex ids.
struct DismantleCertificate {
  std::vector<DismantleStep> steps;
  Graph core;
  std::vector<Vertex> core_labels;
};

namespace detail {

// Incremental good-pair index. dominated_by[x] holds every y with
// N(x) ⊆ N(y); witnesses[y] is its transpose. Deleting y only changes the
// neighbourhoods of y's neighbours, so only their rows are recomputed.
class GoodPairIndex {
 public:
  explicit GoodPairIndex(const Graph& g)
      : n_(g.order()), alive_(g.vertices()), dominated_by_(n_, VertexSet(n_)), witnesses_(n_, VertexSet(n_)) {
    adj_.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) adj_.push_back(g.neighbors(v));
    for (Vertex x = 0; x < n_; ++x) update_row(x);
  }

  const VertexSet& alive() const noexcept { return alive_; }

  std::optional<GoodPair> lowest() const {
    for (Vertex y : alive_)
      if (auto x = witnesses_[y].first(); x != VertexSet::npos) return GoodPair{x, y};
    return std::nullopt;
  }

  template <class Rng>
  std::optional<GoodPair> uniform(Rng& rng) const {
    std::size_t total = 0;
    for (Vertex y : alive_) total += witnesses_[y].count();
    if (total == 0) return std::nullopt;
    std::uniform_int_distribution<std::size_t> dist(0, total - 1);
    std::size_t r = dist(rng);
    for (Vertex y : alive_) {
      auto c = witnesses_[y].count();
      if (r < c) return GoodPair{witnesses_[y].nth(r), y};
      r -= c;
    }
    return std::nullopt;
  }

  void remove(Vertex y) {
    for (Vertex x : witnesses_[y]) dominated_by_[x].reset(y);
    witnesses_[y].clear();
    for (Vertex b : dominated_by_[y]) witnesses_[b].reset(y);
    dominated_by_[y].clear();
    alive_.reset(y);
    const VertexSet touched = adj_[y];
    for (Vertex z : touched) adj_[z].reset(y);
    adj_[y].clear();
    for (Vertex x : touched) update_row(x);
  }

 private:
  void update_row(Vertex x) {
    VertexSet row = alive_;
    for (Vertex z : adj_[x]) row &= adj_[z];
    row.reset(x);
    const VertexSet& old = dominated_by_[x];
    for (Vertex y : old - row) witnesses_[y].reset(x);
    for (Vertex y : row - old) witnesses_[y].set(x);
    dominated_by_[x] = std::move(row);
  }

  std::size_t n_;
  VertexSet alive_;
  std::vector<VertexSet> adj_;
  std::vector<VertexSet> dominated_by_;
  std::vector<VertexSet> witnesses_;
};

}  // namespace detail

/// Greedy good-pair dismantling down to the core. Lexicographic policy
/// takes the smallest (y, x) each round; seeded policy picks uniformly among
/// all current good pairs.
inline DismantleCertificate compute_core(const Graph& g, DismantlePolicy policy = {}) {
  detail::GoodPairIndex index(g);
  std::mt19937_64 rng(policy.seed.value_or(0));
  DismantleCertificate cert;
  while (true) {
    auto pair = policy.is_seeded() ? index.uniform(rng) : index.lowest();
    if (!pair) break;
    cert.steps.push_back({pair->y, pair->x});
    index.remove(pair->y);
  }
  auto sub = induced_subgraph(g, index.alive());
  cert.core = std::move(sub.graph);
  cert.core_labels = std::move(sub.labels);
  return cert;
}

struct CertificateCheck {
  bool ok = true;
  std::optional<std::size_t> failed_step;  ///< steps.size() when only the end state is wrong
  std::string reason;
  explicit operator bool() const noexcept { return ok; }
};

/// Replays a certificate against G step by step.
inline CertificateCheck verify_certificate(const Graph& g, const DismantleCertificate& cert) {
  const auto n = g.order();
  auto fail = [](std::size_t i, std::string why) { return CertificateCheck{false, i, std::move(why)}; };
  VertexSet alive = g.vertices();
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto [y, x] = cert.steps[i];
    if (y >= n || x >= n) return fail(i, "vertex out of range");
    if (x == y) return fail(i, "witness equals removed vertex");
    if (!alive.test(y)) return fail(i, "removed vertex " + std::to_string(y) + " is already gone");
    if (!alive.test(x)) return fail(i, "witness " + std::to_string(x) + " is already gone");
    if (!(g.neighbors(x) & alive).is_subset_of(g.neighbors(y) & alive))
      return fail(i, "N(" + std::to_string(x) + ") is not contained in N(" + std::to_string(y) + ")");
    alive.reset(y);
  }
  const auto end = cert.steps.size();
  if (cert.core_labels.size() != cert.core.order()) return fail(end, "core labels do not match core order");
  VertexSet labelled(n);
  for (Vertex v : cert.core_labels) {
    if (v >= n || labelled.test(v)) return fail(end, "core labels are invalid");
    labelled.set(v);
  }
  if (labelled != alive) return fail(end, "core vertices differ from the replayed graph");
  for (Vertex i = 0; i < cert.core.order(); ++i)
    for (Vertex j = i + 1; j < cert.core.order(); ++j)
      if (cert.core.adjacent(i, j) != g.adjacent(cert.core_labels[i], cert.core_labels[j]))
        return fail(end, "core edges differ from the replayed graph");
  for (Vertex y : alive)
    for (Vertex x : alive)
      if (x != y && (g.neighbors(x) & alive).is_subset_of(g.neighbors(y) & alive))
        return fail(end, "core still has the good pair (" + std::to_string(x) + ", " + std::to_string(y) + ")");
  return {};
}

/// No good pair at all, i.e. Ind(G) is taut.
inline bool is_taut(const Graph& g) {
  for (Vertex y = 0; y < g.order(); ++y)
    for (Vertex x = 0; x < g.order(); ++x)
      if (x != y && g.neighbors(x).is_subset_of(g.neighbors(y))) return false;
  return true;
}

/// Good-pair dismantling reaches a single vertex. No chordality assumption.
inline bool is_dismantlable(const Graph& g) { return compute_core(g).core.order() == 1; }

/// Ind(G) is contractible; sound only for chordal G, so other inputs are refused.
inline bool is_contractible_chordal(const Graph& g) {
  if (!is_chordal(g)) throw NotChordal();
  return is_dismantlable(g);
}

/// Same decision computed per connected component: Ind of a disjoint union
/// is the join of the parts, contractible as soon as one part is.
inline bool is_contractible_by_components(const Graph& g) {
  if (!is_chordal(g)) throw NotChordal();
  for (const auto& comp : connected_components(g))
    if (is_dismantlable(induced_subgraph(g, comp).graph)) return true;
  return false;
}

struct SphereClassification {
  enum class Kind { contractible, sphere, other };
  Kind kind = Kind::other;
  std::size_t k = 0;  ///< sphere(k) means Ind(G) ≃ S^{k-1}
  std::size_t core_size = 0;
  friend bool operator==(const SphereClassification&, const SphereClassification&) = default;
};

inline const char* to_string(SphereClassification::Kind kind) {
  switch (kind) {
    case SphereClassification::Kind::contractible: return "contractible";
    case SphereClassification::Kind::sphere: return "sphere";
    case SphereClassification::Kind::other: return "other";
  }
  return "other";
}

/// Classification read off a core: a point, a matching M_k, or anything else.
inline SphereClassification classify_core(const Graph& core) {
  SphereClassification c;
  c.core_size = core.order();
  if (core.order() == 1) {
    c.kind = SphereClassification::Kind::contractible;
  } else if (auto k = is_matching(core)) {
    c.kind = SphereClassification::Kind::sphere;
    c.k = *k;
  }
  return c;
}

inline SphereClassification classify_sphere_chordal(const Graph& g) {
  if (!is_chordal(g)) throw NotChordal();
  return classify_core(compute_core(g).core);
}

}  // namespace indcore
