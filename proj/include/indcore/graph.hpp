#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "indcore/error.hpp"
#include "indcore/vertex_set.hpp"

namespace indcore {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on dense vertex ids 0..n-1.
///
/// Values are immutable once built: the constructors validate the input
/// (symmetric adjacency, no loops, ids in range) and there are no mutators.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

  /// Throws InvalidVertex on out-of-range ids, self-loops, or duplicate edges.
  Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
      if (u >= n || v >= n)
        throw InvalidVertex("edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
      if (u == v) throw InvalidVertex("self-loop at vertex " + std::to_string(u));
      if (adj_[u].test(v))
        throw InvalidVertex("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      adj_[u].set(v);
      adj_[v].set(u);
      ++m_;
    }
  }
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from per-vertex neighbor sets; rejects asymmetric or looped input.
  static Graph from_adjacency(std::vector<VertexSet> adj) {
    Graph g;
    const auto n = adj.size();
    std::size_t degree_sum = 0;
    for (Vertex u = 0; u < n; ++u) {
      if (adj[u].universe() != n) throw InvalidVertex("adjacency universe mismatch");
      if (adj[u].test(u)) throw InvalidVertex("self-loop at vertex " + std::to_string(u));
      for (Vertex v : adj[u])
        if (!adj[v].test(u)) throw InvalidVertex("asymmetric adjacency");
      degree_sum += adj[u].count();
    }
    g.adj_ = std::move(adj);
    g.m_ = degree_sum / 2;
    return g;
  }

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return m_; }

  const VertexSet& neighbors(Vertex v) const {
    check(v);
    return adj_[v];
  }
  bool adjacent(Vertex u, Vertex v) const noexcept { return u < order() && adj_[u].test(v); }
  std::size_t degree(Vertex v) const { return neighbors(v).count(); }

  VertexSet vertices() const { return VertexSet::full(order()); }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v = adj_[u].next(u); v != VertexSet::npos; v = adj_[u].next(v)) out.emplace_back(u, v);
    return out;
  }

  void check(Vertex v) const {
    if (v >= order())
      throw InvalidVertex("vertex " + std::to_string(v) + " out of range for graph of order " +
                          std::to_string(order()));
  }

  friend bool operator==(const Graph& a, const Graph& b) noexcept { return a.adj_ == b.adj_; }

 private:
  std::vector<VertexSet> adj_;
  std::size_t m_ = 0;
};

/// Induced subgraph with densely renumbered vertices; labels[new_id] = old_id.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> labels;
};

/// Ordered pair (x, y) with N(x) ⊆ N(y); removing y dismantles Ind(G).
struct GoodPair {
  Vertex x;
  Vertex y;
  friend bool operator==(const GoodPair&, const GoodPair&) = default;
};

/// Tie-breaking for every dismantling loop: lowest ids first, or uniform
/// random choice from a seeded generator.
struct DismantlePolicy {
  std::optional<std::uint64_t> seed;

  static DismantlePolicy lexicographic() { return {}; }
  static DismantlePolicy seeded(std::uint64_t s) { return {s}; }
  bool is_seeded() const noexcept { return seed.has_value(); }
};

inline VertexSet open_neighborhood(const Graph& g, Vertex v) { return g.neighbors(v); }

inline VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet s = g.neighbors(v);
  s.set(v);
  return s;
}

inline Graph complement(const Graph& g) {
  const auto n = g.order();
  std::vector<VertexSet> adj;
  adj.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    VertexSet s = g.neighbors(v).complemented();
    s.reset(v);
    adj.push_back(std::move(s));
  }
  return Graph::from_adjacency(std::move(adj));
}

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w) {
  if (w.universe() != g.order()) throw InvalidVertex("vertex set universe does not match graph order");
  InducedSubgraph out;
  out.labels = w.to_vector();
  const auto k = out.labels.size();
  std::vector<Vertex> index(g.order(), VertexSet::npos);
  for (Vertex i = 0; i < k; ++i) index[out.labels[i]] = i;
  std::vector<VertexSet> adj(k, VertexSet(k));
  for (Vertex i = 0; i < k; ++i)
    for (Vertex u : g.neighbors(out.labels[i]))
      if (index[u] != VertexSet::npos) adj[i].set(index[u]);
  out.graph = Graph::from_adjacency(std::move(adj));
  return out;
}

/// Same as the set overload; labels come out in increasing order.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> w) {
  VertexSet s(g.order());
  for (Vertex v : w) {
    g.check(v);
    s.set(v);
  }
  return induced_subgraph(g, s);
}

/// Components of G[within], ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet unseen = within;
  std::vector<Vertex> stack;
  for (Vertex s = unseen.first(); s != VertexSet::npos; s = unseen.first()) {
    VertexSet comp(g.order());
    comp.set(s);
    unseen.reset(s);
    stack.assign(1, s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v) & unseen) {
        unseen.reset(u);
        comp.set(u);
        stack.push_back(u);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.vertices());
}

inline bool is_connected(const Graph& g, const VertexSet& within) {
  return connected_components(g, within).size() <= 1;
}
inline bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

/// k when every component is a single edge; the empty graph counts as M_0.
inline std::optional<std::size_t> is_matching(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 1) return std::nullopt;
  }
  return g.order() / 2;
}

inline bool is_good_pair(const Graph& g, Vertex x, Vertex y) {
  g.check(x);
  g.check(y);
  return x != y && g.neighbors(x).is_subset_of(g.neighbors(y));
}

/// All good pairs, sorted by (y, x).
inline std::vector<GoodPair> enumerate_good_pairs(const Graph& g) {
  std::vector<GoodPair> out;
  for (Vertex y = 0; y < g.order(); ++y)
    for (Vertex x = 0; x < g.order(); ++x)
      if (x != y && g.neighbors(x).is_subset_of(g.neighbors(y))) out.push_back({x, y});
  return out;
}

/// Closed-neighborhood domination N[u] ⊆ N[u2] (the cop-win notion).
inline bool is_dominated_in_graph(const Graph& g, Vertex u, Vertex u2) {
  g.check(u);
  g.check(u2);
  if (u == u2) throw InvalidVertex("domination needs two distinct vertices");
  return closed_neighborhood(g, u).is_subset_of(closed_neighborhood(g, u2));
}

struct CopWinCore {
  Graph core;
  std::vector<Vertex> labels;   ///< core vertex -> original vertex
  std::vector<Vertex> removed;  ///< removal order, original labels
};

namespace detail {

// Vertices of `alive` dominating u within G[alive], excluding u itself.
inline VertexSet closed_dominators(const Graph& g, const VertexSet& alive, Vertex u) {
  VertexSet cand = alive;
  cand.reset(u);
  VertexSet closed_u = g.neighbors(u) & alive;
  closed_u.set(u);
  for (Vertex z : closed_u) {
    VertexSet nz = g.neighbors(z);
    nz.set(z);
    cand &= nz;
    if (cand.empty()) break;
  }
  return cand;
}

}  // namespace detail

/// Removes closed-neighborhood-dominated vertices from G[within] until none
/// remains. Lexicographic policy removes the lowest-id dominated vertex.
inline CopWinCore graph_dismantle_core(const Graph& g, const VertexSet& within,
                                       DismantlePolicy policy = {}) {
  VertexSet alive = within;
  std::vector<Vertex> removed;
  std::mt19937_64 rng(policy.seed.value_or(0));
  std::vector<Vertex> dominated;
  while (true) {
    dominated.clear();
    for (Vertex u : alive) {
      if (detail::closed_dominators(g, alive, u).any()) {
        dominated.push_back(u);
        if (!policy.is_seeded()) break;
      }
    }
    if (dominated.empty()) break;
    Vertex pick = dominated.front();
    if (policy.is_seeded()) {
      std::uniform_int_distribution<std::size_t> dist(0, dominated.size() - 1);
      pick = dominated[dist(rng)];
    }
    alive.reset(pick);
    removed.push_back(pick);
  }
  auto sub = induced_subgraph(g, alive);
  return {std::move(sub.graph), std::move(sub.labels), std::move(removed)};
}

inline CopWinCore graph_dismantle_core(const Graph& g, DismantlePolicy policy = {}) {
  return graph_dismantle_core(g, g.vertices(), policy);
}

inline bool is_cop_win(const Graph& g, const VertexSet& within) {
  return graph_dismantle_core(g, within).core.order() == 1;
}
inline bool is_cop_win(const Graph& g) { return is_cop_win(g, g.vertices()); }

namespace detail {

inline std::vector<std::vector<std::size_t>> degree_signatures(const Graph& g) {
  std::vector<std::vector<std::size_t>> sig(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    sig[v].push_back(g.degree(v));
    std::vector<std::size_t> nd;
    for (Vertex u : g.neighbors(v)) nd.push_back(g.degree(u));
    std::sort(nd.begin(), nd.end());
    sig[v].insert(sig[v].end(), nd.begin(), nd.end());
  }
  return sig;
}

}  // namespace detail

/// Cheap isomorphism invariant: order, size, sorted degree sequence and
/// the sorted multiset of (degree, neighbor degrees) signatures.
struct GraphFingerprint {
  std::size_t order = 0;
  std::size_t size = 0;
  std::vector<std::size_t> degrees;
  std::vector<std::vector<std::size_t>> neighborhoods;
  friend bool operator==(const GraphFingerprint&, const GraphFingerprint&) = default;
  friend auto operator<=>(const GraphFingerprint&, const GraphFingerprint&) = default;
};

inline GraphFingerprint fingerprint(const Graph& g) {
  GraphFingerprint f{g.order(), g.size(), {}, detail::degree_signatures(g)};
  for (Vertex v = 0; v < g.order(); ++v) f.degrees.push_back(g.degree(v));
  std::sort(f.degrees.begin(), f.degrees.end());
  std::sort(f.neighborhoods.begin(), f.neighborhoods.end());
  return f;
}

inline constexpr std::size_t kIsomorphismLimit = 12;

/// Backtracking isomorphism test, pruned by degree and neighbor-degree
/// multisets. Both graphs must have at most 12 vertices.
inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() > kIsomorphismLimit || b.order() > kIsomorphismLimit)
    throw LimitExceeded("are_isomorphic is limited to graphs with at most 12 vertices");
  if (fingerprint(a) != fingerprint(b)) return false;
  const auto n = a.order();
  const auto sa = detail::degree_signatures(a);
  const auto sb = detail::degree_signatures(b);
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }

  // Visit order: most already-placed neighbors first, then highest degree.
  std::vector<Vertex> order;
  std::vector<bool> placed(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = VertexSet::npos;
    std::size_t best_links = 0, best_deg = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      std::size_t links = 0;
      for (Vertex u : a.neighbors(v)) links += placed[u];
      auto deg = a.degree(v);
      if (best == VertexSet::npos || links > best_links || (links == best_links && deg > best_deg)) {
        best = v;
        best_links = links;
        best_deg = deg;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }

  std::vector<Vertex> image(n, VertexSet::npos);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    Vertex v = order[depth];
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || sa[v] != sb[w]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        Vertex u = order[i];
        ok = a.adjacent(u, v) == b.adjacent(image[u], w);
      }
      if (!ok) continue;
      image[v] = w;
      used[w] = true;
      if (self(self, depth + 1)) return true;
      used[w] = false;
    }
    image[v] = VertexSet::npos;
    return false;
  };
  return extend(extend, 0);
}

// Common families.

inline Graph edgeless_graph(std::size_t n) { return Graph(n); }

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return Graph(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionFailed("a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, e);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

/// M_k: k disjoint edges (2i, 2i+1).
inline Graph matching_graph(std::size_t k) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < k; ++i) e.emplace_back(2 * i, 2 * i + 1);
  return Graph(2 * k, e);
}

/// K_{1,leaves} with center 0.
inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, e);
}

/// Vertices of b are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  auto e = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (auto [u, v] : b.edges()) e.emplace_back(u + shift, v + shift);
  return Graph(a.order() + b.order(), e);
}

}  // namespace indcore
