#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <random>
#include <thread>
#include <vector>

#include "indcore/graph.hpp"
#include "indcore/tree_model.hpp"

namespace indcore {

/// Maximum cardinality search. Returns vertices in visit order v_n, ..., v_1:
/// for chordal G the reverse is a perfect elimination ordering. Ties go to
/// the lowest id.
inline std::vector<Vertex> mcs_order(const Graph& g) {
  const auto n = g.order();
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<std::size_t> weight(n, 0);
  VertexSet unvisited = g.vertices();
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = unvisited.first();
    for (Vertex v : unvisited)
      if (weight[v] > weight[pick]) pick = v;
    order.push_back(pick);
    unvisited.reset(pick);
    for (Vertex u : g.neighbors(pick) & unvisited) ++weight[u];
  }
  return order;
}

/// Checks that `peo` (first eliminated first) is a perfect elimination
/// ordering: each vertex's later neighbours minus the earliest of them
/// must be adjacent to that earliest one.
inline bool is_perfect_elimination_ordering(const Graph& g, std::span<const Vertex> peo) {
  const auto n = g.order();
  if (peo.size() != n) return false;
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (peo[i] >= n || pos[peo[i]] != n) return false;
    pos[peo[i]] = i;
  }
  VertexSet later = g.vertices();
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = peo[i];
    later.reset(v);
    VertexSet up = g.neighbors(v) & later;
    if (up.empty()) continue;
    Vertex parent = up.first();
    for (Vertex u : up)
      if (pos[u] < pos[parent]) parent = u;
    up.reset(parent);
    if (!up.is_subset_of(g.neighbors(parent))) return false;
  }
  return true;
}

inline bool is_chordal(const Graph& g) {
  auto order = mcs_order(g);
  std::reverse(order.begin(), order.end());
  return is_perfect_elimination_ordering(g, order);
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
  for (Vertex a : s) {
    VertexSet rest = s;
    rest.reset(a);
    if (!rest.is_subset_of(g.neighbors(a))) return false;
  }
  return true;
}

/// Vertices of G[within] whose neighbourhood (inside `within`) is a clique.
inline VertexSet simplicial_vertices(const Graph& g, const VertexSet& within) {
  VertexSet out(g.order());
  for (Vertex v : within) {
    VertexSet nb = g.neighbors(v) & within;
    bool clique = true;
    for (Vertex a : nb) {
      VertexSet rest = nb;
      rest.reset(a);
      if (!rest.is_subset_of(g.neighbors(a))) {
        clique = false;
        break;
      }
    }
    if (clique) out.set(v);
  }
  return out;
}
inline VertexSet simplicial_vertices(const Graph& g) { return simplicial_vertices(g, g.vertices()); }

/// Vertices of G[within] with at least one simplicial neighbour.
inline VertexSet peeling_vertices(const Graph& g, const VertexSet& within) {
  const VertexSet simp = simplicial_vertices(g, within);
  VertexSet out(g.order());
  for (Vertex u : within)
    if (g.neighbors(u).intersects(simp)) out.set(u);
  return out;
}
inline VertexSet peeling_vertices(const Graph& g) { return peeling_vertices(g, g.vertices()); }

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Clique tree: one node per maximal clique, joined by a maximum-weight
/// spanning tree on intersection sizes. Components get their own trees,
/// which hang off a single empty connector node.
inline TreeModel clique_tree(const Graph& g) {
  const auto n = g.order();
  if (n == 0) return TreeModel{{{}}, {}};
  const auto visit = mcs_order(g);
  {
    std::vector<Vertex> peo(visit.rbegin(), visit.rend());
    if (!is_perfect_elimination_ordering(g, peo)) throw NotChordal();
  }

  // Candidate cliques: each vertex with its neighbours visited before it.
  std::vector<VertexSet> candidates;
  VertexSet visited(n);
  for (Vertex v : visit) {
    VertexSet c = g.neighbors(v) & visited;
    c.set(v);
    candidates.push_back(std::move(c));
    visited.set(v);
  }

  TreeModel out;
  std::vector<NodeId> component_heads;
  for (const auto& comp : connected_components(g)) {
    std::vector<VertexSet> cliques;
    for (const auto& c : candidates)
      if (c.is_subset_of(comp)) cliques.push_back(c);
    std::sort(cliques.begin(), cliques.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.to_vector() < b.to_vector(); });
    cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());
    std::vector<VertexSet> maximal;
    for (std::size_t i = 0; i < cliques.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < cliques.size() && !dominated; ++j)
        dominated = i != j && cliques[i].is_subset_of(cliques[j]);
      if (!dominated) maximal.push_back(cliques[i]);
    }

    const NodeId base = out.bags.size();
    component_heads.push_back(base);
    for (const auto& c : maximal) out.bags.push_back(c.to_vector());

    struct Candidate {
      std::size_t weight;
      NodeId a, b;
    };
    std::vector<Candidate> links;
    for (NodeId a = 0; a < maximal.size(); ++a)
      for (NodeId b = a + 1; b < maximal.size(); ++b)
        if (auto w = (maximal[a] & maximal[b]).count(); w > 0) links.push_back({w, a, b});
    std::stable_sort(links.begin(), links.end(),
                     [](const Candidate& l, const Candidate& r) { return l.weight > r.weight; });
    detail::DisjointSets forest(maximal.size());
    for (const auto& l : links)
      if (forest.unite(l.a, l.b)) out.edges.emplace_back(base + l.a, base + l.b);
  }

  if (component_heads.size() > 1) {
    const NodeId hub = out.bags.size();
    out.bags.emplace_back();
    for (NodeId head : component_heads) out.edges.emplace_back(head, hub);
  }
  return out;
}

struct ChordalSample {
  Graph graph;
  TreeModel model;
};

/// Reads the intersection graph of a tree model's vertex subtrees.
inline Graph graph_of_model(std::size_t n, const TreeModel& t) {
  std::vector<VertexSet> adj(n, VertexSet(n));
  for (const auto& bag : t.bags) {
    auto s = VertexSet::from_range(n, bag);
    for (Vertex v : bag) adj[v] |= s;
  }
  for (Vertex v = 0; v < n; ++v) adj[v].reset(v);
  return Graph::from_adjacency(std::move(adj));
}

/// Random chordal graph built from a random tree model, which is returned as
/// the witness. Each vertex takes a random node and grows its subtree one
/// frontier node at a time with probability `fill`.
inline ChordalSample random_chordal(std::size_t n, double fill, std::uint64_t seed) {
  if (!(fill >= 0.0 && fill <= 1.0)) throw PreconditionFailed("fill must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  const std::size_t k = std::max<std::size_t>(1, (n + 3) / 4);

  TreeModel model;
  model.bags.resize(k);
  for (NodeId a = 1; a < k; ++a) {
    std::uniform_int_distribution<NodeId> pick(0, a - 1);
    model.edges.emplace_back(pick(rng), a);
  }
  const auto adj = model.adjacency();
  std::bernoulli_distribution grow(fill);
  std::uniform_int_distribution<NodeId> any_node(0, k - 1);

  std::vector<char> inside(k);
  std::vector<NodeId> members, frontier;
  for (Vertex v = 0; v < n; ++v) {
    std::fill(inside.begin(), inside.end(), 0);
    members.assign(1, any_node(rng));
    inside[members[0]] = 1;
    frontier.assign(adj[members[0]].begin(), adj[members[0]].end());
    while (!frontier.empty() && grow(rng)) {
      std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
      auto i = pick(rng);
      NodeId a = frontier[i];
      frontier[i] = frontier.back();
      frontier.pop_back();
      inside[a] = 1;
      members.push_back(a);
      for (NodeId b : adj[a])
        if (!inside[b] && std::find(frontier.begin(), frontier.end(), b) == frontier.end())
          frontier.push_back(b);
    }
    for (NodeId a : members) model.bags[a].push_back(v);
  }
  return {graph_of_model(n, model), std::move(model)};
}

/// Random forest: vertex i > 0 attaches to a uniform earlier vertex with
/// probability `edge_probability`.
inline Graph random_forest(std::size_t n, double edge_probability, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution attach(edge_probability);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> parent(0, v - 1);
    if (attach(rng)) edges.emplace_back(parent(rng), v);
  }
  return Graph(n, edges);
}

inline constexpr std::size_t kChordalEnumerationLimit = 9;

namespace detail {

// Edge masks index pairs u < v as v(v-1)/2 + u, so extending a graph on
// vertices 0..n-2 by vertex n-1 only sets the top n-1 bits.
inline Graph graph_from_edge_mask(std::size_t n, std::uint64_t mask) {
  std::vector<VertexSet> adj(n, VertexSet(n));
  std::size_t bit = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u, ++bit)
      if ((mask >> bit) & 1u) {
        adj[u].set(v);
        adj[v].set(u);
      }
  return Graph::from_adjacency(std::move(adj));
}

// Each chordal graph on n vertices arises exactly once as a chordal graph
// on n-1 vertices (induced subgraphs of chordal graphs are chordal) plus a
// neighbourhood for vertex n-1; candidates are filtered with is_chordal.
template <class Visit>
std::vector<std::size_t> enumerate_chordal_impl(std::size_t n_max, unsigned jobs, Visit& visit) {
  if (n_max > kChordalEnumerationLimit)
    throw LimitExceeded("chordal enumeration is limited to n <= " + std::to_string(kChordalEnumerationLimit));
  jobs = std::max(1u, jobs);
  std::vector<std::size_t> counts(n_max + 1, 0);
  counts[0] = 1;
  visit(Graph(), 0u);
  std::vector<std::uint64_t> level{0};  // chordal graphs on n-1 vertices
  for (std::size_t n = 1; n <= n_max; ++n) {
    const bool keep = n < n_max;
    const std::size_t shift = (n - 1) * (n - 2) / 2;
    const std::uint64_t choices = std::uint64_t{1} << (n - 1);
    std::vector<std::vector<std::uint64_t>> next(jobs);
    std::vector<std::size_t> found(jobs, 0);
    auto work = [&](unsigned worker) {
      for (std::size_t i = worker; i < level.size(); i += jobs) {
        for (std::uint64_t s = 0; s < choices; ++s) {
          const std::uint64_t mask = level[i] | (s << shift);
          Graph g = graph_from_edge_mask(n, mask);
          if (!is_chordal(g)) continue;
          ++found[worker];
          if (keep) next[worker].push_back(mask);
          visit(g, worker);
        }
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    }
    counts[n] = std::accumulate(found.begin(), found.end(), std::size_t{0});
    level.clear();
    for (auto& part : next) level.insert(level.end(), part.begin(), part.end());
  }
  return counts;
}

}  // namespace detail

/// Streams every labeled chordal graph on 0..n_max vertices to `visit`
/// exactly once. Returns the number of graphs per vertex count.
template <class Visit>
std::vector<std::size_t> enumerate_chordal(std::size_t n_max, Visit&& visit) {
  auto adapter = [&](const Graph& g, unsigned) { visit(g); };
  return detail::enumerate_chordal_impl(n_max, 1, adapter);
}

/// Parallel variant: `visit(graph, worker)` runs concurrently on `jobs`
/// threads, worker in [0, jobs). Arrival order is unspecified.
template <class Visit>
std::vector<std::size_t> enumerate_chordal_parallel(std::size_t n_max, unsigned jobs, Visit&& visit) {
  return detail::enumerate_chordal_impl(n_max, jobs, visit);
}

}  // namespace indcore
