#pragma once

#include <stdexcept>
#include <string>

#include "indcore/chordal.hpp"
#include "indcore/dismantle.hpp"
#include "indcore/tree_model.hpp"

namespace indcore {

namespace detail {

// One level of the construction, on a connected chordal graph with at
// least two vertices and dismantlable (hence contractible) Ind.
inline GoodPair rooted_good_pair(const Graph& g, const RootedTreeModel& t) {
  // Peeling vertex closest to the root, lowest id on ties.
  Vertex u = VertexSet::npos;
  std::size_t best = 0;
  for (Vertex p : peeling_vertices(g)) {
    auto depth = min_depth(t, p);
    if (u == VertexSet::npos || depth < best) u = p, best = depth;
  }
  if (u == VertexSet::npos) throw std::logic_error("connected chordal graph without a peeling vertex");

  // Some component of G \ N[u] has contractible Ind.
  const VertexSet rest = g.vertices() - closed_neighborhood(g, u);
  for (const auto& comp : connected_components(g, rest)) {
    auto sub = induced_subgraph(g, comp);
    if (!is_dismantlable(sub.graph)) continue;
    if (sub.graph.order() == 1) return {sub.labels[0], u};
    const auto contracted = contract(t.model, u, g);
    RootedTreeModel inner{relabel(restrict(contracted.model, comp), sub.labels), contracted.root};
    const auto pair = rooted_good_pair(sub.graph, inner);
    return {sub.labels[pair.x], sub.labels[pair.y]};
  }
  throw std::logic_error("no component of G \\ N[" + std::to_string(u) +
                         "] has contractible independence complex");
}

}  // namespace detail

/// A (T,R)-good pair of a connected chordal graph with contractible Ind(G)
/// and at least two vertices. The search recurses into a contractible
/// component of G \ N[u] below the contracted root, where u is a peeling
/// vertex of minimal depth; the pair found there is returned unchanged.
inline GoodPair find_tr_good_pair(const Graph& g, const RootedTreeModel& t) {
  if (g.order() < 2) throw PreconditionFailed("graph needs at least two vertices");
  if (!is_connected(g)) throw PreconditionFailed("graph is not connected");
  if (!is_chordal(g)) throw NotChordal();
  if (t.root >= t.model.node_count()) throw PreconditionFailed("root is not a node of the model");
  if (!is_dismantlable(g)) throw PreconditionFailed("independence complex is not contractible");
  return detail::rooted_good_pair(g, t);
}

}  // namespace indcore
