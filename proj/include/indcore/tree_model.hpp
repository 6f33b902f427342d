#pragma once

#include <algorithm>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "indcore/graph.hpp"

namespace indcore {

using NodeId = std::size_t;

/// A tree whose nodes carry bags of graph vertices. It models G when every
/// vertex occupies a (non-empty) subtree and two vertices are adjacent in G
/// exactly when some bag holds both. Bags may be empty.
struct TreeModel {
  std::vector<std::vector<Vertex>> bags;  ///< each sorted ascending
  std::vector<std::pair<NodeId, NodeId>> edges;

  std::size_t node_count() const noexcept { return bags.size(); }

  std::vector<std::vector<NodeId>> adjacency() const {
    std::vector<std::vector<NodeId>> adj(bags.size());
    for (auto [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    return adj;
  }

  bool contains(NodeId node, Vertex v) const {
    return std::binary_search(bags[node].begin(), bags[node].end(), v);
  }

  friend bool operator==(const TreeModel&, const TreeModel&) = default;
};

struct RootedTreeModel {
  TreeModel model;
  NodeId root = 0;
};

struct ModelCheck {
  bool ok = true;
  std::string diagnostic;
  explicit operator bool() const noexcept { return ok; }
};

namespace detail {

inline ModelCheck model_failure(std::string why) { return {false, std::move(why)}; }

// BFS from `root`; parent[root] == root.
struct RootedTree {
  std::vector<NodeId> parent;
  std::vector<std::size_t> depth;
};

inline RootedTree root_tree(const TreeModel& t, NodeId root) {
  RootedTree out{std::vector<NodeId>(t.node_count(), t.node_count()),
                 std::vector<std::size_t>(t.node_count(), 0)};
  auto adj = t.adjacency();
  std::deque<NodeId> queue{root};
  out.parent[root] = root;
  while (!queue.empty()) {
    NodeId a = queue.front();
    queue.pop_front();
    for (NodeId b : adj[a]) {
      if (out.parent[b] != t.node_count()) continue;
      out.parent[b] = a;
      out.depth[b] = out.depth[a] + 1;
      queue.push_back(b);
    }
  }
  return out;
}

}  // namespace detail

/// Checks that T is a tree model of G[within] (vertex labels are G's ids).
/// On failure the diagnostic names the first violated condition.
inline ModelCheck validate_tree_model(const TreeModel& t, const Graph& g, const VertexSet& within) {
  const auto k = t.node_count();
  if (k == 0) return detail::model_failure("tree: model has no nodes");
  if (t.edges.size() != k - 1)
    return detail::model_failure("tree: " + std::to_string(t.edges.size()) + " edges for " +
                                 std::to_string(k) + " nodes");
  for (auto [a, b] : t.edges) {
    if (a >= k || b >= k) return detail::model_failure("tree: edge endpoint out of range");
    if (a == b) return detail::model_failure("tree: self-loop at node " + std::to_string(a));
  }
  {
    auto rooted = detail::root_tree(t, 0);
    for (NodeId a = 0; a < k; ++a)
      if (rooted.parent[a] == k) return detail::model_failure("tree: node graph is disconnected");
  }

  const auto n = g.order();
  std::vector<VertexSet> bag_sets;
  bag_sets.reserve(k);
  for (NodeId a = 0; a < k; ++a) {
    VertexSet s(n);
    for (Vertex v : t.bags[a]) {
      if (v >= n || !within.test(v))
        return detail::model_failure("bags: node " + std::to_string(a) + " holds unknown vertex " +
                                     std::to_string(v));
      if (s.test(v)) return detail::model_failure("bags: duplicate vertex in node " + std::to_string(a));
      s.set(v);
    }
    bag_sets.push_back(std::move(s));
  }

  // Subtree condition: the v-nodes are non-empty and connected.
  const auto adj = t.adjacency();
  std::vector<NodeId> stack;
  std::vector<char> seen(k);
  for (Vertex v : within) {
    std::size_t holders = 0;
    NodeId start = k;
    for (NodeId a = 0; a < k; ++a)
      if (bag_sets[a].test(v)) {
        ++holders;
        if (start == k) start = a;
      }
    if (holders == 0) return detail::model_failure("subtree: vertex " + std::to_string(v) + " is in no node");
    std::fill(seen.begin(), seen.end(), 0);
    stack.assign(1, start);
    seen[start] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      NodeId a = stack.back();
      stack.pop_back();
      for (NodeId b : adj[a])
        if (!seen[b] && bag_sets[b].test(v)) {
          seen[b] = 1;
          ++reached;
          stack.push_back(b);
        }
    }
    if (reached != holders)
      return detail::model_failure("subtree: nodes holding vertex " + std::to_string(v) +
                                   " are not connected");
  }

  // Edge condition: co-occurrence in some bag is exactly adjacency in G[within].
  std::vector<VertexSet> covered(n, VertexSet(n));
  for (NodeId a = 0; a < k; ++a)
    for (Vertex v : bag_sets[a]) covered[v] |= bag_sets[a];
  for (Vertex v : within) {
    covered[v].reset(v);
    VertexSet expected = g.neighbors(v) & within;
    if (covered[v] == expected) continue;
    VertexSet extra = covered[v] - expected;
    if (extra.any())
      return detail::model_failure("edges: vertices " + std::to_string(v) + " and " +
                                   std::to_string(extra.first()) + " share a node but are not adjacent");
    VertexSet missing = expected - covered[v];
    return detail::model_failure("edges: edge " + std::to_string(v) + " " + std::to_string(missing.first()) +
                                 " has no common node");
  }
  return {};
}

inline ModelCheck validate_tree_model(const TreeModel& t, const Graph& g) {
  return validate_tree_model(t, g, g.vertices());
}

/// Keeps only the labels in W; the tree shape is unchanged.
inline TreeModel restrict(const TreeModel& t, const VertexSet& w) {
  TreeModel out = t;
  for (auto& bag : out.bags)
    std::erase_if(bag, [&](Vertex v) { return !w.test(v); });
  return out;
}

/// Renames bag labels through an induced-subgraph map (labels[new] = old).
/// Throws when a bag holds a vertex outside the map.
inline TreeModel relabel(const TreeModel& t, std::span<const Vertex> labels) {
  Vertex max_old = 0;
  for (Vertex v : labels) max_old = std::max(max_old, v);
  std::vector<Vertex> index(labels.empty() ? 0 : max_old + 1, VertexSet::npos);
  for (Vertex i = 0; i < labels.size(); ++i) index[labels[i]] = i;
  TreeModel out = t;
  for (auto& bag : out.bags) {
    for (auto& v : bag) {
      if (v >= index.size() || index[v] == VertexSet::npos)
        throw InvalidVertex("vertex " + std::to_string(v) + " has no image under relabeling");
      v = index[v];
    }
    std::sort(bag.begin(), bag.end());
  }
  return out;
}

/// Contracts all u-nodes into a single empty root node and erases every
/// label from N_G[u]. The result models G \ N_G[u] in G's labels.
inline RootedTreeModel contract(const TreeModel& t, Vertex u, const Graph& g) {
  g.check(u);
  const auto k = t.node_count();
  std::vector<char> is_u(k, 0);
  bool any = false;
  for (NodeId a = 0; a < k; ++a)
    if (t.contains(a, u)) is_u[a] = 1, any = true;
  if (!any) throw PreconditionFailed("vertex " + std::to_string(u) + " appears in no bag");

  const VertexSet erased = closed_neighborhood(g, u);
  RootedTreeModel out;
  std::vector<NodeId> image(k);
  NodeId root = k;
  for (NodeId a = 0; a < k; ++a) {
    if (is_u[a]) {
      if (root == k) {
        root = out.model.bags.size();
        out.model.bags.emplace_back();
      }
      image[a] = root;
    } else {
      image[a] = out.model.bags.size();
      auto bag = t.bags[a];
      std::erase_if(bag, [&](Vertex v) { return erased.test(v); });
      out.model.bags.push_back(std::move(bag));
    }
  }
  for (auto [a, b] : t.edges)
    if (image[a] != image[b]) out.model.edges.emplace_back(image[a], image[b]);
  out.root = root;
  return out;
}

/// Tree distance from the nearest v-node to the root.
inline std::size_t min_depth(const RootedTreeModel& t, Vertex v) {
  auto rooted = detail::root_tree(t.model, t.root);
  std::size_t best = t.model.node_count();
  bool found = false;
  for (NodeId a = 0; a < t.model.node_count(); ++a)
    if (t.model.contains(a, v)) {
      best = found ? std::min(best, rooted.depth[a]) : rooted.depth[a];
      found = true;
    }
  if (!found) throw PreconditionFailed("vertex " + std::to_string(v) + " appears in no bag");
  return best;
}

/// (x, y) is good in G and the tree path from every x-node up to the root
/// (both ends included) passes through a y-node.
inline bool is_tr_good(const RootedTreeModel& t, const Graph& g, Vertex x, Vertex y) {
  if (!is_good_pair(g, x, y)) return false;
  auto rooted = detail::root_tree(t.model, t.root);
  for (NodeId a = 0; a < t.model.node_count(); ++a) {
    if (!t.model.contains(a, x)) continue;
    NodeId walk = a;
    while (!t.model.contains(walk, y)) {
      if (walk == t.root) return false;
      walk = rooted.parent[walk];
    }
  }
  return true;
}

}  // namespace indcore
