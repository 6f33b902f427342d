#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "indcore/graph.hpp"

namespace indcore {

using Face = std::vector<Vertex>;  ///< sorted ascending

/// Finite abstract simplicial complex stored by its facets.
///
/// The void complex has no faces at all; the empty complex {∅} has the
/// single empty facet and plays the role of the (-1)-sphere.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Normalizes: sorts each face, drops duplicates and non-maximal faces.
  explicit SimplicialComplex(std::vector<Face> faces) {
    for (auto& f : faces) {
      std::sort(f.begin(), f.end());
      f.erase(std::unique(f.begin(), f.end()), f.end());
    }
    std::sort(faces.begin(), faces.end(),
              [](const Face& a, const Face& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (auto& f : faces) {
      bool covered = false;
      for (const auto& kept : facets_) {
        if (kept.size() <= f.size()) break;
        if (std::includes(kept.begin(), kept.end(), f.begin(), f.end())) {
          covered = true;
          break;
        }
      }
      if (!covered) facets_.push_back(std::move(f));
    }
    std::sort(facets_.begin(), facets_.end());
    for (const auto& f : facets_) vertices_.insert(vertices_.end(), f.begin(), f.end());
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  }

  static SimplicialComplex void_complex() { return {}; }
  static SimplicialComplex empty_complex() { return SimplicialComplex(std::vector<Face>{Face{}}); }

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Face>& facets() const noexcept { return facets_; }

  bool is_void() const noexcept { return facets_.empty(); }
  bool is_empty_complex() const noexcept { return facets_.size() == 1 && facets_[0].empty(); }
  bool has_vertex(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

  bool contains_face(Face f) const {
    std::sort(f.begin(), f.end());
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](const Face& g) { return std::includes(g.begin(), g.end(), f.begin(), f.end()); });
  }

  /// Dimension of the largest facet; -1 for {∅}, -2 for the void complex.
  int dimension() const noexcept {
    int d = -2;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Face> facets_;
};

namespace detail {

// Bron–Kerbosch with pivoting; reports maximal cliques as sorted faces.
inline void maximal_cliques(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<Face>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r.to_vector());
    return;
  }
  Vertex pivot = VertexSet::npos;
  std::size_t best = 0;
  for (const VertexSet* side : {&p, &x})
    for (Vertex u : *side) {
      auto c = (p & g.neighbors(u)).count();
      if (pivot == VertexSet::npos || c > best) pivot = u, best = c;
    }
  VertexSet branch = p - g.neighbors(pivot);
  for (Vertex v : branch) {
    VertexSet r2 = r;
    r2.set(v);
    maximal_cliques(g, std::move(r2), p & g.neighbors(v), x & g.neighbors(v), out);
    p.reset(v);
    x.set(v);
  }
}

}  // namespace detail

/// Cl(G): faces are the cliques of G.
inline SimplicialComplex clique_complex(const Graph& g) {
  std::vector<Face> facets;
  detail::maximal_cliques(g, VertexSet(g.order()), g.vertices(), VertexSet(g.order()), facets);
  return SimplicialComplex(std::move(facets));
}

/// Ind(G) = Cl(complement of G): faces are the independent sets of G.
inline SimplicialComplex independence_complex(const Graph& g) { return clique_complex(complement(g)); }

namespace detail {

inline void require_vertex(const SimplicialComplex& k, Vertex v) {
  if (!k.has_vertex(v)) throw InvalidVertex("vertex " + std::to_string(v) + " is not in the complex");
}

inline Face without(const Face& f, Vertex v) {
  Face out;
  out.reserve(f.size());
  for (Vertex w : f)
    if (w != v) out.push_back(w);
  return out;
}

}  // namespace detail

/// lk_K(v): faces F with v ∉ F and F ∪ {v} ∈ K.
inline SimplicialComplex link(const SimplicialComplex& k, Vertex v) {
  detail::require_vertex(k, v);
  std::vector<Face> faces;
  for (const auto& f : k.facets())
    if (std::binary_search(f.begin(), f.end(), v)) faces.push_back(detail::without(f, v));
  return SimplicialComplex(std::move(faces));
}

/// K \ v: faces avoiding v.
inline SimplicialComplex delete_vertex(const SimplicialComplex& k, Vertex v) {
  detail::require_vertex(k, v);
  std::vector<Face> faces;
  for (const auto& f : k.facets()) faces.push_back(detail::without(f, v));
  return SimplicialComplex(std::move(faces));
}

/// lk_K(u) is a cone with apex u2, tested as "every facet through u
/// also contains u2".
inline bool is_dominated_in_complex(const SimplicialComplex& k, Vertex u, Vertex u2) {
  detail::require_vertex(k, u);
  detail::require_vertex(k, u2);
  if (u == u2) throw InvalidVertex("domination needs two distinct vertices");
  for (const auto& f : k.facets())
    if (std::binary_search(f.begin(), f.end(), u) && !std::binary_search(f.begin(), f.end(), u2)) return false;
  return true;
}

/// Boundary of the k-dimensional cross-polytope on vertices 0..2k-1, with
/// antipodal pairs {2i, 2i+1}. k = 0 gives {∅}.
inline SimplicialComplex cross_polytope_boundary(std::size_t k) {
  std::vector<Face> facets;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << k); ++choice) {
    Face f;
    for (Vertex i = 0; i < k; ++i) f.push_back(2 * i + static_cast<Vertex>((choice >> i) & 1u));
    facets.push_back(std::move(f));
  }
  return SimplicialComplex(std::move(facets));
}

/// Renames vertex v to names[v].
inline SimplicialComplex rename_vertices(const SimplicialComplex& k, std::span<const Vertex> names) {
  std::vector<Face> faces = k.facets();
  for (auto& f : faces)
    for (auto& v : f) {
      if (v >= names.size()) throw InvalidVertex("vertex " + std::to_string(v) + " has no new name");
      v = names[v];
    }
  return SimplicialComplex(std::move(faces));
}

struct ComplexCore {
  SimplicialComplex core;
  std::vector<std::pair<Vertex, Vertex>> steps;  ///< (removed, apex)
};

/// Repeatedly deletes the lowest dominated vertex (apex: lowest dominator).
inline ComplexCore complex_core(SimplicialComplex k) {
  ComplexCore out;
  while (true) {
    bool removed = false;
    for (Vertex u : k.vertices()) {
      for (Vertex u2 : k.vertices()) {
        if (u2 == u || !is_dominated_in_complex(k, u, u2)) continue;
        out.steps.emplace_back(u, u2);
        k = delete_vertex(k, u);
        removed = true;
        break;
      }
      if (removed) break;
    }
    if (!removed) break;
  }
  out.core = std::move(k);
  return out;
}

inline bool is_dismantlable_complex(const SimplicialComplex& k) {
  return complex_core(k).core.vertices().size() == 1;
}

}  // namespace indcore
