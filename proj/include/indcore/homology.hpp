#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "indcore/chordal.hpp"
#include "indcore/complex.hpp"
#include "indcore/graph.hpp"

namespace indcore {

/// Reduced Betti numbers, indexed from dimension -1: betti[i] is the rank
/// in dimension i - 1. Trailing zeros are trimmed, so a contractible (or
/// acyclic) space has an empty vector.
struct HomotopySignature {
  std::vector<std::size_t> betti;

  static HomotopySignature point() { return {}; }
  static HomotopySignature sphere(int dim) {
    HomotopySignature s;
    s.betti.assign(static_cast<std::size_t>(dim + 2), 0);
    s.betti.back() = 1;
    return s;
  }
  /// Takes ranks indexed from dimension -1 and normalizes.
  static HomotopySignature from_ranks(std::vector<std::size_t> ranks) {
    while (!ranks.empty() && ranks.back() == 0) ranks.pop_back();
    return {std::move(ranks)};
  }

  bool contractible() const noexcept { return betti.empty(); }

  std::size_t at(int dim) const noexcept {
    auto i = dim + 1;
    return i >= 0 && static_cast<std::size_t>(i) < betti.size() ? betti[static_cast<std::size_t>(i)] : 0;
  }

  std::size_t total() const noexcept {
    std::size_t t = 0;
    for (auto b : betti) t += b;
    return t;
  }

  /// d when the signature is that of the single sphere S^d.
  std::optional<int> single_sphere() const noexcept {
    if (total() != 1) return std::nullopt;
    return static_cast<int>(betti.size()) - 2;
  }

  /// Ranks from dimension 0 upward (the -1 entry is reported separately).
  std::vector<std::size_t> from_dimension_zero() const {
    if (betti.size() <= 1) return {};
    return {betti.begin() + 1, betti.end()};
  }

  friend bool operator==(const HomotopySignature&, const HomotopySignature&) = default;
  friend auto operator<=>(const HomotopySignature&, const HomotopySignature&) = default;
};

/// Human-readable wedge notation, e.g. "point", "S^0", "S^1 v S^1".
inline std::string describe(const HomotopySignature& s) {
  if (s.contractible()) return "point";
  std::string out;
  for (std::size_t i = 0; i < s.betti.size(); ++i)
    for (std::size_t c = 0; c < s.betti[i]; ++c) {
      if (!out.empty()) out += " v ";
      out += "S^" + std::to_string(static_cast<int>(i) - 1);
    }
  return out;
}

/// Σ shifts every rank up one dimension; Σ(point) = point, Σ(S^-1) = S^0.
inline HomotopySignature suspend(const HomotopySignature& s) {
  if (s.contractible()) return s;
  HomotopySignature out;
  out.betti.reserve(s.betti.size() + 1);
  out.betti.push_back(0);
  out.betti.insert(out.betti.end(), s.betti.begin(), s.betti.end());
  return out;
}

/// Wedge of two non-empty spaces: reduced ranks add.
inline HomotopySignature wedge(const HomotopySignature& a, const HomotopySignature& b) {
  if (a.at(-1) != 0 || b.at(-1) != 0) throw PreconditionFailed("wedge with the empty space S^-1");
  std::vector<std::size_t> ranks(std::max(a.betti.size(), b.betti.size()), 0);
  for (std::size_t i = 0; i < a.betti.size(); ++i) ranks[i] += a.betti[i];
  for (std::size_t i = 0; i < b.betti.size(); ++i) ranks[i] += b.betti[i];
  return HomotopySignature::from_ranks(std::move(ranks));
}

struct HomologyOptions {
  std::uint32_t prime = 2;
  std::size_t face_budget = std::size_t{1} << 20;
};

inline bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace detail {

inline std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t r = 1;
  base %= p;
  while (exp) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

inline std::size_t face_index(const std::vector<std::uint64_t>& faces, std::uint64_t f) {
  return static_cast<std::size_t>(std::lower_bound(faces.begin(), faces.end(), f) - faces.begin());
}

// Rank of the boundary map from `upper` faces to `lower` faces over GF(2).
inline std::size_t boundary_rank_gf2(const std::vector<std::uint64_t>& upper,
                                     const std::vector<std::uint64_t>& lower) {
  const std::size_t words = (lower.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> pivots(lower.size());
  std::vector<std::uint64_t> row(words);
  std::size_t rank = 0;
  for (auto face : upper) {
    std::fill(row.begin(), row.end(), 0);
    for (auto rest = face; rest; rest &= rest - 1) {
      auto idx = face_index(lower, face & ~(rest & -rest));
      row[idx / 64] |= std::uint64_t{1} << (idx % 64);
    }
    for (std::size_t w = 0; w < words;) {
      if (!row[w]) {
        ++w;
        continue;
      }
      auto col = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
      if (pivots[col].empty()) {
        pivots[col] = row;
        ++rank;
        break;
      }
      for (std::size_t i = w; i < words; ++i) row[i] ^= pivots[col][i];
    }
  }
  return rank;
}

// Same over GF(p), p odd, with the alternating-sign boundary.
inline std::size_t boundary_rank_gfp(const std::vector<std::uint64_t>& upper,
                                     const std::vector<std::uint64_t>& lower, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> pivots(lower.size());
  std::vector<std::uint32_t> row(lower.size());
  std::size_t rank = 0;
  for (auto face : upper) {
    std::fill(row.begin(), row.end(), 0);
    std::size_t position = 0;
    for (auto rest = face; rest; rest &= rest - 1, ++position) {
      auto idx = face_index(lower, face & ~(rest & -rest));
      row[idx] = position % 2 == 0 ? 1u : p - 1;
    }
    for (std::size_t col = 0; col < row.size(); ++col) {
      if (row[col] == 0) continue;
      if (pivots[col].empty()) {
        const std::uint64_t inv = pow_mod(row[col], p - 2, p);
        for (auto& c : row) c = static_cast<std::uint32_t>(c * inv % p);
        pivots[col] = row;
        ++rank;
        break;
      }
      const std::uint64_t factor = row[col];
      const auto& piv = pivots[col];
      for (std::size_t i = col; i < row.size(); ++i)
        row[i] = static_cast<std::uint32_t>((row[i] + (p - factor) * piv[i]) % p);
    }
  }
  return rank;
}

}  // namespace detail

/// Reduced Betti numbers of K over GF(p) by brute-force rank computation
/// on the augmented simplicial chain complex. {∅} gets rank 1 in dimension
/// -1; the void complex has no chains at all. Limited to 64 vertices and
/// `face_budget` faces.
inline HomotopySignature reduced_betti(const SimplicialComplex& k, HomologyOptions options = {}) {
  if (!is_prime(options.prime)) throw PreconditionFailed(std::to_string(options.prime) + " is not prime");
  if (k.is_void()) return {};
  const auto& verts = k.vertices();
  if (verts.size() > 64) throw LimitExceeded("homology oracle supports at most 64 vertices");

  std::size_t max_facet = 0;
  for (const auto& f : k.facets()) max_facet = std::max(max_facet, f.size());
  if (max_facet >= 64 || (std::uint64_t{1} << max_facet) > options.face_budget)
    throw LimitExceeded("face budget exceeded");

  // faces[d + 1] holds the d-faces as vertex masks, sorted.
  std::vector<std::vector<std::uint64_t>> faces(max_facet + 1);
  for (const auto& f : k.facets()) {
    std::uint64_t mask = 0;
    for (Vertex v : f)
      mask |= std::uint64_t{1} << (std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
      faces[static_cast<std::size_t>(std::popcount(sub))].push_back(sub);
      if (sub == 0) break;
    }
  }
  std::size_t total = 0;
  for (auto& level : faces) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    total += level.size();
    if (total > options.face_budget) throw LimitExceeded("face budget exceeded");
  }

  // rank[i] is the rank of the boundary out of faces[i]; rank[0] = 0.
  std::vector<std::size_t> rank(faces.size() + 1, 0);
  for (std::size_t i = 1; i < faces.size(); ++i)
    rank[i] = options.prime == 2 ? detail::boundary_rank_gf2(faces[i], faces[i - 1])
                                 : detail::boundary_rank_gfp(faces[i], faces[i - 1], options.prime);
  std::vector<std::size_t> ranks(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) ranks[i] = faces[i].size() - rank[i] - rank[i + 1];
  return HomotopySignature::from_ranks(std::move(ranks));
}

namespace detail {

class WedgeRecursion {
 public:
  explicit WedgeRecursion(const Graph& g) : g_(g) {}

  // Ind(G[w]) via Ind(G) ≃ Ind(G \ u) ∨ Σ Ind(G \ N[u]) at the lowest-id
  // peeling vertex u.
  HomotopySignature of(const VertexSet& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    HomotopySignature result;
    if (w.empty()) {
      result = HomotopySignature::sphere(-1);
    } else if (has_isolated(w)) {
      result = HomotopySignature::point();
    } else {
      Vertex u = peeling_vertices(g_, w).first();
      if (u == VertexSet::npos) throw NotChordal("no peeling vertex in a graph with edges");
      VertexSet without_u = w;
      without_u.reset(u);
      VertexSet without_closed = w - closed_neighborhood(g_, u);
      result = wedge(of(without_u), suspend(of(without_closed)));
    }
    memo_.emplace(w, result);
    return result;
  }

 private:
  bool has_isolated(const VertexSet& w) const {
    for (Vertex v : w)
      if (!g_.neighbors(v).intersects(w)) return true;
    return false;
  }

  const Graph& g_;
  std::unordered_map<VertexSet, HomotopySignature, VertexSetHash> memo_;
};

}  // namespace detail

/// Homotopy signature of Ind(G) from the peeling-vertex wedge recursion,
/// memoized on induced vertex subsets. Requires chordal G.
inline HomotopySignature wedge_decomposition(const Graph& g) {
  if (!is_chordal(g)) throw NotChordal();
  detail::WedgeRecursion rec(g);
  return rec.of(g.vertices());
}

/// Ind(G) ≃ ⋁_{u ∈ N(v)} Σ Ind(G \ N[u]) for a simplicial vertex v of
/// positive degree.
inline HomotopySignature wedge_via_simplicial(const Graph& g, Vertex v) {
  g.check(v);
  if (!is_chordal(g)) throw NotChordal();
  if (g.degree(v) == 0) throw PreconditionFailed("vertex " + std::to_string(v) + " is isolated");
  if (!simplicial_vertices(g).test(v))
    throw PreconditionFailed("vertex " + std::to_string(v) + " is not simplicial");
  detail::WedgeRecursion rec(g);
  std::optional<HomotopySignature> acc;
  for (Vertex u : g.neighbors(v)) {
    auto summand = suspend(rec.of(g.vertices() - closed_neighborhood(g, u)));
    acc = acc ? wedge(*acc, summand) : summand;
  }
  return *acc;
}

}  // namespace indcore
