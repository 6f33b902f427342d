#pragma once

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "indcore/complex.hpp"
#include "indcore/decide.hpp"
#include "indcore/dismantle.hpp"
#include "indcore/explorer.hpp"
#include "indcore/graph.hpp"
#include "indcore/homology.hpp"
#include "indcore/tree_model.hpp"

namespace indcore {

using Json = nlohmann::ordered_json;

namespace detail {

// Betti numbers from dimension 0, with at least one entry.
inline std::vector<std::size_t> betti_from_zero(const HomotopySignature& s) {
  auto b = s.from_dimension_zero();
  if (b.empty()) b.push_back(0);
  return b;
}

}  // namespace detail

namespace detail {

struct DataLine {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Non-blank lines with '#' comment lines dropped.
inline std::vector<DataLine> data_lines(std::istream& in) {
  std::vector<DataLine> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(std::move(w));
    if (tokens.empty() || tokens[0].starts_with('#')) continue;
    out.push_back({number, std::move(tokens)});
  }
  return out;
}

inline std::size_t parse_count(const std::string& token, std::size_t line) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size())
    throw ParseError(line, "expected a non-negative integer, got '" + token + "'");
  return value;
}

inline Vertex parse_vertex(const std::string& token, std::size_t line, std::size_t n) {
  auto v = parse_count(token, line);
  if (v >= n) throw ParseError(line, "vertex " + token + " out of range");
  return static_cast<Vertex>(v);
}

inline constexpr std::string_view kEmptyFacet = "\xE2\x88\x85";  // ∅

}  // namespace detail

/// Edge-list format: "n m" then m lines "u v", 0-based; '#' starts a comment
/// line. Self-loops, duplicate edges and count mismatches are rejected.
inline Graph read_edge_list(std::istream& in) {
  const auto lines = detail::data_lines(in);
  if (lines.empty()) throw ParseError(0, "missing header line 'n m'");
  const auto& head = lines[0];
  if (head.tokens.size() != 2) throw ParseError(head.number, "header must be 'n m'");
  const auto n = detail::parse_count(head.tokens[0], head.number);
  const auto m = detail::parse_count(head.tokens[1], head.number);
  if (lines.size() - 1 != m)
    throw ParseError(head.number, "header announces " + std::to_string(m) + " edges, found " +
                                      std::to_string(lines.size() - 1));
  std::vector<VertexSet> adj(n, VertexSet(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 2) throw ParseError(l.number, "edge lines must be 'u v'");
    auto u = detail::parse_vertex(l.tokens[0], l.number, n);
    auto v = detail::parse_vertex(l.tokens[1], l.number, n);
    if (u == v) throw ParseError(l.number, "self-loop at vertex " + std::to_string(u));
    if (adj[u].test(v)) throw ParseError(l.number, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    adj[u].set(v);
    adj[v].set(u);
  }
  return Graph::from_adjacency(std::move(adj));
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

/// Tree-model format: node count k, k bag lines ("-" for an empty bag),
/// then k-1 tree edges "a b".
inline TreeModel read_tree_model(std::istream& in) {
  const auto lines = detail::data_lines(in);
  if (lines.empty()) throw ParseError(0, "missing node count");
  if (lines[0].tokens.size() != 1) throw ParseError(lines[0].number, "first line must be the node count");
  const auto k = detail::parse_count(lines[0].tokens[0], lines[0].number);
  if (k == 0) throw ParseError(lines[0].number, "a tree model needs at least one node");
  if (lines.size() != 1 + k + (k - 1))
    throw ParseError(lines[0].number, "expected " + std::to_string(k) + " bag lines and " + std::to_string(k - 1) +
                                          " edge lines");
  TreeModel t;
  for (std::size_t i = 1; i <= k; ++i) {
    const auto& l = lines[i];
    std::vector<Vertex> bag;
    if (!(l.tokens.size() == 1 && l.tokens[0] == "-"))
      for (const auto& tok : l.tokens)
        bag.push_back(static_cast<Vertex>(detail::parse_count(tok, l.number)));
    std::sort(bag.begin(), bag.end());
    if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) throw ParseError(l.number, "duplicate bag member");
    t.bags.push_back(std::move(bag));
  }
  for (std::size_t i = k + 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 2) throw ParseError(l.number, "tree edge lines must be 'a b'");
    t.edges.emplace_back(detail::parse_vertex(l.tokens[0], l.number, k), detail::parse_vertex(l.tokens[1], l.number, k));
  }
  return t;
}

inline void write_tree_model(std::ostream& out, const TreeModel& t) {
  out << t.node_count() << '\n';
  for (const auto& bag : t.bags) {
    if (bag.empty()) {
      out << "-\n";
      continue;
    }
    for (std::size_t i = 0; i < bag.size(); ++i) out << (i ? " " : "") << bag[i];
    out << '\n';
  }
  for (auto [a, b] : t.edges) out << a << ' ' << b << '\n';
}

/// Facet-list format: one facet per line, "∅" for the empty facet. No
/// facet lines at all gives the void complex.
inline SimplicialComplex read_facet_list(std::istream& in) {
  std::vector<Face> facets;
  for (const auto& l : detail::data_lines(in)) {
    if (l.tokens.size() == 1 && l.tokens[0] == detail::kEmptyFacet) {
      facets.emplace_back();
      continue;
    }
    Face f;
    for (const auto& tok : l.tokens) f.push_back(static_cast<Vertex>(detail::parse_count(tok, l.number)));
    facets.push_back(std::move(f));
  }
  return SimplicialComplex(std::move(facets));
}

inline void write_facet_list(std::ostream& out, const SimplicialComplex& k) {
  for (const auto& f : k.facets()) {
    if (f.empty()) {
      out << detail::kEmptyFacet << '\n';
      continue;
    }
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
    out << '\n';
  }
}

// JSON views.

inline Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

inline Json to_json(const HomotopySignature& s) {
  return {{"kind", s.contractible() ? "contractible" : "wedge"},
          {"betti", detail::betti_from_zero(s)},
          {"betti_minus1", s.at(-1)},
          {"homotopy", describe(s)}};
}

/// Steps plus the core in the input graph's labels.
inline Json certificate_json(const DismantleCertificate& cert) {
  Json steps = Json::array();
  for (const auto& s : cert.steps) steps.push_back({{"removed", s.removed}, {"witness", s.witness}});
  Json edges = Json::array();
  for (auto [u, v] : cert.core.edges()) edges.push_back({cert.core_labels[u], cert.core_labels[v]});
  return {{"certificate", std::move(steps)},
          {"core", {{"n", cert.core.order()}, {"vertices", cert.core_labels}, {"edges", std::move(edges)}}}};
}

/// Inverse of certificate_json. Throws ParseError on malformed documents.
inline DismantleCertificate certificate_from_json(const Json& doc) {
  try {
    DismantleCertificate cert;
    for (const auto& s : doc.at("certificate"))
      cert.steps.push_back({s.at("removed").get<Vertex>(), s.at("witness").get<Vertex>()});
    const auto& core = doc.at("core");
    cert.core_labels = core.at("vertices").get<std::vector<Vertex>>();
    if (core.contains("n") && core.at("n").get<std::size_t>() != cert.core_labels.size())
      throw ParseError(0, "core.n does not match core.vertices");
    std::vector<Edge> edges;
    for (const auto& e : core.at("edges")) {
      auto u = e.at(0).get<Vertex>(), v = e.at(1).get<Vertex>();
      auto iu = std::find(cert.core_labels.begin(), cert.core_labels.end(), u) - cert.core_labels.begin();
      auto iv = std::find(cert.core_labels.begin(), cert.core_labels.end(), v) - cert.core_labels.begin();
      edges.emplace_back(static_cast<Vertex>(iu), static_cast<Vertex>(iv));
    }
    cert.core = Graph(cert.core_labels.size(), edges);
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed certificate: ") + e.what());
  } catch (const InvalidVertex& e) {
    throw ParseError(0, std::string("malformed certificate core: ") + e.what());
  }
}

inline Json to_json(const SphereClassification& c) {
  Json j{{"classification", to_string(c.kind)}};
  if (c.kind == SphereClassification::Kind::sphere) j["k"] = c.k;
  j["core_size"] = c.core_size;
  return j;
}

/// Report schema; elapsed_ms only when `timing` is set so the default output
/// is byte-for-byte reproducible.
inline Json to_json(const DecisionReport& r, bool timing = false) {
  Json j{{"chordal", r.chordal}, {"classification", r.label()}};
  if (r.classification && r.classification->kind == SphereClassification::Kind::sphere) j["k"] = r.classification->k;
  if (r.certificate) {
    auto c = certificate_json(*r.certificate);
    j["dismantlable"] = r.dismantlable();
    j["core"] = std::move(c["core"]);
    j["certificate"] = std::move(c["certificate"]);
  }
  if (r.betti) {
    j["betti"] = detail::betti_from_zero(*r.betti);
    j["betti_minus1"] = r.betti->at(-1);
  }
  if (!r.oracle_error.empty()) j["oracle_error"] = r.oracle_error;
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline Json to_json(const TreeModel& t) {
  Json edges = Json::array();
  for (auto [a, b] : t.edges) edges.push_back({a, b});
  return {{"bags", t.bags}, {"edges", std::move(edges)}};
}

inline Json to_json(const TautCatalog& cat) {
  Json entries = Json::array();
  for (const auto& e : cat.entries) {
    Json classes = Json::array();
    for (const auto& c : e.classes)
      classes.push_back({{"graph", to_json(c.representative)}, {"labeled_count", c.labeled_count}});
    entries.push_back({{"signature", to_json(e.signature)},
                       {"labeled_count", e.labeled_count},
                       {"isomorphism_classes", e.classes.size()},
                       {"classes", std::move(classes)}});
  }
  return {{"n_max", cat.n_max}, {"chordal_counts", cat.chordal_counts}, {"entries", std::move(entries)}};
}

inline Json to_json(const std::vector<S0WedgeEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) {
    Json classes = Json::array();
    for (const auto& c : e.classes)
      classes.push_back({{"graph", to_json(c.representative)}, {"labeled_count", c.labeled_count}});
    out.push_back({{"m", e.m},
                   {"labeled_count", e.labeled_count},
                   {"isomorphism_classes", e.classes.size()},
                   {"classes", std::move(classes)}});
  }
  return out;
}

inline Json to_json(const ForestReport& r) {
  Json violations = Json::array();
  for (const auto& g : r.violations) violations.push_back(to_json(g));
  return {{"trials", r.trials}, {"outcomes", r.outcomes}, {"violations", std::move(violations)}};
}

}  // namespace indcore
