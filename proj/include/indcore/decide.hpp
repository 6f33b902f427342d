#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "indcore/chordal.hpp"
#include "indcore/complex.hpp"
#include "indcore/dismantle.hpp"
#include "indcore/homology.hpp"

namespace indcore {

struct DecideOptions {
  DismantlePolicy policy;
  bool unsafe = false;  ///< dismantle non-chordal inputs too (reported, never classified)
  bool oracle = false;  ///< attach reduced Betti numbers of Ind(G)
  HomologyOptions homology;
};

/// Graphs above this order skip the homology oracle: building Ind(G) alone
/// can be exponential.
inline constexpr std::size_t kOracleVertexLimit = 30;

struct DecisionReport {
  bool chordal = false;
  std::optional<DismantleCertificate> certificate;
  std::optional<SphereClassification> classification;
  std::optional<HomotopySignature> betti;
  std::string oracle_error;
  double elapsed_ms = 0.0;

  bool dismantlable() const { return certificate && certificate->core.order() == 1; }

  std::string label() const {
    if (!classification) return "unknown(non-chordal)";
    return to_string(classification->kind);
  }
};

inline DecisionReport decide(const Graph& g, const DecideOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  DecisionReport r;
  r.chordal = is_chordal(g);
  if (r.chordal || options.unsafe) r.certificate = compute_core(g, options.policy);
  if (r.chordal) r.classification = classify_core(r.certificate->core);
  if (options.oracle) {
    if (g.order() > kOracleVertexLimit) {
      r.oracle_error = "graph has more than " + std::to_string(kOracleVertexLimit) + " vertices";
    } else {
      try {
        r.betti = reduced_betti(independence_complex(g), options.homology);
      } catch (const LimitExceeded& e) {
        r.oracle_error = e.what();
      }
    }
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace indcore
