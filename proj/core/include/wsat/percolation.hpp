#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "wsat/certificate.hpp"
#include "wsat/hypercore.hpp"
#include "wsat/pattern.hpp"

namespace wsat {

struct ClosureOptions {
  /// Workers for the per-round addability tests. Output does not depend on it.
  unsigned threads = 1;
  bool record_certificate = true;
  /// Labels each certificate step; unset means phase key 0.
  std::function<std::int64_t(const Edge&)> phase_key;
};

struct ClosureResult {
  Hypergraph closure;
  SaturationCertificate certificate;
  bool percolated = false;
  /// Number of rounds that added at least one edge.
  std::size_t rounds = 0;
};

/// Searches G + e for a copy of H whose image contains e. The first witness
/// in the deterministic search order is returned: edges f of H in colex
/// order, bijections f -> e in lexicographic order, then the remaining
/// H-vertices by decreasing degree onto host vertices in increasing order.
///
/// Throws InvalidInput if e is already in G, or H and G disagree on r, or H
/// has more vertices than G.
std::optional<PatternWitness> creates_new_copy(const Hypergraph& g, const Pattern& h, const Edge& e);

/// H-bootstrap closure of G with a certificate for one saturation process.
///
/// Runs in rounds: every candidate missing edge is tested against a frozen
/// snapshot, then all addable edges are applied in colex order. After the
/// first round only edges e with |e u a| <= h for some just-added a are
/// retested, since any new witness must use a just-added edge.
ClosureResult closure(const Hypergraph& g, const Pattern& h, const ClosureOptions& options = {});

bool is_weakly_saturated(const Hypergraph& g, const Pattern& h, unsigned threads = 1);

struct VerifyReport {
  bool valid = true;
  /// Index of the first failing step when !valid.
  std::size_t failed_step = 0;
  std::string reason;
  /// The replay ended at the complete graph.
  bool complete = false;

  explicit operator bool() const noexcept { return valid; }
};

/// Replays a pattern-kind certificate from G. Shares no search code with the
/// closure engine: it only checks each supplied embedding edge by edge.
VerifyReport check_certificate(const Hypergraph& g, const Pattern& h, const SaturationCertificate& cert);

inline bool verify_certificate(const Hypergraph& g, const Pattern& h, const SaturationCertificate& cert) {
  return check_certificate(g, h, cert).valid;
}

/// C(n, r) - C(n - t + r, r), the weak saturation number of K_t^r.
/// Requires n >= t >= r >= 1.
std::uint64_t clique_wsat_value(std::size_t n, std::size_t t, std::size_t r);

}  // namespace wsat
