#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wsat/certificate.hpp"
#include "wsat/hypercore.hpp"
#include "wsat/pattern.hpp"

namespace wsat {

/// Largest C(n, r) wsat_exact accepts.
inline constexpr Rank kSolverEdgeLimit = 30;

struct SolverOptions {
  /// Maximum number of percolation checks.
  std::uint64_t budget = 10'000'000;
  /// Test one graph per isomorphism class; only used for n <= 7. Classes are
  /// charged to the budget one edge count at a time.
  bool iso_pruning = true;
  unsigned threads = 1;
};

enum class WsatStatus { exact, inconclusive };

struct WsatResult {
  WsatStatus status = WsatStatus::inconclusive;
  /// wsat(n, H) when exact; otherwise the lower bound `resolved_below`.
  std::uint64_t value = 0;
  /// Every graph with fewer edges than this was checked and fails.
  std::uint64_t resolved_below = 0;
  /// The colex-least percolating graph with `value` edges, when exact.
  std::optional<Hypergraph> witness;
  SaturationCertificate certificate;
  /// Percolation checks performed. Without pruning this counts as a serial
  /// scan would; with pruning it is the number of classes tested.
  std::uint64_t explored = 0;

  bool exact() const noexcept { return status == WsatStatus::exact; }
};

/// Exhaustive wsat(n, H): for m = 0, 1, 2, ... test the m-edge subgraphs of
/// K_n^r (or one per isomorphism class) and stop at the first m where one
/// percolates. The witness is the colex-first percolating m-edge subgraph.
/// Requires C(n, r) <= kSolverEdgeLimit and matching uniformity. Never guesses:
/// an exhausted budget yields status inconclusive.
WsatResult wsat_exact(std::size_t n, const Pattern& h, const SolverOptions& options = {});

/// `wsat n r H-hash value status`; inconclusive results print `>=X` as value.
std::string result_line(std::size_t n, const Pattern& h, const WsatResult& result);

struct UpperBound {
  std::uint64_t value = 0;
  std::string method;
  Hypergraph graph;
};

/// Smallest engine-verified percolating graph among: K_n^r, the clique
/// construction for K_h^r, the s = 1 clique seed and its exact-minimum
/// refinement on h vertices, and padded clique constructions from smaller
/// k1 when s >= 2.
UpperBound wsat_upper(std::size_t n, const Pattern& h, unsigned threads = 1);

struct RatioRow {
  std::size_t n = 0;
  std::uint64_t value = 0;
  bool exact = false;
  /// value / n^(s-1)
  double ratio = 0.0;
};

struct RatioOptions {
  /// Use wsat_exact when C(n, r) is at most this.
  Rank exact_edge_limit = 21;
  SolverOptions solver;
};

std::vector<RatioRow> ratio_table(const Pattern& h, std::span<const std::size_t> sizes,
                                  const RatioOptions& options = {});

}  // namespace wsat
