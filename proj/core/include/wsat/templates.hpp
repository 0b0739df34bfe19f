#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "wsat/certificate.hpp"
#include "wsat/hypercore.hpp"
#include "wsat/pattern.hpp"
#include "wsat/percolation.hpp"

namespace wsat {

/// Smallest |W| over vertex sets W lying in exactly one edge of h.
/// Throws InvalidInput for an edgeless graph.
std::size_t sparseness(const Hypergraph& h);

/// The colex-first W of minimum size, together with the unique edge containing it.
std::pair<std::vector<Vertex>, Edge> sparseness_witness(const Hypergraph& h);

/// K_h^r minus every edge containing Z = {0, ..., s-1}. Requires h >= r >= s >= 2.
Hypergraph template_minus(std::size_t r, std::size_t h, std::size_t s);

struct TemplateGraph {
  Hypergraph graph;
  /// f = {0, ..., r-1}.
  Edge special;
};

/// template_minus plus the special edge f.
TemplateGraph template_graph(std::size_t r, std::size_t h, std::size_t s);

/// Looks for an h-set W and an s-set Z with Z in e, e in W, such that every
/// r-subset of W not containing Z is an edge of g. Z runs over the s-subsets
/// of e in colex order; W grows from e by a depth-first search over vertices
/// in increasing order.
///
/// Throws InvalidInput if e is in g or g has fewer than h vertices.
std::optional<TemplateWitness> creates_template_copy(const Hypergraph& g, const Edge& e, std::size_t h,
                                                     std::size_t s);

/// T_{r,h,s}-template closure; same schedule and determinism as closure().
ClosureResult template_closure(const Hypergraph& g, std::size_t h, std::size_t s,
                               const ClosureOptions& options = {});

/// Replays a template-kind certificate from g with parameters (h, s).
VerifyReport check_template_certificate(const Hypergraph& g, std::size_t h, std::size_t s,
                                        const SaturationCertificate& cert);

/// Turns a T_{r,h,s} process into an H process for a pattern with h vertices
/// and sparseness s >= 2: at each step S goes onto Z, the edge of H holding S
/// goes onto the added edge, and the remaining vertices fill W. With `rng`,
/// each of the three blocks is matched by a random bijection instead of in
/// sorted order; any such choice is a valid embedding.
///
/// Throws InvalidInput on kind or parameter mismatch.
SaturationCertificate template_cert_to_pattern_cert(const SaturationCertificate& cert, const Pattern& h,
                                                    std::mt19937_64* rng = nullptr);

}  // namespace wsat
