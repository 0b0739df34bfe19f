#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wsat/hypercore.hpp"

namespace wsat {

/// The fixed r-graph H together with data derived from it once: its
/// sparseness s, the colex-first sparseness witness S and the unique edge of
/// H containing S.
class Pattern {
 public:
  /// Throws InvalidInput for an edgeless graph (sparseness is undefined).
  explicit Pattern(Hypergraph graph);

  const Hypergraph& graph() const noexcept { return graph_; }
  std::size_t h() const noexcept { return graph_.n(); }
  std::size_t r() const noexcept { return graph_.r(); }
  std::size_t s() const noexcept { return s_; }

  /// Edges of H in colex order.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t degree(Vertex v) const noexcept { return degree_[v]; }

  /// S: an s-set of vertices lying in exactly one edge of H.
  const std::vector<Vertex>& sparse_set() const noexcept { return sparse_set_; }
  /// The edge of H containing S.
  const Edge& sparse_edge() const noexcept { return sparse_edge_; }

 private:
  Hypergraph graph_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degree_;
  std::size_t s_ = 0;
  std::vector<Vertex> sparse_set_;
  Edge sparse_edge_;
};

/// Built-in shorthands: `K<t>` (graph clique), `K<t>^<r>`, `edge^<r>` and
/// `triangle+pendant` and `single-edge` (edge^2). Returns nullopt for anything else.
std::optional<Pattern> named_pattern(std::string_view name);

Pattern clique_pattern(std::size_t t, std::size_t r = 2);
Pattern single_edge_pattern(std::size_t r);
/// Triangle {0,1,2} plus the pendant edge {2,3}.
Pattern triangle_pendant_pattern();

/// FNV-1a over the canonical text of H, as 16 hex digits.
std::string pattern_hash(const Pattern& p);

}  // namespace wsat
