#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wsat/designs.hpp"
#include "wsat/hypercore.hpp"
#include "wsat/pattern.hpp"

namespace wsat {

/// An edge-count inequality `lhs <= rhs` evaluated on exact integers.
/// Products saturate at UINT64_MAX.
struct BoundCheck {
  std::string name;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool holds = false;
};

BoundCheck make_bound(std::string name, std::uint64_t lhs, std::uint64_t rhs);

/// A reported (never asserted) quantity.
struct ReportedRatio {
  std::string name;
  double value = 0.0;
};

struct Construction {
  Hypergraph graph;
  std::vector<BoundCheck> bounds;
};

using PhaseKey = std::function<std::int64_t(const Edge&)>;

/// A = {0, ..., size_a - 1}, B = {size_a, ..., size_a + size_b - 1}.
struct ConeSpec {
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  std::size_t h = 0;
  std::size_t r = 0;
  std::size_t s = 0;
  /// The h-subset C of A; empty selects {0, ..., h-1}.
  std::vector<Vertex> core;
};

/// All r-subsets of A, plus every other r-set f with |f \ C| <= s - 1.
/// Reports `cone_extra_edges`: |E'| <= r h^r |A|^(s-2) |B|.
Construction cone_gadget(const ConeSpec& spec);

/// lambda(f) = |f \ C|.
PhaseKey cone_phase_key(const ConeSpec& spec);

/// Places g_minus on the first k1 = g_minus.n() vertices and adds the cone
/// edges towards k2 new vertices. Requires s(H) >= 2, h <= k1, k2 <= k1 and
/// g_minus weakly H-saturated (checked with the engine).
/// Reports `padded_edge_count`: |E| <= |E^-| + r h^r k1^(s-2) k2.
Construction padded_example(const Hypergraph& g_minus, std::size_t k2, const Pattern& h,
                            unsigned threads = 1);

/// s consecutive vertex intervals V_1, ..., V_s with designated rigid
/// h-subsets R_i.
struct SpartiteSpec {
  std::size_t r = 0;
  std::size_t s = 0;
  std::size_t h = 0;
  std::vector<std::size_t> part_sizes;
  /// One h-subset per part (absolute vertex ids); empty selects the first h
  /// vertices of each part.
  std::vector<std::vector<Vertex>> rigid;
};

/// Every r-set missing some part, plus every r-set with at least r - s + 2
/// rigid vertices. E' counts the latter among edges meeting every part. With
/// equal part sizes t, reports `spartite_rigid_edges`: |E'| <= r h^(r-s+2) t^(s-2).
Construction spartite_gadget(const SpartiteSpec& spec);

/// s-1 loose vertices: rho(C), the smallest |C n V_j| over parts met only in
/// rigid vertices; at least s loose vertices: r + lambda(C); otherwise 0.
PhaseKey spartite_phase_key(const SpartiteSpec& spec);

/// l clusters of t vertices each; cluster l-1 plays V_l.
struct PercolateSpec {
  std::size_t clusters = 0;
  std::size_t cluster_size = 0;
  std::size_t h = 0;
  std::size_t r = 0;
  std::size_t s = 0;
};

struct PercolateGadget {
  /// Edges meeting at most s - 1 clusters.
  Hypergraph e1;
  /// Union over Q of the rigid-edge sets on V_l u V_Q, restricted to edges
  /// meeting all s clusters of V_Q (the others are already in E_1).
  Hypergraph e2;
  std::vector<BoundCheck> bounds;

  Hypergraph combined() const;
};

/// Reports `percolate_e2_size`: |E_2| <= r h^(r-s+2) C(l-1, s-1) t^(s-2).
PercolateGadget percolate_gadget(const PercolateSpec& spec);

/// j(e) = |e \ V_l|.
PhaseKey percolate_phase_key(const PercolateSpec& spec);

/// K_h^r on {0, ..., h-1} inside n vertices. Requires s(H) = 1 and n >= h.
Construction s1_construction(const Pattern& h, std::size_t n);

struct MainSpec {
  Pattern pattern;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t m1 = 0;
  double eps = 0.1;
  /// An m-vertex weakly H-saturated graph.
  Hypergraph g_m;
  /// Covering design on the clusters; greedy_cover when absent.
  std::optional<CoverDesign> cover;
  CoverOptions cover_options;
  unsigned threads = 1;
};

struct MainResult {
  Hypergraph graph;
  /// Copies of G_m on S_D for every block D.
  Hypergraph g_prime;
  Hypergraph e2;
  CoverDesign cover;
  std::size_t cluster_size = 0;
  std::size_t clusters = 0;
  std::size_t block_size = 0;
  std::vector<BoundCheck> bounds;
  std::vector<ReportedRatio> ratios;
  /// The engine confirmed that `graph` is weakly H-saturated.
  bool percolated = false;
};

/// Composite build: clusters of m^(1/(s-1)) vertices, a copy of G_m on the
/// union of the clusters of each cover block, plus the percolation gadget's
/// E_2. Throws InvalidInput naming the first violated invariant.
MainResult main_construction(const MainSpec& spec);

/// Every r-subset of [n] meeting {0, ..., t-r-1}. Requires n >= t >= r >= 1.
/// Reports `clique_wsat_value` (edge count vs the closed form; holds iff equal).
Construction clique_extremal(std::size_t n, std::size_t t, std::size_t r);

}  // namespace wsat
