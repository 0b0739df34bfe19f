#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace wsat {

using Vertex = std::uint32_t;
using Rank = std::uint64_t;

/// Largest uniformity an Edge can hold inline.
inline constexpr std::size_t kMaxUniformity = 8;

/// Default cap on C(n, r); every engine enumerates this many potential edges.
inline constexpr Rank kDefaultEdgeLimit = 10'000'000;

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// A strictly increasing sequence of at most kMaxUniformity vertices.
///
/// Edges order colexicographically: compare the largest elements first. Edges
/// of different sizes order by size, which never matters in practice because a
/// hypergraph only holds edges of one size.
class Edge {
 public:
  Edge() = default;
  Edge(std::initializer_list<Vertex> vertices);
  explicit Edge(std::span<const Vertex> vertices);

  /// Sorts and deduplicates before validating.
  static Edge sorted(std::vector<Vertex> vertices);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  Vertex operator[](std::size_t i) const noexcept { return v_[i]; }
  Vertex back() const noexcept { return v_[size_ - 1]; }
  const Vertex* begin() const noexcept { return v_.data(); }
  const Vertex* end() const noexcept { return v_.data() + size_; }
  std::span<const Vertex> vertices() const noexcept { return {v_.data(), size_}; }

  bool contains(Vertex v) const noexcept;
  /// True when every vertex of `other` is in this edge.
  bool includes(std::span<const Vertex> other) const noexcept;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend std::strong_ordering operator<=>(const Edge& a, const Edge& b) noexcept;

 private:
  std::array<Vertex, kMaxUniformity> v_{};
  std::uint8_t size_ = 0;
};

/// Colex rank of an r-subset of [n]. Throws InvalidInput when `e` is not a
/// valid r-subset of [n] for r = e.size().
Rank edge_rank(const Edge& e, std::size_t n);

/// Inverse of edge_rank. Throws InvalidInput for i >= C(n, r).
Edge edge_unrank(Rank i, std::size_t n, std::size_t r);

/// Precomputed C(v, j) for v <= n, 1 <= j <= r; turns ranking into r lookups.
class RankTable {
 public:
  RankTable(std::size_t n, std::size_t r);

  std::size_t n() const noexcept { return n_; }
  std::size_t r() const noexcept { return r_; }
  Rank universe() const noexcept { return universe_; }

  /// Unchecked rank of a sorted r-sequence with entries < n.
  Rank rank(std::span<const Vertex> sorted) const noexcept {
    Rank out = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) out += table_[i * (n_ + 1) + sorted[i]];
    return out;
  }
  Edge unrank(Rank i) const;

 private:
  std::size_t n_;
  std::size_t r_;
  Rank universe_;
  std::vector<Rank> table_;
};

/// An r-uniform hypergraph on vertices {0, ..., n-1}, stored as a bitset over
/// the colex ranks of all r-subsets.
class Hypergraph {
 public:
  Hypergraph(std::size_t n, std::size_t r, Rank edge_limit = kDefaultEdgeLimit);

  static Hypergraph from_edges(std::size_t n, std::size_t r, std::span<const Edge> edges,
                               Rank edge_limit = kDefaultEdgeLimit);

  std::size_t n() const noexcept { return ranks_->n(); }
  std::size_t r() const noexcept { return ranks_->r(); }
  /// C(n, r).
  Rank universe() const noexcept { return ranks_->universe(); }
  std::size_t edge_count() const noexcept { return count_; }
  bool is_complete() const noexcept { return count_ == universe(); }
  bool is_empty() const noexcept { return count_ == 0; }

  /// Throws InvalidInput unless `e` is an r-subset of [n].
  void validate(const Edge& e) const;
  bool is_valid(const Edge& e) const noexcept;

  bool contains(const Edge& e) const noexcept { return bits_.test(ranks_->rank(e.vertices())); }
  /// Unchecked membership for a sorted r-sequence.
  bool contains_sorted(std::span<const Vertex> sorted) const noexcept {
    return bits_.test(ranks_->rank(sorted));
  }
  bool contains_rank(Rank i) const noexcept { return bits_.test(i); }

  /// Returns false when the edge was already present.
  bool insert(const Edge& e);
  bool insert_rank(Rank i);
  bool erase(const Edge& e);

  Rank rank(const Edge& e) const noexcept { return ranks_->rank(e.vertices()); }
  Edge unrank(Rank i) const { return ranks_->unrank(i); }
  const RankTable& rank_table() const noexcept { return *ranks_; }

  /// Edges in colex order.
  std::vector<Edge> edges() const;

  template <class F>
  void for_each_rank(F&& f) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) f(static_cast<Rank>(i));
  }

  /// Union with a graph of the same (n, r).
  Hypergraph& operator|=(const Hypergraph& other);
  bool is_subgraph_of(const Hypergraph& other) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n() == b.n() && a.r() == b.r() && a.bits_ == b.bits_;
  }

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  std::shared_ptr<const RankTable> ranks_;
  Bits bits_;
  std::size_t count_ = 0;

  friend Hypergraph missing_edges_graph(const Hypergraph&);
};

/// K_n^r. Throws InvalidInput for n < r or r == 0.
Hypergraph complete_graph(std::size_t n, std::size_t r);

/// Edges of K_n^r absent from g, in colex order.
std::vector<Edge> missing_edges(const Hypergraph& g);

/// The complement of g inside K_n^r.
Hypergraph missing_edges_graph(const Hypergraph& g);

/// Calls f(span of k vertices) for every k-subset of `pool`, in colex order
/// of positions. Requires k <= 32.
template <class F>
void for_each_subset(std::span<const Vertex> pool, std::size_t k, F&& f) {
  const std::size_t m = pool.size();
  if (k > m) return;
  std::array<std::size_t, 32> idx{};
  std::array<Vertex, 32> out{};
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    for (std::size_t i = 0; i < k; ++i) out[i] = pool[idx[i]];
    f(std::span<const Vertex>(out.data(), k));
    std::size_t j = 0;
    while (j < k && idx[j] + 1 == (j + 1 < k ? idx[j + 1] : m)) ++j;
    if (j == k) return;
    ++idx[j];
    for (std::size_t i = 0; i < j; ++i) idx[i] = i;
  }
}

/// All k-subsets of `pool` (sorted input gives colex-ordered subsets of
/// positions). Used for small enumerations only.
std::vector<std::vector<Vertex>> subsets_of_size(std::span<const Vertex> pool, std::size_t k);

}  // namespace wsat
