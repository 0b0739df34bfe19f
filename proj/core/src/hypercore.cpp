#include "wsat/hypercore.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "wsat/error.hpp"

namespace wsat {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ unsigned __int128 out = 1;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
    if (out > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(out);
}

namespace {

void check_increasing(std::span<const Vertex> vs) {
  if (vs.size() > kMaxUniformity)
    throw InvalidInput("edge has " + std::to_string(vs.size()) + " vertices; at most " +
                       std::to_string(kMaxUniformity) + " supported");
  for (std::size_t i = 1; i < vs.size(); ++i)
    if (vs[i - 1] >= vs[i]) throw InvalidInput("edge vertices must be strictly increasing");
}

}  // namespace

Edge::Edge(std::initializer_list<Vertex> vertices)
    : Edge(std::span<const Vertex>(vertices.begin(), vertices.size())) {}

Edge::Edge(std::span<const Vertex> vertices) {
  check_increasing(vertices);
  std::copy(vertices.begin(), vertices.end(), v_.begin());
  size_ = static_cast<std::uint8_t>(vertices.size());
}

Edge Edge::sorted(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return Edge(std::span<const Vertex>(vertices));
}

bool Edge::contains(Vertex v) const noexcept { return std::binary_search(begin(), end(), v); }

bool Edge::includes(std::span<const Vertex> other) const noexcept {
  return std::all_of(other.begin(), other.end(), [this](Vertex v) { return contains(v); });
}

std::strong_ordering operator<=>(const Edge& a, const Edge& b) noexcept {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  for (std::size_t i = a.size_; i-- > 0;)
    if (a.v_[i] != b.v_[i]) return a.v_[i] <=> b.v_[i];
  return std::strong_ordering::equal;
}

Rank edge_rank(const Edge& e, std::size_t n) {
  if (e.empty()) throw InvalidInput("edge_rank: empty edge");
  if (e.back() >= n) throw InvalidInput("edge_rank: vertex out of range");
  Rank out = 0;
  for (std::size_t i = 0; i < e.size(); ++i) out += binomial(e[i], i + 1);
  return out;
}

Edge edge_unrank(Rank i, std::size_t n, std::size_t r) {
  if (r == 0 || r > kMaxUniformity || r > n) throw InvalidInput("edge_unrank: bad uniformity");
  if (i >= binomial(n, r)) throw InvalidInput("edge_unrank: index out of range");
  std::array<Vertex, kMaxUniformity> out{};
  std::uint64_t bound = n;
  for (std::size_t j = r; j-- > 0;) {
    // largest v < bound with C(v, j+1) <= i
    std::uint64_t v = bound - 1;
    while (binomial(v, j + 1) > i) --v;
    out[j] = static_cast<Vertex>(v);
    i -= binomial(v, j + 1);
    bound = v;
  }
  return Edge(std::span<const Vertex>(out.data(), r));
}

RankTable::RankTable(std::size_t n, std::size_t r) : n_(n), r_(r), universe_(binomial(n, r)) {
  table_.resize(r * (n + 1));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t v = 0; v <= n; ++v) table_[j * (n + 1) + v] = binomial(v, j + 1);
}

Edge RankTable::unrank(Rank i) const { return edge_unrank(i, n_, r_); }

Hypergraph::Hypergraph(std::size_t n, std::size_t r, Rank edge_limit) {
  if (r == 0) throw InvalidInput("uniformity must be at least 1");
  if (r > kMaxUniformity)
    throw InvalidInput("uniformity " + std::to_string(r) + " exceeds the supported maximum " +
                       std::to_string(kMaxUniformity));
  const auto universe = binomial(n, r);
  if (universe > edge_limit)
    throw InvalidInput("C(" + std::to_string(n) + ", " + std::to_string(r) + ") = " +
                       std::to_string(universe) + " exceeds the edge limit " +
                       std::to_string(edge_limit));
  ranks_ = std::make_shared<const RankTable>(n, r);
  bits_.resize(universe);
}

Hypergraph Hypergraph::from_edges(std::size_t n, std::size_t r, std::span<const Edge> edges,
                                  Rank edge_limit) {
  Hypergraph g(n, r, edge_limit);
  for (const auto& e : edges) g.insert(e);
  return g;
}

bool Hypergraph::is_valid(const Edge& e) const noexcept {
  return e.size() == r() && e.back() < n();
}

void Hypergraph::validate(const Edge& e) const {
  if (e.size() != r())
    throw InvalidInput("edge of size " + std::to_string(e.size()) + " in a " + std::to_string(r()) +
                       "-graph");
  if (e.back() >= n())
    throw InvalidInput("vertex " + std::to_string(e.back()) + " out of range for n = " +
                       std::to_string(n()));
}

bool Hypergraph::insert(const Edge& e) {
  validate(e);
  return insert_rank(rank(e));
}

bool Hypergraph::insert_rank(Rank i) {
  if (bits_.test(i)) return false;
  bits_.set(i);
  ++count_;
  return true;
}

bool Hypergraph::erase(const Edge& e) {
  validate(e);
  const auto i = rank(e);
  if (!bits_.test(i)) return false;
  bits_.reset(i);
  --count_;
  return true;
}

std::vector<Edge> Hypergraph::edges() const {
  std::vector<Edge> out;
  out.reserve(count_);
  for_each_rank([&](Rank i) { out.push_back(unrank(i)); });
  return out;
}

Hypergraph& Hypergraph::operator|=(const Hypergraph& other) {
  if (other.n() != n() || other.r() != r()) throw InvalidInput("union of graphs with different (n, r)");
  bits_ |= other.bits_;
  count_ = bits_.count();
  return *this;
}

bool Hypergraph::is_subgraph_of(const Hypergraph& other) const {
  return other.n() == n() && other.r() == r() && bits_.is_subset_of(other.bits_);
}

Hypergraph complete_graph(std::size_t n, std::size_t r) {
  if (r == 0 || n < r) throw InvalidInput("complete_graph requires n >= r >= 1");
  Hypergraph g(n, r);
  for (Rank i = 0; i < g.universe(); ++i) g.insert_rank(i);
  return g;
}

Hypergraph missing_edges_graph(const Hypergraph& g) {
  Hypergraph out = g;
  out.bits_.flip();
  out.count_ = out.bits_.count();
  return out;
}

std::vector<Edge> missing_edges(const Hypergraph& g) { return missing_edges_graph(g).edges(); }

std::vector<std::vector<Vertex>> subsets_of_size(std::span<const Vertex> pool, std::size_t k) {
  std::vector<std::vector<Vertex>> out;
  if (k > pool.size()) return out;
  if (k == 0) return {{}};
  std::vector<std::size_t> idx(k);
  // colex over positions: advance the lowest index that can move
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<Vertex> s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = pool[idx[i]];
    out.push_back(std::move(s));
    std::size_t j = 0;
    while (j < k && idx[j] + 1 == (j + 1 < k ? idx[j + 1] : pool.size())) ++j;
    if (j == k) break;
    ++idx[j];
    for (std::size_t i = 0; i < j; ++i) idx[i] = i;
  }
  return out;
}

}  // namespace wsat
