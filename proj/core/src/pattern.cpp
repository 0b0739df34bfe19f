#include "wsat/pattern.hpp"

#include <charconv>
#include <cstdio>

#include "wsat/error.hpp"
#include "wsat/hypergraph_io.hpp"
#include "wsat/templates.hpp"

namespace wsat {

Pattern::Pattern(Hypergraph graph) : graph_(std::move(graph)) {
  if (graph_.is_empty()) throw InvalidInput("pattern must have at least one edge");
  edges_ = graph_.edges();
  degree_.assign(graph_.n(), 0);
  for (const auto& e : edges_)
    for (auto v : e) ++degree_[v];
  auto [set, edge] = sparseness_witness(graph_);
  s_ = set.size();
  sparse_set_ = std::move(set);
  sparse_edge_ = edge;
}

namespace {

std::optional<std::size_t> parse_size(std::string_view s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Pattern clique_pattern(std::size_t t, std::size_t r) { return Pattern(complete_graph(t, r)); }

Pattern single_edge_pattern(std::size_t r) { return Pattern(complete_graph(r, r)); }

Pattern triangle_pendant_pattern() {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {2, 3}};
  return Pattern(Hypergraph::from_edges(4, 2, edges));
}

std::optional<Pattern> named_pattern(std::string_view name) {
  if (name == "triangle+pendant") return triangle_pendant_pattern();
  if (name == "single-edge") return single_edge_pattern(2);
  if (name.starts_with("edge^")) {
    const auto r = parse_size(name.substr(5));
    if (!r || *r == 0 || *r > kMaxUniformity) return std::nullopt;
    return single_edge_pattern(*r);
  }
  if (name.starts_with("K")) {
    const auto body = name.substr(1);
    const auto caret = body.find('^');
    const auto t = parse_size(body.substr(0, caret));
    std::optional<std::size_t> r = 2;
    if (caret != std::string_view::npos) r = parse_size(body.substr(caret + 1));
    if (!t || !r || *r == 0 || *r > kMaxUniformity || *t < *r) return std::nullopt;
    return clique_pattern(*t, *r);
  }
  return std::nullopt;
}

std::string pattern_hash(const Pattern& p) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : to_text(p.graph())) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace wsat
