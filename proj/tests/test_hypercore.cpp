#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "wsat/error.hpp"
#include "wsat/hypercore.hpp"
#include "wsat/hypergraph_io.hpp"
#include "wsat/pattern.hpp"

using namespace wsat;

TEST_CASE("binomial agrees with Pascal's triangle") {
  for (std::uint64_t n = 0; n <= 30; ++n)
    for (std::uint64_t k = 0; k <= n + 1; ++k) CHECK(binomial(n, k) == oracle::pascal(n, k));
  CHECK(binomial(200, 100) == UINT64_MAX);
}

TEST_CASE("colex rank of the first and last pairs") {
  CHECK(edge_rank(Edge{0, 1}, 4) == 0);
  CHECK(edge_unrank(5, 4, 2) == Edge{2, 3});
}

TEST_CASE("rank and unrank are inverse on all 3-subsets of [6]") {
  for (Rank i = 0; i < 20; ++i) CHECK(edge_rank(edge_unrank(i, 6, 3), 6) == i);
}

TEST_CASE("rank order is colex order") {
  for (std::size_t n = 1; n <= 9; ++n)
    for (std::size_t r = 1; r <= std::min<std::size_t>(n, 5); ++r) {
      const auto u = binomial(n, r);
      for (Rank i = 0; i + 1 < u; ++i) CHECK(edge_unrank(i, n, r) < edge_unrank(i + 1, n, r));
      for (Rank i = 0; i < u; ++i) REQUIRE(edge_rank(edge_unrank(i, n, r), n) == i);
    }
}

TEST_CASE("round trip for every (n, r) with C(n, r) up to 1e5") {
  for (std::size_t r = 1; r <= kMaxUniformity; ++r)
    for (std::size_t n = r; binomial(n, r) <= 100'000 && n <= 60; ++n) {
      const RankTable table(n, r);
      const auto u = binomial(n, r);
      // sampled stride keeps the test fast while touching both ends
      const Rank step = u > 5000 ? u / 2000 : 1;
      for (Rank i = 0; i < u; i += step) {
        const auto e = table.unrank(i);
        REQUIRE(table.rank(e.vertices()) == i);
      }
      CHECK(table.rank(table.unrank(u - 1).vertices()) == u - 1);
    }
}

TEST_CASE("malformed edges and indices are rejected") {
  CHECK_THROWS_AS(edge_unrank(6, 4, 2), InvalidInput);
  CHECK_THROWS_AS(Edge({2, 1}), InvalidInput);
  CHECK_THROWS_AS(Edge({1, 1}), InvalidInput);
  CHECK_THROWS_AS(edge_rank(Edge{0, 4}, 4), InvalidInput);
  Hypergraph g(4, 2);
  CHECK_THROWS_AS(g.insert(Edge{0, 1, 2}), InvalidInput);
  CHECK_THROWS_AS(g.insert(Edge{0, 7}), InvalidInput);
}

TEST_CASE("complete graph sizes") {
  CHECK(complete_graph(4, 2).edge_count() == 6);
  CHECK(complete_graph(5, 3).edge_count() == 10);
  CHECK(complete_graph(7, 4).edge_count() == oracle::pascal(7, 4));
  CHECK_THROWS_AS(complete_graph(2, 3), InvalidInput);
  CHECK(missing_edges(complete_graph(6, 3)).empty());
  CHECK(missing_edges(Hypergraph(6, 3)).size() == 20);
}

TEST_CASE("edge limit is enforced") {
  CHECK_THROWS_AS(Hypergraph(100, 5), InvalidInput);
  CHECK_NOTHROW(Hypergraph(100, 5, 100'000'000));
}

TEST_CASE("missing edges of a path") {
  const auto g = Hypergraph::from_edges(3, 2, std::vector<Edge>{{0, 1}, {1, 2}});
  const auto missing = missing_edges(g);
  REQUIRE(missing.size() == 1);
  CHECK(missing[0] == Edge{0, 2});
}

TEST_CASE("missing edges complement random graphs in colex order") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_graph(7, 3, 0.4, rng);
    const auto missing = missing_edges(g);
    CHECK(missing.size() + g.edge_count() == oracle::pascal(7, 3));
    CHECK(std::is_sorted(missing.begin(), missing.end()));
    for (const auto& e : missing) CHECK_FALSE(g.contains(e));
  }
}

TEST_CASE("edge sets behave as sets") {
  Hypergraph a(5, 2), b(5, 2);
  CHECK(a.insert(Edge{0, 1}));
  CHECK_FALSE(a.insert(Edge{0, 1}));
  a.insert(Edge{2, 4});
  b.insert(Edge{2, 4});
  b.insert(Edge{0, 1});
  CHECK(a == b);
  CHECK(a.edge_count() == 2);
  CHECK(a.erase(Edge{0, 1}));
  CHECK_FALSE(a.erase(Edge{0, 1}));
  CHECK(a.is_subgraph_of(b));
  CHECK_FALSE(b.is_subgraph_of(a));
}

TEST_CASE("subset enumeration matches the bitmask oracle") {
  std::vector<Vertex> pool{0, 1, 2, 3, 4, 5, 6};
  for (std::size_t k = 0; k <= 7; ++k) {
    const auto subs = subsets_of_size(pool, k);
    CHECK(subs.size() == oracle::pascal(7, k));
    std::set<std::vector<Vertex>> seen(subs.begin(), subs.end());
    CHECK(seen.size() == subs.size());
    std::size_t calls = 0;
    for_each_subset(pool, k, [&](std::span<const Vertex> s) {
      CHECK(std::vector<Vertex>(s.begin(), s.end()) == subs[calls]);
      ++calls;
    });
    CHECK(calls == subs.size());
  }
}

TEST_CASE("hypergraph text round trip is byte-exact") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = oracle::random_graph(8, 3, 0.3, rng);
    const auto text = to_text(g);
    const auto back = parse_hypergraph(text);
    CHECK(back == g);
    CHECK(to_text(back) == text);
  }
}

TEST_CASE("reader skips comments and reports line numbers") {
  const auto g = parse_hypergraph("# header comment\n4 2\n\n0 1\n  # inner\n2 3\n");
  CHECK(g.edge_count() == 2);
  try {
    parse_hypergraph("4 2\n0 1\n1 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  try {
    parse_hypergraph("4 2\n0 1\n0 9\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_hypergraph("4\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("4 2\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("4 2\n0 x\n"), ParseError);
}

TEST_CASE("pattern data") {
  const auto k3 = clique_pattern(3);
  CHECK(k3.h() == 3);
  CHECK(k3.s() == 2);
  CHECK(k3.degree(0) == 2);
  const auto tp = triangle_pendant_pattern();
  CHECK(tp.s() == 1);
  CHECK(tp.sparse_set() == std::vector<Vertex>{3});
  CHECK(tp.sparse_edge() == Edge{2, 3});
  CHECK_THROWS_AS(Pattern(Hypergraph(4, 2)), InvalidInput);
  CHECK(named_pattern("K4^3")->s() == 3);
  CHECK(named_pattern("edge^3")->graph().edge_count() == 1);
  CHECK(named_pattern("single-edge")->r() == 2);
  CHECK_FALSE(named_pattern("K2^3").has_value());
  CHECK_FALSE(named_pattern("banana").has_value());
  CHECK(pattern_hash(k3) == pattern_hash(*named_pattern("K3")));
  CHECK(pattern_hash(k3) != pattern_hash(clique_pattern(4)));
}
