#include <doctest.h>

#include "oracles.hpp"
#include "wsat/constructions.hpp"
#include "wsat/error.hpp"
#include "wsat/percolation.hpp"
#include "wsat/solver.hpp"

using namespace wsat;

TEST_CASE("small exact values") {
  CHECK(wsat_exact(4, clique_pattern(3)).value == 3);
  CHECK(wsat_exact(5, clique_pattern(3)).value == 4);
  CHECK(wsat_exact(5, clique_pattern(4, 3)).value == 6);
  CHECK(wsat_exact(5, single_edge_pattern(2)).value == 0);
}

TEST_CASE("exact values agree with the brute-force oracle") {
  const std::vector<std::pair<std::size_t, Pattern>> cases{
      {4, clique_pattern(3)},        {4, triangle_pendant_pattern()}, {4, clique_pattern(4)},
      {5, clique_pattern(4, 3)},     {4, clique_pattern(3, 3)},       {4, single_edge_pattern(2)},
  };
  for (const auto& [n, h] : cases) {
    const auto res = wsat_exact(n, h);
    REQUIRE(res.exact());
    CHECK(res.value == oracle::wsat(n, h));
  }
}

TEST_CASE("witness and certificate are consistent") {
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto h = clique_pattern(3);
    const auto res = wsat_exact(n, h);
    REQUIRE(res.exact());
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->edge_count() == res.value);
    CHECK(oracle::percolates(*res.witness, h));
    CHECK(verify_certificate(*res.witness, h, res.certificate));
    CHECK(check_certificate(*res.witness, h, res.certificate).complete);
    CHECK(res.explored >= 1);
  }
}

TEST_CASE("K3 witnesses are trees") {
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto res = wsat_exact(n, clique_pattern(3));
    REQUIRE(res.value == n - 1);
    // n - 1 edges and connected means a tree
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<Vertex(Vertex)> find = [&](Vertex v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (const auto& e : res.witness->edges()) parent[find(e[0])] = find(e[1]);
    std::set<Vertex> roots;
    for (Vertex v = 0; v < n; ++v) roots.insert(find(v));
    CHECK(roots.size() == 1);
  }
}

TEST_CASE("clique anchor: exact equals the closed form for C(n, r) <= 20") {
  for (std::size_t r = 2; r <= 4; ++r)
    for (std::size_t n = r; binomial(n, r) <= 20; ++n)
      for (std::size_t t = r + 1; t <= n; ++t) {
        CAPTURE(n);
        CAPTURE(t);
        CAPTURE(r);
        const auto res = wsat_exact(n, clique_pattern(t, r));
        REQUIRE(res.exact());
        CHECK(res.value == clique_wsat_value(n, t, r));
      }
}

TEST_CASE("isomorphism pruning never changes the value") {
  const std::vector<std::pair<std::size_t, Pattern>> cases{
      {5, clique_pattern(3)}, {5, clique_pattern(4)}, {5, triangle_pendant_pattern()},
      {5, clique_pattern(4, 3)}, {6, clique_pattern(4, 3)}, {4, clique_pattern(4)}};
  for (const auto& [n, h] : cases) {
    if (binomial(n, h.r()) > 15) continue;
    SolverOptions off;
    off.iso_pruning = false;
    const auto a = wsat_exact(n, h);
    const auto b = wsat_exact(n, h, off);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    CHECK(a.explored <= b.explored);
  }
}

TEST_CASE("thread count does not change the result") {
  SolverOptions four;
  four.threads = 4;
  for (std::size_t n = 4; n <= 6; ++n) {
    const auto a = wsat_exact(n, clique_pattern(4));
    const auto b = wsat_exact(n, clique_pattern(4), four);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    CHECK(a.explored == b.explored);
    CHECK(to_text(a.certificate) == to_text(b.certificate));
  }
}

TEST_CASE("budget exhaustion is inconclusive, never a guess") {
  SolverOptions tiny;
  tiny.budget = 3;
  tiny.iso_pruning = false;
  const auto res = wsat_exact(5, clique_pattern(3), tiny);
  CHECK_FALSE(res.exact());
  CHECK(res.explored == 3);
  CHECK_FALSE(res.witness.has_value());
  CHECK(res.resolved_below <= 4);
  CHECK(result_line(5, clique_pattern(3), res).find("inconclusive") != std::string::npos);
  CHECK(result_line(5, clique_pattern(3), res).find(">=") != std::string::npos);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(wsat_exact(9, clique_pattern(3)), InvalidInput);
  CHECK_THROWS_AS(wsat_exact(2, clique_pattern(3, 3)), InvalidInput);
}

TEST_CASE("result line format") {
  const auto h = clique_pattern(3);
  const auto line = result_line(5, h, wsat_exact(5, h));
  CHECK(line == "wsat 5 2 " + pattern_hash(h) + " 4 exact");
}

TEST_CASE("upper bounds") {
  const auto k3 = wsat_upper(6, clique_pattern(3));
  CHECK(k3.value == 5);
  CHECK(k3.method == "clique_extremal");
  CHECK(is_weakly_saturated(k3.graph, clique_pattern(3)));

  const auto tp = wsat_upper(6, triangle_pendant_pattern());
  CHECK(tp.value <= 6);
  CHECK(tp.value == 3);
  CHECK(is_weakly_saturated(tp.graph, triangle_pendant_pattern()));

  const auto small = wsat_upper(3, clique_pattern(4));
  CHECK(small.value == 3);
  CHECK(small.method == "complete");
}

TEST_CASE("exact never exceeds upper; equal on cliques and s = 1 patterns") {
  const std::vector<std::pair<std::size_t, Pattern>> cases{
      {4, clique_pattern(3)},        {5, clique_pattern(3)},       {6, clique_pattern(3)},
      {5, clique_pattern(4)},        {6, clique_pattern(4)},       {5, clique_pattern(4, 3)},
      {4, triangle_pendant_pattern()}, {5, triangle_pendant_pattern()}, {5, single_edge_pattern(2)}};
  for (const auto& [n, h] : cases) {
    const auto ex = wsat_exact(n, h);
    const auto up = wsat_upper(n, h);
    REQUIRE(ex.exact());
    CHECK(ex.value <= up.value);
    CHECK(ex.value == up.value);
  }
}

TEST_CASE("ratio table") {
  const std::vector<std::size_t> sizes{3, 4, 5, 6, 7, 8};
  const auto rows = ratio_table(clique_pattern(3), sizes);
  REQUIRE(rows.size() == 6);
  for (const auto& row : rows) {
    CHECK(row.value == row.n - 1);
    CHECK(row.ratio == doctest::Approx(static_cast<double>(row.n - 1) / static_cast<double>(row.n)));
  }
  CHECK(rows[0].exact);
  CHECK_FALSE(rows[5].exact);  // C(8,2) = 28 > 21 falls back to the upper bound

  const std::vector<std::size_t> edge_sizes{2, 3, 4};
  for (const auto& row : ratio_table(single_edge_pattern(2), edge_sizes)) CHECK(row.ratio == 0.0);

  const std::vector<std::size_t> hyper{5, 6};
  for (const auto& row : ratio_table(clique_pattern(4, 3), hyper)) {
    CHECK(row.value == oracle::pascal(row.n - 1, 2));
    CHECK(row.ratio == doctest::Approx(static_cast<double>(row.value) / static_cast<double>(row.n * row.n)));
  }
}
