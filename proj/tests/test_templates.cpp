#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wsat/error.hpp"
#include "wsat/percolation.hpp"
#include "wsat/templates.hpp"

using namespace wsat;

namespace {

/// Every r-subset of W not containing Z is present in g.
bool template_condition(const Hypergraph& g, const TemplateWitness& w, const Edge& e) {
  if (!std::includes(w.w.begin(), w.w.end(), e.begin(), e.end())) return false;
  if (!std::includes(e.begin(), e.end(), w.z.begin(), w.z.end())) return false;
  for (const auto& f : oracle::all_subsets(w.w.size(), g.r())) {
    oracle::Set img;
    for (auto i : f) img.push_back(w.w[i]);
    if (std::includes(img.begin(), img.end(), w.z.begin(), w.z.end())) continue;
    if (!g.contains(Edge(std::span<const Vertex>(img)))) return false;
  }
  return true;
}

/// Brute force: any h-set W containing e and s-set Z inside e satisfying the condition.
bool template_addable(const Hypergraph& g, const Edge& e, std::size_t h, std::size_t s) {
  for (const auto& w : oracle::all_subsets(g.n(), h)) {
    if (!std::includes(w.begin(), w.end(), e.begin(), e.end())) continue;
    for (const auto& zi : oracle::all_subsets(e.size(), s)) {
      TemplateWitness tw{w, {}};
      for (auto i : zi) tw.z.push_back(e[i]);
      if (template_condition(g, tw, e)) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("sparseness of standard patterns") {
  CHECK(sparseness(clique_pattern(3).graph()) == 2);
  CHECK(sparseness(triangle_pendant_pattern().graph()) == 1);
  for (std::size_t r = 1; r <= 5; ++r) CHECK(sparseness(single_edge_pattern(r).graph()) == 1);
  CHECK(sparseness(clique_pattern(4, 3).graph()) == 3);
  CHECK_THROWS_AS(sparseness(Hypergraph(4, 2)), InvalidInput);
}

TEST_CASE("sparseness of cliques is r") {
  for (std::size_t r = 1; r <= 4; ++r)
    for (std::size_t t = r + 1; t <= 7; ++t) CHECK(sparseness(complete_graph(t, r)) == r);
}

TEST_CASE("sparseness agrees with the subset oracle and ignores relabeling") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 2 + trial % 2;
    const auto g = oracle::random_graph(6, r, 0.4, rng);
    if (g.is_empty()) continue;
    const auto s = sparseness(g);
    CHECK(s == oracle::sparseness(g));
    CHECK(s >= 1);
    CHECK(s <= r);
    std::vector<Vertex> perm{0, 1, 2, 3, 4, 5};
    std::shuffle(perm.begin(), perm.end(), rng);
    Hypergraph relabeled(6, r);
    for (const auto& e : g.edges()) {
      std::vector<Vertex> img;
      for (auto v : e) img.push_back(perm[v]);
      relabeled.insert(Edge::sorted(img));
    }
    CHECK(sparseness(relabeled) == s);
    const auto [w, edge] = sparseness_witness(g);
    CHECK(w.size() == s);
    CHECK(edge.includes(w));
  }
}

TEST_CASE("template sizes") {
  CHECK(template_minus(2, 4, 2).edge_count() == 5);
  CHECK_FALSE(template_minus(2, 4, 2).contains(Edge{0, 1}));
  CHECK(template_minus(3, 5, 2).edge_count() == 7);
  CHECK(template_graph(3, 5, 2).graph.edge_count() == 8);
  CHECK(template_graph(3, 4, 2).graph.edge_count() == 3);
  const auto t = template_graph(2, 4, 2);
  CHECK(t.graph == complete_graph(4, 2));
  CHECK(t.special == Edge{0, 1});
  for (std::size_t h = 2; h <= 8; ++h)
    for (std::size_t r = 2; r <= std::min<std::size_t>(h, 5); ++r)
      for (std::size_t s = 2; s <= r; ++s) {
        CHECK(template_minus(r, h, s).edge_count() == oracle::pascal(h, r) - oracle::pascal(h - s, r - s));
        CHECK(template_graph(r, h, s).graph.edge_count() == oracle::pascal(h, r) - oracle::pascal(h - s, r - s) + 1);
      }
  CHECK(template_minus(3, 6, 3).edge_count() == oracle::pascal(6, 3) - 1);
  CHECK_THROWS_AS(template_minus(3, 2, 2), InvalidInput);
  CHECK_THROWS_AS(template_minus(2, 4, 3), InvalidInput);
  CHECK_THROWS_AS(template_minus(2, 4, 1), InvalidInput);
}

TEST_CASE("template copies: examples") {
  auto k4 = complete_graph(4, 2);
  k4.erase(Edge{0, 1});
  const auto w = creates_template_copy(k4, Edge{0, 1}, 4, 2);
  REQUIRE(w.has_value());
  CHECK(w->w == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(w->z == std::vector<Vertex>{0, 1});

  CHECK_FALSE(creates_template_copy(Hypergraph(5, 2), Edge{1, 3}, 4, 2).has_value());

  const auto tm = template_minus(3, 5, 2);
  const auto w3 = creates_template_copy(tm, Edge{0, 1, 4}, 5, 2);
  REQUIRE(w3.has_value());
  CHECK(w3->w == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(w3->z == std::vector<Vertex>{0, 1});

  CHECK_THROWS_AS(creates_template_copy(tm, Edge{0, 2, 3}, 5, 2), InvalidInput);
  CHECK_THROWS_AS(creates_template_copy(Hypergraph(3, 2), Edge{0, 1}, 4, 2), InvalidInput);
}

TEST_CASE("template addability agrees with brute force") {
  std::mt19937_64 rng(43);
  struct Case {
    std::size_t n, r, h, s;
  };
  for (const auto& c : std::vector<Case>{{6, 2, 4, 2}, {6, 2, 3, 2}, {6, 3, 4, 2}, {6, 3, 5, 3}, {7, 3, 5, 2}})
    for (int trial = 0; trial < 8; ++trial) {
      const auto g = oracle::random_graph(c.n, c.r, 0.7, rng);
      for (const auto& e : missing_edges(g)) {
        const auto w = creates_template_copy(g, e, c.h, c.s);
        REQUIRE(w.has_value() == template_addable(g, e, c.h, c.s));
        if (w) {
          CHECK(w->w.size() == c.h);
          CHECK(w->z.size() == c.s);
          CHECK(template_condition(g, *w, e));
        }
      }
    }
}

TEST_CASE("supergraphs of a template-minus with larger core percolate") {
  struct Case {
    std::size_t r, h, s, s_prime;
  };
  for (const auto& c : std::vector<Case>{{2, 4, 2, 2}, {3, 5, 2, 3}, {3, 6, 2, 2}, {3, 6, 3, 3}}) {
    const auto g = template_minus(c.r, c.h, c.s_prime);
    const auto res = template_closure(g, c.h, c.s);
    CHECK(res.percolated);
    CHECK(res.certificate.kind == CertificateKind::template_);
    CHECK(check_template_certificate(g, c.h, c.s, res.certificate).valid);
  }
}

TEST_CASE("template closure of a complete graph is empty") {
  const auto res = template_closure(complete_graph(6, 3), 4, 2);
  CHECK(res.percolated);
  CHECK(res.certificate.empty());
}

TEST_CASE("template closure is deterministic across thread counts") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 6; ++trial) {
    const auto g = oracle::random_graph(8, 3, 0.5, rng);
    ClosureOptions four;
    four.threads = 4;
    const auto a = template_closure(g, 5, 2);
    const auto b = template_closure(g, 5, 2, four);
    CHECK(a.closure == b.closure);
    CHECK(to_text(a.certificate) == to_text(b.certificate));
  }
}

TEST_CASE("template certificate text round trip") {
  const auto g = template_minus(3, 5, 3);
  const auto cert = template_closure(g, 5, 2).certificate;
  REQUIRE_FALSE(cert.empty());
  const auto text = to_text(cert);
  CHECK(text.find("W={") != std::string::npos);
  const auto back = parse_certificate(text);
  CHECK(back.kind == CertificateKind::template_);
  CHECK(to_text(back) == text);
  CHECK(check_template_certificate(g, 5, 2, back).complete);
  CHECK_THROWS_AS(parse_certificate("CERT template 5 3\n0 1 4 | 0 | W{0,1,2,3,4} Z={0,1}\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("CERT template 5 3\n0 1 4 | 0 | W={0,1,2,3,4} Z={1,0}\n"), ParseError);
}

TEST_CASE("template verifier rejects tampering") {
  const auto g = template_minus(3, 5, 3);
  const auto cert = template_closure(g, 5, 2).certificate;
  REQUIRE_FALSE(cert.empty());
  auto bad = cert;
  auto& w = std::get<TemplateWitness>(bad.steps[0].witness);
  w.z = {w.w[0], w.w[1]};
  if (bad.steps[0].edge.includes(w.z)) w.z = {w.w[3], w.w[4]};
  CHECK_FALSE(check_template_certificate(g, 5, 2, bad).valid);
  CHECK_FALSE(check_template_certificate(g, 5, 3, cert).valid);
}

TEST_CASE("conversion to pattern certificates") {
  // K4 has h = 4, s = 2
  const auto h = clique_pattern(4);
  const auto g = template_minus(2, 4, 2);
  const auto tc = template_closure(g, 4, 2);
  REQUIRE(tc.percolated);
  const auto pc = template_cert_to_pattern_cert(tc.certificate, h);
  CHECK(pc.kind == CertificateKind::pattern);
  CHECK(pc.size() == tc.certificate.size());
  CHECK(verify_certificate(g, h, pc));

  SaturationCertificate empty{CertificateKind::template_, 6, 2, {}};
  CHECK(template_cert_to_pattern_cert(empty, h).empty());

  CHECK_THROWS_AS(template_cert_to_pattern_cert(tc.certificate, triangle_pendant_pattern()), InvalidInput);
  CHECK_THROWS_AS(template_cert_to_pattern_cert(tc.certificate, clique_pattern(3)), InvalidInput);
  CHECK_THROWS_AS(template_cert_to_pattern_cert(pc, h), InvalidInput);
}

TEST_CASE("random embedding choices all verify") {
  const auto h = clique_pattern(4, 3);
  // star-like start: every triple through vertex 0 plus K_4^3 on {1,2,3,4}
  Hypergraph g(7, 3);
  for (const auto& e : oracle::all_subsets(7, 3))
    if (e[0] == 0 || e[2] <= 4) g.insert(Edge(std::span<const Vertex>(e)));
  const auto tc = template_closure(g, h.h(), h.s());
  REQUIRE(tc.percolated);
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    const auto pc = template_cert_to_pattern_cert(tc.certificate, h, &rng);
    CHECK(verify_certificate(g, h, pc));
  }
}
