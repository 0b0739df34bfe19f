#include "wsat/templates.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "closure_engine.hpp"
#include "wsat/error.hpp"

namespace wsat {

namespace {

void check_template_params(std::size_t r, std::size_t h, std::size_t s) {
  if (!(h >= r && r >= s && s >= 2))
    throw InvalidInput("template parameters require h >= r >= s >= 2 (got r=" + std::to_string(r) +
                       ", h=" + std::to_string(h) + ", s=" + std::to_string(s) + ")");
}

bool includes(std::span<const Vertex> outer, std::span<const Vertex> inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

}  // namespace

std::pair<std::vector<Vertex>, Edge> sparseness_witness(const Hypergraph& h) {
  if (h.is_empty()) throw InvalidInput("sparseness of an edgeless graph is undefined");
  const auto edges = h.edges();
  for (std::size_t k = 1; k <= h.r(); ++k) {
    const RankTable sub(h.n(), k);
    // colex rank of W -> (number of edges containing W, one such edge)
    std::map<Rank, std::pair<std::size_t, std::size_t>> hits;
    for (std::size_t i = 0; i < edges.size(); ++i)
      for_each_subset(edges[i].vertices(), k, [&](std::span<const Vertex> w) {
        auto [it, fresh] = hits.try_emplace(sub.rank(w), 0, i);
        ++it->second.first;
      });
    for (const auto& [rank, hit] : hits)
      if (hit.first == 1) {
        const auto w = sub.unrank(rank);
        return {std::vector<Vertex>(w.begin(), w.end()), edges[hit.second]};
      }
  }
  // unreachable: the full edge itself lies in exactly one edge
  throw InvalidInput("sparseness: no witness found");
}

std::size_t sparseness(const Hypergraph& h) { return sparseness_witness(h).first.size(); }

Hypergraph template_minus(std::size_t r, std::size_t h, std::size_t s) {
  check_template_params(r, h, s);
  Hypergraph g(h, r);
  for (Rank i = 0; i < g.universe(); ++i) {
    const auto e = g.unrank(i);
    // Z = {0..s-1} is in e iff e starts with 0..s-1
    bool has_z = true;
    for (std::size_t j = 0; j < s; ++j) has_z = has_z && e[j] == j;
    if (!has_z) g.insert_rank(i);
  }
  return g;
}

TemplateGraph template_graph(std::size_t r, std::size_t h, std::size_t s) {
  auto g = template_minus(r, h, s);
  std::vector<Vertex> f(r);
  for (std::size_t i = 0; i < r; ++i) f[i] = static_cast<Vertex>(i);
  Edge special{std::span<const Vertex>(f)};
  g.insert(special);
  return {std::move(g), special};
}

namespace {

class TemplateMatcher {
 public:
  TemplateMatcher(std::size_t h, std::size_t s) : h_(h), s_(s) {}

  std::optional<TemplateWitness> find(const Hypergraph& g, const Edge& e) const {
    if (g.n() < h_) return std::nullopt;
    std::optional<TemplateWitness> out;
    for_each_subset(e.vertices(), s_, [&](std::span<const Vertex> z) {
      if (out) return;
      std::vector<Vertex> w(e.begin(), e.end());
      if (grow(g, e, z, w, 0)) {
        std::sort(w.begin(), w.end());
        out = TemplateWitness{w, std::vector<Vertex>(z.begin(), z.end())};
      }
    });
    return out;
  }

 private:
  bool grow(const Hypergraph& g, const Edge& e, std::span<const Vertex> z, std::vector<Vertex>& w,
            Vertex from) const {
    if (w.size() == h_) return true;
    const auto r = g.r();
    // leave room for the remaining picks
    const auto need = h_ - w.size();
    for (Vertex v = from; v + need <= g.n(); ++v) {
      if (e.contains(v)) continue;
      std::vector<Vertex> sorted_w = w;
      std::sort(sorted_w.begin(), sorted_w.end());
      bool ok = true;
      for_each_subset(sorted_w, r - 1, [&](std::span<const Vertex> t) {
        if (!ok || includes(t, z)) return;
        std::array<Vertex, kMaxUniformity> edge{};
        std::copy(t.begin(), t.end(), edge.begin());
        edge[r - 1] = v;
        std::sort(edge.begin(), edge.begin() + r);
        if (!g.contains_sorted(std::span<const Vertex>(edge.data(), r))) ok = false;
      });
      if (!ok) continue;
      w.push_back(v);
      if (grow(g, e, z, w, v + 1)) return true;
      w.pop_back();
    }
    return false;
  }

  std::size_t h_;
  std::size_t s_;
};

}  // namespace

std::optional<TemplateWitness> creates_template_copy(const Hypergraph& g, const Edge& e, std::size_t h,
                                                     std::size_t s) {
  check_template_params(g.r(), h, s);
  g.validate(e);
  if (g.contains(e)) throw InvalidInput("creates_template_copy: edge already present");
  if (g.n() < h) throw InvalidInput("creates_template_copy: host has fewer than h vertices");
  return TemplateMatcher(h, s).find(g, e);
}

ClosureResult template_closure(const Hypergraph& g, std::size_t h, std::size_t s,
                               const ClosureOptions& options) {
  check_template_params(g.r(), h, s);
  const TemplateMatcher matcher(h, s);
  auto find = [&](const Hypergraph& snapshot, const Edge& e) { return matcher.find(snapshot, e); };
  return detail::run_closure(g, h, CertificateKind::template_, find, options);
}

VerifyReport check_template_certificate(const Hypergraph& g, std::size_t h, std::size_t s,
                                        const SaturationCertificate& cert) {
  VerifyReport report;
  auto fail = [&](std::size_t step, std::string why) {
    report.valid = false;
    report.failed_step = step;
    report.reason = std::move(why);
    return report;
  };
  if (cert.kind != CertificateKind::template_) return fail(0, "not a template certificate");
  if (cert.n != g.n() || cert.r != g.r()) return fail(0, "certificate (n, r) does not match the graph");
  const auto r = g.r();
  if (!(h >= r && r >= s && s >= 2)) return fail(0, "template parameters require h >= r >= s >= 2");

  using Set = std::vector<Vertex>;
  std::set<Set> present;
  for (const auto& e : g.edges()) present.emplace(e.begin(), e.end());

  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& step = cert.steps[i];
    const Set edge(step.edge.begin(), step.edge.end());
    if (edge.size() != r || edge.back() >= g.n()) return fail(i, "edge is not an r-subset of [n]");
    if (present.contains(edge)) return fail(i, "edge already present");
    const auto* w = std::get_if<TemplateWitness>(&step.witness);
    if (!w) return fail(i, "witness is not a template copy");
    if (w->w.size() != h) return fail(i, "W does not have h vertices");
    if (w->z.size() != s) return fail(i, "Z does not have s vertices");
    if (!w->w.empty() && w->w.back() >= g.n()) return fail(i, "W leaves the vertex range");
    if (!includes(edge, w->z)) return fail(i, "Z is not inside the added edge");
    if (!includes(w->w, edge)) return fail(i, "the added edge is not inside W");
    bool ok = true;
    for_each_subset(w->w, r, [&](std::span<const Vertex> f) {
      if (ok && !includes(f, w->z) && !present.contains(Set(f.begin(), f.end()))) ok = false;
    });
    if (!ok) return fail(i, "W is missing an edge that avoids Z");
    present.insert(edge);
  }
  report.complete = present.size() == binomial(g.n(), g.r());
  return report;
}

SaturationCertificate template_cert_to_pattern_cert(const SaturationCertificate& cert, const Pattern& h,
                                                    std::mt19937_64* rng) {
  if (cert.kind != CertificateKind::template_) throw InvalidInput("expected a template certificate");
  if (h.s() < 2) throw InvalidInput("pattern sparseness must be at least 2");
  if (cert.r != h.r()) throw InvalidInput("certificate and pattern disagree on uniformity");

  const auto& s_set = h.sparse_set();
  const auto& eh = h.sparse_edge();
  std::vector<Vertex> eh_rest, outside;
  for (auto v : eh)
    if (std::find(s_set.begin(), s_set.end(), v) == s_set.end()) eh_rest.push_back(v);
  for (Vertex v = 0; v < h.h(); ++v)
    if (!eh.contains(v)) outside.push_back(v);

  SaturationCertificate out{CertificateKind::pattern, cert.n, cert.r, {}};
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& step = cert.steps[i];
    const auto& tw = std::get<TemplateWitness>(step.witness);
    if (tw.w.size() != h.h() || tw.z.size() != h.s())
      throw InvalidInput("step " + std::to_string(i) + ": template parameters differ from (h, s) of H");
    if (!includes(step.edge.vertices(), tw.z) || !includes(tw.w, step.edge.vertices()))
      throw InvalidInput("step " + std::to_string(i) + ": malformed template witness");

    std::vector<Vertex> z = tw.z, e_rest, w_rest;
    for (auto v : step.edge)
      if (!std::binary_search(z.begin(), z.end(), v)) e_rest.push_back(v);
    for (auto v : tw.w)
      if (!step.edge.contains(v)) w_rest.push_back(v);
    if (rng) {
      std::shuffle(z.begin(), z.end(), *rng);
      std::shuffle(e_rest.begin(), e_rest.end(), *rng);
      std::shuffle(w_rest.begin(), w_rest.end(), *rng);
    }
    std::vector<Vertex> mapping(h.h(), kUnmapped);
    for (std::size_t j = 0; j < s_set.size(); ++j) mapping[s_set[j]] = z[j];
    for (std::size_t j = 0; j < eh_rest.size(); ++j) mapping[eh_rest[j]] = e_rest[j];
    for (std::size_t j = 0; j < outside.size(); ++j) mapping[outside[j]] = w_rest[j];
    out.steps.push_back({step.edge, PatternWitness{std::move(mapping), step.edge}, step.phase_key});
  }
  return out;
}

}  // namespace wsat
