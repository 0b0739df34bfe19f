#include "wsat/percolation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "closure_engine.hpp"
#include "wsat/error.hpp"

namespace wsat {

namespace {

/// Pinned-edge embedding search for one pattern. Plans are built once per
/// closure and shared read-only across workers.
class PinnedMatcher {
 public:
  explicit PinnedMatcher(const Pattern& h) : h_(h) {
    for (const auto& f : h.edges()) {
      Plan plan;
      plan.pinned = f;
      std::vector<Vertex> rest;
      for (Vertex v = 0; v < h.h(); ++v)
        if (!f.contains(v)) rest.push_back(v);
      std::stable_sort(rest.begin(), rest.end(),
                       [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
      plan.order = rest;
      // position at which each H-vertex gets its image; pinned ones first
      std::vector<std::size_t> when(h.h(), 0);
      for (std::size_t p = 0; p < rest.size(); ++p) when[rest[p]] = p + 1;
      plan.checks.assign(rest.size() + 1, {});
      for (std::size_t i = 0; i < h.edges().size(); ++i) {
        std::size_t last = 0;
        for (auto v : h.edges()[i]) last = std::max(last, when[v]);
        if (last > 0) plan.checks[last].push_back(i);
      }
      plans_.push_back(std::move(plan));
    }
  }

  std::optional<PatternWitness> find(const Hypergraph& g, const Edge& e) const {
    const auto n = g.n();
    std::vector<Vertex> mapping(h_.h(), kUnmapped);
    std::vector<char> used(n, 0);
    for (auto u : e) used[u] = 1;
    for (const auto& plan : plans_) {
      std::array<Vertex, kMaxUniformity> perm{};
      std::copy(e.begin(), e.end(), perm.begin());
      do {
        for (std::size_t i = 0; i < plan.pinned.size(); ++i) mapping[plan.pinned[i]] = perm[i];
        if (extend(g, e, plan, 0, mapping, used)) return PatternWitness{mapping, e};
      } while (std::next_permutation(perm.begin(), perm.begin() + e.size()));
    }
    return std::nullopt;
  }

 private:
  struct Plan {
    Edge pinned;
    std::vector<Vertex> order;
    /// checks[p]: H-edges whose last vertex is placed at step p (1-based).
    std::vector<std::vector<std::size_t>> checks;
  };

  bool edge_present(const Hypergraph& g, const Edge& e, const Edge& hedge,
                    const std::vector<Vertex>& mapping) const {
    std::array<Vertex, kMaxUniformity> image{};
    const auto r = hedge.size();
    for (std::size_t i = 0; i < r; ++i) image[i] = mapping[hedge[i]];
    std::sort(image.begin(), image.begin() + r);
    const std::span<const Vertex> img(image.data(), r);
    return std::equal(img.begin(), img.end(), e.begin()) || g.contains_sorted(img);
  }

  bool extend(const Hypergraph& g, const Edge& e, const Plan& plan, std::size_t pos,
              std::vector<Vertex>& mapping, std::vector<char>& used) const {
    if (pos == plan.order.size()) return true;
    const auto x = plan.order[pos];
    for (Vertex u = 0; u < g.n(); ++u) {
      if (used[u]) continue;
      mapping[x] = u;
      bool ok = true;
      for (auto i : plan.checks[pos + 1])
        if (!edge_present(g, e, h_.edges()[i], mapping)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      used[u] = 1;
      const bool done = extend(g, e, plan, pos + 1, mapping, used);
      used[u] = 0;
      if (done) return true;
    }
    mapping[x] = kUnmapped;
    return false;
  }

  const Pattern& h_;
  std::vector<Plan> plans_;
};

void check_compatible(const Hypergraph& g, const Pattern& h) {
  if (g.r() != h.r())
    throw InvalidInput("uniformity mismatch: graph is a " + std::to_string(g.r()) +
                       "-graph, pattern is a " + std::to_string(h.r()) + "-graph");
}

}  // namespace

std::optional<PatternWitness> creates_new_copy(const Hypergraph& g, const Pattern& h, const Edge& e) {
  check_compatible(g, h);
  g.validate(e);
  if (g.contains(e)) throw InvalidInput("creates_new_copy: edge already present");
  if (h.h() > g.n()) throw InvalidInput("creates_new_copy: pattern has more vertices than the host");
  return PinnedMatcher(h).find(g, e);
}

ClosureResult closure(const Hypergraph& g, const Pattern& h, const ClosureOptions& options) {
  check_compatible(g, h);
  const PinnedMatcher matcher(h);
  const bool fits = h.h() <= g.n();
  auto find = [&](const Hypergraph& snapshot, const Edge& e) -> std::optional<PatternWitness> {
    if (!fits) return std::nullopt;
    return matcher.find(snapshot, e);
  };
  return detail::run_closure(g, h.h(), CertificateKind::pattern, find, options);
}

bool is_weakly_saturated(const Hypergraph& g, const Pattern& h, unsigned threads) {
  ClosureOptions options;
  options.threads = threads;
  options.record_certificate = false;
  return closure(g, h, options).percolated;
}

VerifyReport check_certificate(const Hypergraph& g, const Pattern& h, const SaturationCertificate& cert) {
  VerifyReport report;
  auto fail = [&](std::size_t step, std::string why) {
    report.valid = false;
    report.failed_step = step;
    report.reason = std::move(why);
    return report;
  };
  if (cert.kind != CertificateKind::pattern) return fail(0, "not a pattern certificate");
  if (cert.n != g.n() || cert.r != g.r()) return fail(0, "certificate (n, r) does not match the graph");
  if (h.r() != g.r()) return fail(0, "pattern uniformity does not match the graph");

  using Set = std::vector<Vertex>;
  std::set<Set> present;
  for (const auto& e : g.edges()) present.emplace(e.begin(), e.end());

  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& step = cert.steps[i];
    const Set edge(step.edge.begin(), step.edge.end());
    if (edge.size() != g.r() || edge.back() >= g.n()) return fail(i, "edge is not an r-subset of [n]");
    if (present.contains(edge)) return fail(i, "edge already present");
    const auto* w = std::get_if<PatternWitness>(&step.witness);
    if (!w) return fail(i, "witness is not a vertex mapping");
    if (w->covered_edge != step.edge) return fail(i, "covered edge differs from the added edge");
    if (w->mapping.size() != h.h()) return fail(i, "mapping does not cover every vertex of H");
    std::set<Vertex> image;
    for (auto u : w->mapping) {
      if (u == kUnmapped) return fail(i, "mapping leaves an H-vertex unassigned");
      if (u >= g.n()) return fail(i, "mapping image out of range");
      if (!image.insert(u).second) return fail(i, "mapping is not injective");
    }
    bool covers = false;
    for (const auto& he : h.edges()) {
      Set img;
      for (auto v : he) img.push_back(w->mapping[v]);
      std::sort(img.begin(), img.end());
      if (img == edge) {
        covers = true;
      } else if (!present.contains(img)) {
        return fail(i, "image of an H-edge is missing from the host");
      }
    }
    if (!covers) return fail(i, "no H-edge maps onto the added edge");
    present.insert(edge);
  }
  report.complete = present.size() == binomial(g.n(), g.r());
  return report;
}

std::uint64_t clique_wsat_value(std::size_t n, std::size_t t, std::size_t r) {
  if (!(n >= t && t >= r && r >= 1)) throw InvalidInput("clique_wsat_value requires n >= t >= r >= 1");
  return binomial(n, r) - binomial(n - t + r, r);
}

}  // namespace wsat
