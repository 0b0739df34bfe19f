#include "wsat/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "wsat/error.hpp"
#include "wsat/percolation.hpp"

namespace wsat {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out = sat_mul(out, base);
  return out;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

void require(bool ok, const std::string& invariant) {
  if (!ok) throw InvalidInput("invariant violated: " + invariant);
}

void check_rhs(std::size_t r, std::size_t h, std::size_t s) {
  require(h >= r && r >= s && s >= 2, "h >= r >= s >= 2");
}

std::vector<Vertex> first_vertices(Vertex begin, std::size_t count) {
  std::vector<Vertex> out(count);
  std::iota(out.begin(), out.end(), begin);
  return out;
}

std::size_t count_in(const Edge& e, const std::vector<char>& mask) {
  std::size_t c = 0;
  for (auto v : e) c += mask[v] != 0;
  return c;
}

std::vector<Vertex> cone_core(const ConeSpec& spec) {
  if (spec.core.empty()) return first_vertices(0, spec.h);
  auto c = spec.core;
  std::sort(c.begin(), c.end());
  require(std::adjacent_find(c.begin(), c.end()) == c.end() && c.size() == spec.h,
          "C has exactly h distinct vertices");
  require(c.back() < spec.size_a, "C lies inside A");
  return c;
}

void check_cone(const ConeSpec& spec) {
  check_rhs(spec.r, spec.h, spec.s);
  require(spec.size_a >= spec.h, "|A| >= h");
  require(spec.size_b <= spec.size_a, "|B| <= |A|");
}

}  // namespace

BoundCheck make_bound(std::string name, std::uint64_t lhs, std::uint64_t rhs) {
  return {std::move(name), lhs, rhs, lhs <= rhs};
}

Construction cone_gadget(const ConeSpec& spec) {
  check_cone(spec);
  const auto core = cone_core(spec);
  const auto n = spec.size_a + spec.size_b;
  std::vector<char> in_core(n, 0);
  for (auto v : core) in_core[v] = 1;

  Hypergraph g(n, spec.r);
  std::uint64_t extra = 0;
  for (Rank i = 0; i < g.universe(); ++i) {
    const auto f = g.unrank(i);
    if (f.back() < spec.size_a) {
      g.insert_rank(i);
    } else if (spec.r - count_in(f, in_core) <= spec.s - 1) {
      g.insert_rank(i);
      ++extra;
    }
  }
  const auto rhs = sat_mul(sat_mul(sat_mul(spec.r, sat_pow(spec.h, spec.r)), sat_pow(spec.size_a, spec.s - 2)),
                           spec.size_b);
  return {std::move(g), {make_bound("cone_extra_edges", extra, rhs)}};
}

PhaseKey cone_phase_key(const ConeSpec& spec) {
  check_cone(spec);
  const auto core = cone_core(spec);
  std::vector<char> in_core(spec.size_a + spec.size_b, 0);
  for (auto v : core) in_core[v] = 1;
  return [in_core](const Edge& f) { return static_cast<std::int64_t>(f.size() - count_in(f, in_core)); };
}

Construction padded_example(const Hypergraph& g_minus, std::size_t k2, const Pattern& h, unsigned threads) {
  const auto k1 = g_minus.n();
  const auto r = g_minus.r();
  require(h.r() == r, "pattern and G^- share the uniformity");
  require(h.s() >= 2, "s(H) >= 2");
  require(k2 <= k1, "k2 <= k1");
  require(h.h() <= k1, "h <= k1");
  require(is_weakly_saturated(g_minus, h, threads), "G^- is weakly H-saturated");

  auto cone = cone_gadget({k1, k2, h.h(), r, h.s(), {}});
  // the cone's clique on A is replaced by G^-
  Hypergraph g(k1 + k2, r);
  for (const auto& e : g_minus.edges()) g.insert(e);
  cone.graph.for_each_rank([&](Rank i) {
    const auto e = cone.graph.unrank(i);
    if (e.back() >= k1) g.insert_rank(i);
  });
  const auto rhs = sat_add(g_minus.edge_count(),
                           sat_mul(sat_mul(sat_mul(r, sat_pow(h.h(), r)), sat_pow(k1, h.s() - 2)), k2));
  const auto count = g.edge_count();
  return {std::move(g), {cone.bounds.front(), make_bound("padded_edge_count", count, rhs)}};
}

namespace {

struct Parts {
  std::size_t n = 0;
  std::vector<std::size_t> part_of;
  std::vector<char> rigid;
};

Parts spartite_layout(const SpartiteSpec& spec) {
  check_rhs(spec.r, spec.h, spec.s);
  require(spec.part_sizes.size() == spec.s, "exactly s parts");
  Parts p;
  std::vector<Vertex> starts;
  for (auto size : spec.part_sizes) {
    require(size >= spec.h, "every part has at least h vertices");
    starts.push_back(static_cast<Vertex>(p.n));
    p.n += size;
  }
  p.part_of.resize(p.n);
  p.rigid.assign(p.n, 0);
  for (std::size_t i = 0; i < spec.s; ++i)
    for (std::size_t v = starts[i]; v < starts[i] + spec.part_sizes[i]; ++v) p.part_of[v] = i;
  require(spec.rigid.empty() || spec.rigid.size() == spec.s, "one rigid set per part");
  for (std::size_t i = 0; i < spec.s; ++i) {
    auto r_i = spec.rigid.empty() ? first_vertices(starts[i], spec.h) : spec.rigid[i];
    std::sort(r_i.begin(), r_i.end());
    require(r_i.size() == spec.h && std::adjacent_find(r_i.begin(), r_i.end()) == r_i.end(),
            "each R_i has exactly h vertices");
    for (auto v : r_i) {
      require(v < p.n && p.part_of[v] == i, "R_i lies inside V_i");
      p.rigid[v] = 1;
    }
  }
  return p;
}

std::size_t parts_hit(const Edge& e, const std::vector<std::size_t>& part_of) {
  std::array<std::size_t, kMaxUniformity> seen{};
  std::size_t count = 0;
  for (auto v : e) {
    const auto p = part_of[v];
    if (std::find(seen.begin(), seen.begin() + count, p) == seen.begin() + count) seen[count++] = p;
  }
  return count;
}

}  // namespace

Construction spartite_gadget(const SpartiteSpec& spec) {
  const auto layout = spartite_layout(spec);
  Hypergraph g(layout.n, spec.r);
  std::uint64_t rigid_edges = 0;
  const auto threshold = spec.r - spec.s + 2;
  for (Rank i = 0; i < g.universe(); ++i) {
    const auto e = g.unrank(i);
    const bool misses_part = parts_hit(e, layout.part_of) < spec.s;
    const bool mostly_rigid = count_in(e, layout.rigid) >= threshold;
    rigid_edges += mostly_rigid && !misses_part;
    if (misses_part || mostly_rigid) g.insert_rank(i);
  }
  std::vector<BoundCheck> bounds;
  const auto t = spec.part_sizes.front();
  if (std::all_of(spec.part_sizes.begin(), spec.part_sizes.end(), [t](auto x) { return x == t; })) {
    const auto rhs = sat_mul(sat_mul(spec.r, sat_pow(spec.h, threshold)), sat_pow(t, spec.s - 2));
    bounds.push_back(make_bound("spartite_rigid_edges", rigid_edges, rhs));
  }
  return {std::move(g), std::move(bounds)};
}

PhaseKey spartite_phase_key(const SpartiteSpec& spec) {
  const auto layout = spartite_layout(spec);
  const auto r = spec.r;
  const auto s = spec.s;
  return [layout, r, s](const Edge& c) -> std::int64_t {
    const auto loose = c.size() - count_in(c, layout.rigid);
    if (loose + 2 <= s) return 0;
    if (loose >= s) return static_cast<std::int64_t>(r + loose);
    // parts met only in rigid vertices (possibly not at all)
    std::vector<std::size_t> size(s, 0);
    std::vector<char> has_loose(s, 0);
    for (auto v : c) {
      ++size[layout.part_of[v]];
      if (!layout.rigid[v]) has_loose[layout.part_of[v]] = 1;
    }
    std::size_t rho = r;
    for (std::size_t j = 0; j < s; ++j)
      if (!has_loose[j]) rho = std::min(rho, size[j]);
    return static_cast<std::int64_t>(rho);
  };
}

Hypergraph PercolateGadget::combined() const {
  auto g = e1;
  g |= e2;
  return g;
}

namespace {

void check_percolate(const PercolateSpec& spec) {
  check_rhs(spec.r, spec.h, spec.s);
  require(spec.clusters >= spec.s, "l >= s");
  require(spec.cluster_size >= spec.h, "t >= h");
}

}  // namespace

PercolateGadget percolate_gadget(const PercolateSpec& spec) {
  check_percolate(spec);
  const auto l = spec.clusters;
  const auto t = spec.cluster_size;
  const auto n = l * t;
  std::vector<std::size_t> cluster_of(n);
  std::vector<char> rigid(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    cluster_of[v] = v / t;
    rigid[v] = (v % t) < spec.h;
  }

  PercolateGadget out{Hypergraph(n, spec.r), Hypergraph(n, spec.r), {}};
  for (Rank i = 0; i < out.e1.universe(); ++i)
    if (parts_hit(out.e1.unrank(i), cluster_of) <= spec.s - 1) out.e1.insert_rank(i);

  const auto threshold = spec.r - spec.s + 2;
  std::vector<Vertex> others(l - 1);
  std::iota(others.begin(), others.end(), 0);
  for (const auto& q : subsets_of_size(others, spec.s - 1)) {
    std::vector<Vertex> vq;
    for (auto c : q)
      for (std::size_t v = c * t; v < (c + 1) * t; ++v) vq.push_back(static_cast<Vertex>(v));
    for (std::size_t v = (l - 1) * t; v < n; ++v) vq.push_back(static_cast<Vertex>(v));
    std::sort(vq.begin(), vq.end());
    for (const auto& f : subsets_of_size(vq, spec.r)) {
      const Edge e{std::span<const Vertex>(f)};
      if (count_in(e, rigid) >= threshold && parts_hit(e, cluster_of) == spec.s) out.e2.insert(e);
    }
  }
  const auto rhs = sat_mul(sat_mul(sat_mul(spec.r, sat_pow(spec.h, threshold)), binomial(l - 1, spec.s - 1)),
                           sat_pow(t, spec.s - 2));
  out.bounds.push_back(make_bound("percolate_e2_size", out.e2.edge_count(), rhs));
  return out;
}

PhaseKey percolate_phase_key(const PercolateSpec& spec) {
  check_percolate(spec);
  const auto first_of_last = static_cast<Vertex>((spec.clusters - 1) * spec.cluster_size);
  return [first_of_last](const Edge& e) {
    return static_cast<std::int64_t>(std::count_if(e.begin(), e.end(), [&](Vertex v) { return v < first_of_last; }));
  };
}

Construction s1_construction(const Pattern& h, std::size_t n) {
  require(h.s() == 1, "s(H) = 1");
  require(n >= h.h(), "n >= h");
  Hypergraph g(n, h.r());
  const auto clique = complete_graph(h.h(), h.r());
  for (const auto& e : clique.edges()) g.insert(e);
  const auto count = g.edge_count();
  return {std::move(g), {make_bound("s1_edge_count", count, binomial(h.h(), h.r()))}};
}

namespace {

std::size_t integer_root_ceil(std::size_t x, std::size_t p) {
  std::size_t q = 0;
  while (sat_pow(q, p) < x) ++q;
  return q;
}

}  // namespace

MainResult main_construction(const MainSpec& spec) {
  const auto& pat = spec.pattern;
  const auto s = pat.s();
  const auto r = pat.r();
  const auto h = pat.h();
  require(s >= 2, "s(H) >= 2 (use s1_construction for s(H) = 1)");
  const auto p = s - 1;
  require(spec.m1 >= 1, "m1 >= 1");
  const auto q = integer_root_ceil(spec.m1, p);
  require(spec.m == sat_pow(q, p), "m is the next perfect (s-1)-st power at or above m1");
  require(spec.n > 0 && spec.n % q == 0, "n is a multiple of m^(1/(s-1))");
  const auto clusters = spec.n / q;
  require(clusters >= s, "cluster count l = n / m^(1/(s-1)) >= s");
  require(q >= h, "cluster size m^(1/(s-1)) >= h");
  const auto k = spec.m / q;
  require(clusters >= k, "cluster count N >= block size k");
  require(spec.g_m.n() == spec.m && spec.g_m.r() == r, "G_m is an r-graph on m vertices");
  require(is_weakly_saturated(spec.g_m, pat, spec.threads), "G_m is weakly H-saturated");

  MainResult out{Hypergraph(spec.n, r), Hypergraph(spec.n, r), Hypergraph(spec.n, r), {}, q, clusters, k, {}, {},
                 false};
  if (spec.cover) {
    out.cover = *spec.cover;
    require(out.cover.N == clusters && out.cover.k == k && out.cover.t == p,
            "cover has N = l, k = m^(1-1/(s-1)), t = s-1");
    require(verify_cover(out.cover), "cover covers every (s-1)-set of clusters");
  } else {
    out.cover = greedy_cover(clusters, k, p, spec.cover_options);
  }

  const auto gm_edges = spec.g_m.edges();
  for (const auto& block : out.cover.blocks) {
    std::vector<Vertex> s_d;
    for (auto c : block)
      for (std::size_t v = c * q; v < (c + 1) * q; ++v) s_d.push_back(static_cast<Vertex>(v));
    for (const auto& e : gm_edges) {
      std::vector<Vertex> image;
      for (auto v : e) image.push_back(s_d[v]);
      out.g_prime.insert(Edge::sorted(std::move(image)));
    }
  }

  auto gadget = percolate_gadget({clusters, q, h, r, s});
  out.e2 = std::move(gadget.e2);
  out.graph = out.g_prime;
  out.graph |= out.e2;

  out.bounds.push_back(make_bound("gprime_block_sum", out.g_prime.edge_count(),
                                  sat_mul(out.cover.blocks.size(), spec.g_m.edge_count())));
  out.bounds.push_back(gadget.bounds.front());

  const auto n_pow = std::pow(static_cast<double>(spec.n), static_cast<double>(p));
  const auto m_pow = std::pow(static_cast<double>(spec.m), static_cast<double>(p));
  const auto c_est = static_cast<double>(spec.g_m.edge_count()) / m_pow;
  const auto delta = c_est > 0 ? spec.eps / c_est : spec.eps;
  out.cover.delta = Rational(static_cast<std::int64_t>(std::llround(delta * 1e6)), 1'000'000);
  const auto rodl = rodl_bound(clusters, k, p, out.cover.delta);
  out.ratios = {
      {"gn_edges_over_n^(s-1)", static_cast<double>(out.graph.edge_count()) / n_pow},
      {"gm_edges_over_m^(s-1)", c_est},
      {"gprime_edges_over_n^(s-1)", static_cast<double>(out.g_prime.edge_count()) / n_pow},
      {"e2_edges_over_n^(s-1)", static_cast<double>(out.e2.edge_count()) / n_pow},
      {"blocks_over_rodl_bound", static_cast<double>(out.cover.blocks.size()) / boost::rational_cast<double>(rodl)},
      {"delta", delta},
  };
  out.percolated = is_weakly_saturated(out.graph, pat, spec.threads);
  return out;
}

Construction clique_extremal(std::size_t n, std::size_t t, std::size_t r) {
  require(n >= t && t >= r && r >= 1, "n >= t >= r >= 1");
  const auto hub = t - r;
  Hypergraph g(n, r);
  for (Rank i = 0; i < g.universe(); ++i)
    if (g.unrank(i)[0] < hub) g.insert_rank(i);
  const auto expected = clique_wsat_value(n, t, r);
  const auto count = g.edge_count();
  return {std::move(g), {{"clique_wsat_value", count, expected, count == expected}}};
}

}  // namespace wsat
