#include "wsat/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "parallel.hpp"
#include "wsat/constructions.hpp"
#include "wsat/error.hpp"
#include "wsat/percolation.hpp"

namespace wsat {

namespace {

using Mask = std::uint32_t;

constexpr std::size_t kChunk = 2048;
constexpr std::size_t kIsoMaxVertices = 7;

/// Canonical form of an edge mask: the numerically smallest image over all
/// vertex permutations.
class Canonizer {
 public:
  Canonizer(std::size_t n, std::size_t r) {
    const RankTable ranks(n, r);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const auto u = ranks.universe();
    std::vector<Edge> edges;
    for (Rank i = 0; i < u; ++i) edges.push_back(ranks.unrank(i));
    do {
      std::vector<std::uint8_t> map(u);
      for (Rank i = 0; i < u; ++i) {
        std::vector<Vertex> img;
        for (auto v : edges[i]) img.push_back(perm[v]);
        std::sort(img.begin(), img.end());
        map[i] = static_cast<std::uint8_t>(ranks.rank(img));
      }
      maps_.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  Mask canonical(Mask mask) const {
    Mask best = ~Mask{0};
    for (const auto& map : maps_) {
      Mask image = 0;
      for (auto m = mask; m; m &= m - 1) image |= Mask{1} << map[std::countr_zero(m)];
      best = std::min(best, image);
    }
    return best;
  }

 private:
  std::vector<std::vector<std::uint8_t>> maps_;
};

Mask next_combination(Mask x) {
  // Gosper's hack: the next larger integer with the same popcount
  const std::uint64_t v = x;
  const std::uint64_t c = v & (~v + 1);
  const std::uint64_t r = v + c;
  return static_cast<Mask>((((r ^ v) >> 2) / c) | r);
}

Hypergraph graph_of(const Hypergraph& empty, Mask mask) {
  auto g = empty;
  for (auto m = mask; m; m &= m - 1) g.insert_rank(static_cast<Rank>(std::countr_zero(m)));
  return g;
}

Mask first_combination(unsigned m) { return m == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << m) - 1); }

Mask last_combination(unsigned m, unsigned u) {
  return m == 0 ? 0 : static_cast<Mask>(((std::uint64_t{1} << m) - 1) << (u - m));
}

struct Search {
  std::size_t n;
  const Pattern& h;
  const SolverOptions& options;
  Hypergraph empty;
  unsigned u;

  std::vector<char> percolates(const std::vector<Mask>& masks) const {
    std::vector<char> ok(masks.size(), 0);
    detail::parallel_for(masks.size(), options.threads,
                         [&](std::size_t i) { ok[i] = is_weakly_saturated(graph_of(empty, masks[i]), h); });
    return ok;
  }

  void finish(WsatResult& out, unsigned m, Mask witness) const {
    out.status = WsatStatus::exact;
    out.value = m;
    out.witness = graph_of(empty, witness);
    out.certificate = closure(*out.witness, h).certificate;
  }

  /// Tests every m-edge subgraph in colex order.
  WsatResult plain() const {
    WsatResult out;
    for (unsigned m = 0; m <= u; ++m) {
      out.resolved_below = m;
      const Mask last = last_combination(m, u);
      Mask cursor = first_combination(m);
      bool more = true;
      while (more) {
        std::vector<Mask> chunk;
        while (more && chunk.size() < kChunk) {
          chunk.push_back(cursor);
          if (cursor == last)
            more = false;
          else
            cursor = next_combination(cursor);
        }
        bool exhausted = false;
        const auto remaining = options.budget - out.explored;
        if (chunk.size() > remaining) {
          chunk.resize(remaining);
          exhausted = true;
        }
        const auto ok = percolates(chunk);
        const auto hit = std::find(ok.begin(), ok.end(), 1);
        if (hit != ok.end()) {
          const auto idx = static_cast<std::size_t>(hit - ok.begin());
          out.explored += idx + 1;
          finish(out, m, chunk[idx]);
          return out;
        }
        out.explored += chunk.size();
        if (exhausted) {
          out.value = m;
          return out;
        }
      }
    }
    throw InvalidInput("wsat_exact: no percolating graph found");
  }

  /// Tests one representative per isomorphism class. The m-edge classes are
  /// the canonical forms of one-edge extensions of the (m-1)-edge classes.
  /// The witness is then the first m-edge subgraph in colex order whose class
  /// percolates. Budget is charged a whole level at a time.
  WsatResult by_classes() const {
    const Canonizer canon(n, h.r());
    WsatResult out;
    std::vector<Mask> level{0};
    for (unsigned m = 0; m <= u; ++m) {
      out.resolved_below = m;
      if (level.size() > options.budget - out.explored) {
        out.value = m;
        return out;
      }
      const auto ok = percolates(level);
      out.explored += level.size();
      std::unordered_set<Mask> good;
      for (std::size_t i = 0; i < level.size(); ++i)
        if (ok[i]) good.insert(level[i]);
      if (!good.empty()) {
        const Mask last = last_combination(m, u);
        for (Mask cursor = first_combination(m);; cursor = next_combination(cursor)) {
          if (good.count(canon.canonical(cursor))) {
            finish(out, m, cursor);
            return out;
          }
          if (cursor == last) break;
        }
        throw InvalidInput("wsat_exact: percolating class without a representative");
      }
      if (m == u) break;
      std::vector<std::pair<Mask, unsigned>> grow;
      for (auto c : level)
        for (unsigned bit = 0; bit < u; ++bit)
          if (!(c >> bit & 1u)) grow.emplace_back(c, bit);
      std::vector<Mask> next(grow.size());
      detail::parallel_for(grow.size(), options.threads, [&](std::size_t i) {
        next[i] = canon.canonical(grow[i].first | Mask{1} << grow[i].second);
      });
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      level = std::move(next);
    }
    throw InvalidInput("wsat_exact: no percolating graph found");
  }
};

}  // namespace

WsatResult wsat_exact(std::size_t n, const Pattern& h, const SolverOptions& options) {
  const auto r = h.r();
  if (n < r) throw InvalidInput("wsat_exact requires n >= r");
  const auto universe = binomial(n, r);
  if (universe > kSolverEdgeLimit)
    throw InvalidInput("wsat_exact requires C(n, r) <= " + std::to_string(kSolverEdgeLimit) + " (got " +
                       std::to_string(universe) + ")");
  const Search search{n, h, options, Hypergraph(n, r), static_cast<unsigned>(universe)};
  if (options.iso_pruning && n <= kIsoMaxVertices) return search.by_classes();
  return search.plain();
}

std::string result_line(std::size_t n, const Pattern& h, const WsatResult& result) {
  std::ostringstream os;
  os << "wsat " << n << ' ' << h.r() << ' ' << pattern_hash(h) << ' ';
  if (result.exact())
    os << result.value << " exact";
  else
    os << ">=" << result.resolved_below << " inconclusive";
  return os.str();
}

UpperBound wsat_upper(std::size_t n, const Pattern& h, unsigned threads) {
  const auto r = h.r();
  UpperBound best{binomial(n, r), "complete", complete_graph(n, r)};
  auto offer = [&](const Hypergraph& g, const std::string& method) {
    if (g.edge_count() < best.value && is_weakly_saturated(g, h, threads)) best = {g.edge_count(), method, g};
  };
  if (n < h.h()) return best;

  offer(clique_extremal(n, h.h(), r).graph, "clique_extremal");
  if (h.s() == 1) {
    offer(s1_construction(h, n).graph, "s1_construction");
    // a smaller seed that percolates inside h vertices does as well as K_h^r
    if (binomial(h.h(), r) <= 20) {
      SolverOptions small;
      small.budget = 1'000'000;
      small.threads = threads;
      const auto seed = wsat_exact(h.h(), h, small);
      if (seed.exact()) {
        Hypergraph g(n, r);
        for (const auto& e : seed.witness->edges()) g.insert(e);
        offer(g, "s1_exact_seed");
      }
    }
  } else {
    for (auto k1 = std::max(h.h(), (n + 1) / 2); k1 < n; ++k1) {
      const auto seed = clique_extremal(k1, h.h(), r).graph;
      try {
        offer(padded_example(seed, n - k1, h, threads).graph, "padded_clique_extremal");
      } catch (const InvalidInput&) {
        // seed not saturated for this H; nothing to pad
      }
    }
  }
  return best;
}

std::vector<RatioRow> ratio_table(const Pattern& h, std::span<const std::size_t> sizes,
                                  const RatioOptions& options) {
  std::vector<RatioRow> rows;
  const auto exponent = static_cast<double>(h.s() - 1);
  for (auto n : sizes) {
    RatioRow row{n, 0, false, 0.0};
    if (n >= h.r() && binomial(n, h.r()) <= std::min<Rank>(options.exact_edge_limit, kSolverEdgeLimit)) {
      const auto res = wsat_exact(n, h, options.solver);
      if (res.exact()) {
        row.value = res.value;
        row.exact = true;
      }
    }
    if (!row.exact) row.value = wsat_upper(n, h, options.solver.threads).value;
    row.ratio = static_cast<double>(row.value) / std::pow(static_cast<double>(n), exponent);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace wsat
