#pragma once

// Brute-force reference implementations. They share nothing with the library
// beyond the Hypergraph container: sets of sorted vectors, full injective-map
// enumeration, Pascal's triangle.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "wsat/hypercore.hpp"
#include "wsat/pattern.hpp"

namespace oracle {

using Set = std::vector<std::uint32_t>;
using EdgeSet = std::set<Set>;

inline std::uint64_t pascal(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (std::uint64_t i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (std::uint64_t j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c[n][k];
}

inline std::vector<Set> all_subsets(std::size_t n, std::size_t k) {
  std::vector<Set> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    Set s;
    for (std::uint32_t v = 0; v < n; ++v)
      if (mask >> v & 1u) s.push_back(v);
    out.push_back(s);
  }
  return out;
}

inline EdgeSet to_set(const wsat::Hypergraph& g) {
  EdgeSet out;
  for (const auto& e : g.edges()) out.insert(Set(e.begin(), e.end()));
  return out;
}

inline wsat::Hypergraph from_set(std::size_t n, std::size_t r, const EdgeSet& edges) {
  wsat::Hypergraph g(n, r);
  for (const auto& e : edges) g.insert(wsat::Edge(std::span<const std::uint32_t>(e)));
  return g;
}

/// Every injective map V(H) -> [n], as image vectors.
inline std::vector<Set> injections(std::size_t h, std::size_t n) {
  std::vector<Set> out;
  for (const auto& image : all_subsets(n, h)) {
    auto perm = image;
    do out.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

inline Set image_of(const Set& edge, const Set& map) {
  Set out;
  for (auto v : edge) out.push_back(map[v]);
  std::sort(out.begin(), out.end());
  return out;
}

/// Does G + e contain a copy of H using e?
inline bool addable(const EdgeSet& g, const std::vector<Set>& h_edges, std::size_t h, std::size_t n, const Set& e) {
  for (const auto& map : injections(h, n)) {
    bool uses_e = false, ok = true;
    for (const auto& f : h_edges) {
      const auto img = image_of(f, map);
      if (img == e) {
        uses_e = true;
        continue;
      }
      if (!g.count(img)) {
        ok = false;
        break;
      }
    }
    if (ok && uses_e) return true;
  }
  return false;
}

inline std::vector<Set> pattern_edges(const wsat::Pattern& p) {
  std::vector<Set> out;
  for (const auto& e : p.edges()) out.emplace_back(e.begin(), e.end());
  return out;
}

/// Closure by repeated full passes with immediate addition.
inline EdgeSet closure(const wsat::Hypergraph& g, const wsat::Pattern& p) {
  auto cur = to_set(g);
  const auto h_edges = pattern_edges(p);
  const auto universe = all_subsets(g.n(), g.r());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : universe)
      if (!cur.count(e) && addable(cur, h_edges, p.h(), g.n(), e)) {
        cur.insert(e);
        changed = true;
      }
  }
  return cur;
}

inline bool percolates(const wsat::Hypergraph& g, const wsat::Pattern& p) {
  return closure(g, p).size() == pascal(g.n(), g.r());
}

/// Minimum percolating edge count by trying every subset of K_n^r.
inline std::size_t wsat(std::size_t n, const wsat::Pattern& p) {
  const auto universe = all_subsets(n, p.r());
  const auto u = universe.size();
  std::size_t best = u;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u); ++mask) {
    const auto m = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (m >= best) continue;
    EdgeSet es;
    for (std::size_t i = 0; i < u; ++i)
      if (mask >> i & 1u) es.insert(universe[i]);
    if (percolates(from_set(n, p.r(), es), p)) best = m;
  }
  return best;
}

/// Smallest |W| with W inside exactly one edge, over all vertex subsets.
inline std::size_t sparseness(const wsat::Hypergraph& h) {
  const auto edges = to_set(h);
  std::size_t best = h.r() + 1;
  for (std::uint32_t mask = 1; mask < (1u << h.n()); ++mask) {
    std::size_t inside = 0;
    for (const auto& e : edges) {
      std::uint32_t em = 0;
      for (auto v : e) em |= 1u << v;
      if ((mask & em) == mask) ++inside;
    }
    if (inside == 1) best = std::min<std::size_t>(best, __builtin_popcount(mask));
  }
  return best;
}

inline wsat::Hypergraph random_graph(std::size_t n, std::size_t r, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  wsat::Hypergraph g(n, r);
  for (const auto& e : all_subsets(n, r))
    if (coin(rng)) g.insert(wsat::Edge(std::span<const std::uint32_t>(e)));
  return g;
}

}  // namespace oracle
