#pragma once

#include <optional>
#include <type_traits>
#include <unordered_set>
#include <utility>
#include <vector>

#include "parallel.hpp"
#include "wsat/percolation.hpp"

namespace wsat::detail {

/// Missing edges e of `current` with |e n a| >= 2r - h for some a in `added`.
inline std::vector<Rank> dirty_candidates(const Hypergraph& current, const std::vector<Rank>& added,
                                          std::size_t h) {
  const auto r = current.r();
  std::vector<Rank> out;
  const auto complement = missing_edges_graph(current);
  if (2 * r <= h) {
    complement.for_each_rank([&](Rank i) { out.push_back(i); });
    return out;
  }
  const auto k = 2 * r - h;
  if (k > r) return out;
  const RankTable sub(current.n(), k);
  std::unordered_set<Rank> keys;
  for (auto a : added) {
    const auto e = current.unrank(a);
    for_each_subset(e.vertices(), k, [&](std::span<const Vertex> s) { keys.insert(sub.rank(s)); });
  }
  complement.for_each_rank([&](Rank i) {
    const auto e = current.unrank(i);
    bool dirty = false;
    for_each_subset(e.vertices(), k, [&](std::span<const Vertex> s) {
      if (!dirty && keys.contains(sub.rank(s))) dirty = true;
    });
    if (dirty) out.push_back(i);
  });
  return out;
}

/// Round-based closure shared by the pattern and template engines. `find`
/// must be callable concurrently on a frozen snapshot and return an optional
/// witness for a missing edge.
template <class Find>
ClosureResult run_closure(const Hypergraph& start, std::size_t h, CertificateKind kind, Find&& find,
                          const ClosureOptions& options) {
  ClosureResult out{start, {kind, start.n(), start.r(), {}}, false, 0};
  auto& current = out.closure;
  std::vector<Rank> candidates;
  missing_edges_graph(current).for_each_rank([&](Rank i) { candidates.push_back(i); });

  using Witness = typename std::invoke_result_t<Find, const Hypergraph&, const Edge&>::value_type;
  while (!candidates.empty()) {
    std::vector<std::optional<Witness>> found(candidates.size());
    parallel_for(candidates.size(), options.threads,
                 [&](std::size_t i) { found[i] = find(current, current.unrank(candidates[i])); });
    std::vector<Rank> added;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!found[i]) continue;
      added.push_back(candidates[i]);
      if (options.record_certificate) {
        const auto e = current.unrank(candidates[i]);
        const auto key = options.phase_key ? options.phase_key(e) : 0;
        out.certificate.steps.push_back({e, std::move(*found[i]), key});
      }
    }
    if (added.empty()) break;
    ++out.rounds;
    for (auto a : added) current.insert_rank(a);
    candidates = dirty_candidates(current, added, h);
  }
  out.percolated = current.is_complete();
  return out;
}

}  // namespace wsat::detail
