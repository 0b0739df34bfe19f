#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "wsat/hypercore.hpp"

namespace wsat {

using Rational = boost::rational<std::int64_t>;

/// Blocks of size k over [N] such that every t-subset lies in some block.
struct CoverDesign {
  std::size_t N = 0;
  std::size_t k = 0;
  std::size_t t = 0;
  /// Each block sorted; blocks kept in the order greedy chose them.
  std::vector<std::vector<Vertex>> blocks;
  /// Slack used when comparing against (1 + delta) C(N,t) / C(k,t).
  Rational delta{0};
  /// Candidates were sampled rather than enumerated.
  bool sampled = false;
};

struct CoverOptions {
  std::uint64_t seed = 0;
  /// Above this many candidate blocks, switch to sampling.
  std::uint64_t exhaustive_limit = 1'000'000;
  std::size_t samples_per_round = 10'000;
};

/// Greedy cover: repeatedly take the k-set covering the most uncovered
/// t-sets, ties to the colex-least block. Requires N >= k >= t >= 1; k == t
/// yields one block per t-set.
CoverDesign greedy_cover(std::size_t N, std::size_t k, std::size_t t, const CoverOptions& options = {});

/// Exhaustive check that every t-subset of [N] is covered and every block is
/// a k-subset of [N].
bool verify_cover(const CoverDesign& d);

/// (1 + delta) C(N, t) / C(k, t), exactly.
Rational rodl_bound(std::size_t N, std::size_t k, std::size_t t, Rational delta);

// Text format: header `N k t`, then one block per line.
void write_cover(std::ostream& os, const CoverDesign& d);
std::string to_text(const CoverDesign& d);
CoverDesign read_cover(std::istream& is);
CoverDesign parse_cover(std::string_view text);
CoverDesign load_cover(const std::filesystem::path& path);

}  // namespace wsat
