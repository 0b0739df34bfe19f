#include "wsat/designs.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

#include "text_util.hpp"
#include "wsat/error.hpp"

namespace wsat {

namespace {

std::vector<Vertex> unrank_subset(Rank i, std::size_t n, std::size_t k) {
  std::vector<Vertex> out(k);
  std::uint64_t bound = n;
  for (std::size_t j = k; j-- > 0;) {
    std::uint64_t v = bound - 1;
    while (binomial(v, j + 1) > i) --v;
    out[j] = static_cast<Vertex>(v);
    i -= binomial(v, j + 1);
    bound = v;
  }
  return out;
}

bool colex_less(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

class Coverage {
 public:
  Coverage(std::size_t N, std::size_t t) : tsets_(N, t), covered_(tsets_.universe()) {}

  std::size_t uncovered() const { return covered_.size() - covered_.count(); }

  std::size_t score(const std::vector<Vertex>& block) const {
    std::size_t out = 0;
    for_each_subset(block, tsets_.r(), [&](std::span<const Vertex> s) { out += !covered_.test(tsets_.rank(s)); });
    return out;
  }

  void cover(const std::vector<Vertex>& block) {
    for_each_subset(block, tsets_.r(), [&](std::span<const Vertex> s) { covered_.set(tsets_.rank(s)); });
  }

  std::vector<Vertex> first_uncovered() const {
    const auto i = (~covered_).find_first();
    return unrank_subset(i, tsets_.n(), tsets_.r());
  }

 private:
  RankTable tsets_;
  boost::dynamic_bitset<std::uint64_t> covered_;
};

void check_cover_params(std::size_t N, std::size_t k, std::size_t t) {
  if (!(N >= k && k >= t && t >= 1))
    throw InvalidInput("cover parameters require N >= k >= t >= 1 (got N=" + std::to_string(N) +
                       ", k=" + std::to_string(k) + ", t=" + std::to_string(t) + ")");
  if (t > 32) throw InvalidInput("cover t must be at most 32");
  if (binomial(N, t) > kDefaultEdgeLimit) throw InvalidInput("C(N, t) exceeds the supported size");
}

std::vector<std::vector<Vertex>> exhaustive_greedy(std::size_t N, std::size_t k, std::size_t t) {
  Coverage cov(N, t);
  const RankTable blocks(N, k);
  struct Entry {
    std::size_t score;
    Rank rank;
  };
  // max score first, then colex-least block
  auto worse = [](const Entry& a, const Entry& b) {
    return a.score != b.score ? a.score < b.score : a.rank > b.rank;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);
  const auto initial = binomial(k, t);
  for (Rank i = 0; i < blocks.universe(); ++i) heap.push({initial, i});

  std::vector<std::vector<Vertex>> out;
  // Scores only fall as coverage grows, so a popped entry whose fresh score
  // equals its stored bound beats every other entry.
  while (cov.uncovered() > 0) {
    auto top = heap.top();
    heap.pop();
    auto block = unrank_subset(top.rank, N, k);
    const auto fresh = cov.score(block);
    if (fresh == top.score) {
      cov.cover(block);
      out.push_back(std::move(block));
    } else if (fresh > 0) {
      heap.push({fresh, top.rank});
    }
  }
  return out;
}

std::vector<std::vector<Vertex>> sampled_greedy(std::size_t N, std::size_t k, std::size_t t,
                                                const CoverOptions& options) {
  Coverage cov(N, t);
  std::mt19937_64 rng(options.seed);
  std::vector<Vertex> pool(N);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::vector<Vertex>> out;
  while (cov.uncovered() > 0) {
    // always offer a block through the first uncovered t-set so each round progresses
    auto best = cov.first_uncovered();
    for (Vertex v = 0; best.size() < k; ++v)
      if (!std::binary_search(best.begin(), best.begin() + t, v)) best.push_back(v);
    std::sort(best.begin(), best.end());
    auto best_score = cov.score(best);
    for (std::size_t c = 0; c < options.samples_per_round; ++c) {
      for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, N - 1);
        std::swap(pool[i], pool[pick(rng)]);
      }
      std::vector<Vertex> cand(pool.begin(), pool.begin() + k);
      std::sort(cand.begin(), cand.end());
      const auto sc = cov.score(cand);
      if (sc > best_score || (sc == best_score && colex_less(cand, best))) {
        best = std::move(cand);
        best_score = sc;
      }
    }
    cov.cover(best);
    out.push_back(std::move(best));
  }
  return out;
}

}  // namespace

CoverDesign greedy_cover(std::size_t N, std::size_t k, std::size_t t, const CoverOptions& options) {
  check_cover_params(N, k, t);
  CoverDesign d;
  d.N = N;
  d.k = k;
  d.t = t;
  if (binomial(N, k) <= options.exhaustive_limit) {
    d.blocks = exhaustive_greedy(N, k, t);
  } else {
    d.blocks = sampled_greedy(N, k, t, options);
    d.sampled = true;
  }
  return d;
}

bool verify_cover(const CoverDesign& d) {
  if (!(d.N >= d.k && d.k >= d.t && d.t >= 1) || d.t > 32) return false;
  if (binomial(d.N, d.t) > kDefaultEdgeLimit) return false;
  Coverage cov(d.N, d.t);
  for (const auto& b : d.blocks) {
    if (b.size() != d.k) return false;
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] >= d.N || (i > 0 && b[i - 1] >= b[i])) return false;
    cov.cover(b);
  }
  return cov.uncovered() == 0;
}

Rational rodl_bound(std::size_t N, std::size_t k, std::size_t t, Rational delta) {
  const auto num = binomial(N, t);
  const auto den = binomial(k, t);
  if (den == 0) throw InvalidInput("rodl_bound requires k >= t");
  return (Rational(1) + delta) * Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

void write_cover(std::ostream& os, const CoverDesign& d) {
  os << d.N << ' ' << d.k << ' ' << d.t << '\n';
  for (const auto& b : d.blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? " " : "") << b[i];
    os << '\n';
  }
}

std::string to_text(const CoverDesign& d) {
  std::ostringstream os;
  write_cover(os, d);
  return os.str();
}

CoverDesign read_cover(std::istream& is) {
  LineReader in(is);
  std::string_view line;
  if (!in.next(line)) throw ParseError(in.line_number() + 1, "missing `N k t` header");
  const auto head = detail::parse_unsigned_fields(line, in.line_number());
  if (head.size() != 3) throw ParseError(in.line_number(), "header must be `N k t`");
  CoverDesign d;
  d.N = head[0];
  d.k = head[1];
  d.t = head[2];
  while (in.next(line)) {
    const auto fields = detail::parse_unsigned_fields(line, in.line_number());
    if (fields.size() != d.k)
      throw ParseError(in.line_number(), "block must have " + std::to_string(d.k) + " vertices");
    std::vector<Vertex> b(fields.begin(), fields.end());
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] >= d.N || (i > 0 && b[i - 1] >= b[i]))
        throw ParseError(in.line_number(), "block must be strictly increasing and inside [N]");
    d.blocks.push_back(std::move(b));
  }
  return d;
}

CoverDesign parse_cover(std::string_view text) {
  std::istringstream is{std::string(text)};
  return read_cover(is);
}

CoverDesign load_cover(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw InvalidInput("cannot open " + path.string());
  return read_cover(is);
}

}  // namespace wsat
