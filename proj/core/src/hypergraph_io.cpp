#include "wsat/hypergraph_io.hpp"

#include <fstream>
#include <optional>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "wsat/error.hpp"
#include "text_util.hpp"

namespace wsat {

void write_hypergraph(std::ostream& os, const Hypergraph& g) {
  os << g.n() << ' ' << g.r() << '\n';
  g.for_each_rank([&](Rank i) {
    const auto e = g.unrank(i);
    for (std::size_t j = 0; j < e.size(); ++j) os << (j ? " " : "") << e[j];
    os << '\n';
  });
}

std::string to_text(const Hypergraph& g) {
  std::ostringstream os;
  write_hypergraph(os, g);
  return os.str();
}

Hypergraph read_hypergraph(std::istream& is) {
  LineReader in(is);
  std::string_view line;
  if (!in.next(line)) throw ParseError(in.line_number() + 1, "missing `n r` header");
  const auto header = detail::parse_unsigned_fields(line, in.line_number());
  if (header.size() != 2) throw ParseError(in.line_number(), "header must be `n r`");

  std::optional<Hypergraph> g;
  try {
    g.emplace(header[0], header[1]);
  } catch (const InvalidInput& e) {
    throw ParseError(in.line_number(), e.what());
  }
  while (in.next(line)) {
    const auto fields = detail::parse_unsigned_fields(line, in.line_number());
    if (fields.size() != g->r())
      throw ParseError(in.line_number(), "expected " + std::to_string(g->r()) + " vertices, got " +
                                             std::to_string(fields.size()));
    std::vector<Vertex> vs(fields.begin(), fields.end());
    try {
      g->insert(Edge(std::span<const Vertex>(vs)));
    } catch (const InvalidInput& e) {
      throw ParseError(in.line_number(), e.what());
    }
  }
  return std::move(*g);
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream is{std::string(text)};
  return read_hypergraph(is);
}

Hypergraph load_hypergraph(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw InvalidInput("cannot open " + path.string());
  return read_hypergraph(is);
}

}  // namespace wsat
