#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "wsat/hypercore.hpp"

namespace wsat {

// Line-based text format: a header line `n r`, then one edge per line as
// strictly increasing vertex indices. Lines whose first non-blank character is
// `#` are comments; blank lines are skipped. The writer emits edges in colex
// order with single spaces and no comments, so write(read(write(g))) is
// byte-identical to write(g).

void write_hypergraph(std::ostream& os, const Hypergraph& g);
std::string to_text(const Hypergraph& g);

/// Throws ParseError with the offending line number.
Hypergraph read_hypergraph(std::istream& is);
Hypergraph parse_hypergraph(std::string_view text);
Hypergraph load_hypergraph(const std::filesystem::path& path);

}  // namespace wsat
