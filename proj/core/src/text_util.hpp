#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "wsat/error.hpp"

namespace wsat {

/// Yields non-blank, non-comment lines and tracks the 1-based line number.
class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  bool next(std::string_view& out) {
    while (std::getline(is_, buf_)) {
      ++line_;
      if (!buf_.empty() && buf_.back() == '\r') buf_.pop_back();
      const auto first = buf_.find_first_not_of(" \t");
      if (first == std::string::npos || buf_[first] == '#') continue;
      out = std::string_view(buf_).substr(first);
      return true;
    }
    return false;
  }

  std::size_t line_number() const noexcept { return line_; }

 private:
  std::istream& is_;
  std::string buf_;
  std::size_t line_ = 0;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::uint32_t parse_unsigned(std::string_view token, std::size_t line) {
  std::uint64_t v = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (token.empty() || ec != std::errc() || ptr != end || v > UINT32_MAX)
    throw ParseError(line, "expected a non-negative integer, got `" + std::string(token) + "`");
  return static_cast<std::uint32_t>(v);
}

inline std::int64_t parse_signed(std::string_view token, std::size_t line) {
  std::int64_t v = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (token.empty() || ec != std::errc() || ptr != end)
    throw ParseError(line, "expected an integer, got `" + std::string(token) + "`");
  return v;
}

/// Whitespace-separated unsigned integers.
inline std::vector<std::uint32_t> parse_unsigned_fields(std::string_view s, std::size_t line) {
  std::vector<std::uint32_t> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i == s.size()) break;
    auto j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    out.push_back(parse_unsigned(s.substr(i, j - i), line));
    i = j;
  }
  return out;
}

}  // namespace detail
}  // namespace wsat
