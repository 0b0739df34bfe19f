#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wsat/hypercore.hpp"

namespace wsat {

/// Placeholder for an H-vertex a parsed mapping left unassigned.
inline constexpr Vertex kUnmapped = UINT32_MAX;

/// An embedding of H into the host: mapping[v] is the image of H-vertex v.
/// covered_edge is the added edge, which is the image of some edge of H.
struct PatternWitness {
  std::vector<Vertex> mapping;
  Edge covered_edge;

  friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

/// A copy of T_{r,h,s} on the h-set `w` whose deleted core is `z`. The added
/// edge plays the special edge, so z is contained in it.
struct TemplateWitness {
  std::vector<Vertex> w;
  std::vector<Vertex> z;

  friend bool operator==(const TemplateWitness&, const TemplateWitness&) = default;
};

enum class CertificateKind { pattern, template_ };

struct CertificateStep {
  Edge edge;
  std::variant<PatternWitness, TemplateWitness> witness;
  /// Induction measure the step was generated under; 0 when none applies.
  std::int64_t phase_key = 0;

  friend bool operator==(const CertificateStep&, const CertificateStep&) = default;
};

/// An ordered saturation process over the universe of r-subsets of [n].
struct SaturationCertificate {
  CertificateKind kind = CertificateKind::pattern;
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<CertificateStep> steps;

  std::size_t size() const noexcept { return steps.size(); }
  bool empty() const noexcept { return steps.empty(); }

  friend bool operator==(const SaturationCertificate&, const SaturationCertificate&) = default;
};

// Text format:
//
//   CERT pattern|template n r
//   <edge vertices> | <phase_key> | <witness>
//
// where a pattern witness reads `0->u0 1->u1 ...` and a template witness reads
// `W={a,b,c,d} Z={a,b}`. Comment and blank lines are skipped on input.

void write_certificate(std::ostream& os, const SaturationCertificate& cert);
std::string to_text(const SaturationCertificate& cert);

/// Throws ParseError with the offending line number.
SaturationCertificate read_certificate(std::istream& is);
SaturationCertificate parse_certificate(std::string_view text);
SaturationCertificate load_certificate(const std::filesystem::path& path);

}  // namespace wsat
