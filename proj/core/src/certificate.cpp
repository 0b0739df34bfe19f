#include "wsat/certificate.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "text_util.hpp"
#include "wsat/error.hpp"

namespace wsat {

namespace {

void write_set(std::ostream& os, const std::vector<Vertex>& vs) {
  os << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
  os << '}';
}

std::vector<Vertex> parse_set(std::string_view token, std::string_view label, std::size_t line) {
  if (!token.starts_with(label) || token.size() < label.size() + 3 || token[label.size()] != '=' ||
      token[label.size() + 1] != '{' || token.back() != '}')
    throw ParseError(line, "expected `" + std::string(label) + "={...}`");
  const auto body = token.substr(label.size() + 2, token.size() - label.size() - 3);
  std::vector<Vertex> out;
  if (!detail::trim(body).empty())
    for (auto part : detail::split(body, ','))
      out.push_back(detail::parse_unsigned(detail::trim(part), line));
  if (!std::is_sorted(out.begin(), out.end()) ||
      std::adjacent_find(out.begin(), out.end()) != out.end())
    throw ParseError(line, std::string(label) + " must be strictly increasing");
  return out;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i == s.size()) break;
    auto j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

PatternWitness parse_mapping(std::string_view text, const Edge& edge, std::size_t line) {
  PatternWitness w;
  w.covered_edge = edge;
  std::vector<bool> seen;
  for (auto tok : tokens(text)) {
    const auto arrow = tok.find("->");
    if (arrow == std::string_view::npos) throw ParseError(line, "expected `v->u` in witness");
    const auto v = detail::parse_unsigned(tok.substr(0, arrow), line);
    const auto u = detail::parse_unsigned(tok.substr(arrow + 2), line);
    if (v >= w.mapping.size()) {
      w.mapping.resize(v + 1, kUnmapped);
      seen.resize(v + 1, false);
    }
    if (seen[v]) throw ParseError(line, "H-vertex " + std::to_string(v) + " mapped twice");
    seen[v] = true;
    w.mapping[v] = u;
  }
  // Gaps are kept as kUnmapped so that the verifier can report them.
  return w;
}

}  // namespace

void write_certificate(std::ostream& os, const SaturationCertificate& cert) {
  os << "CERT " << (cert.kind == CertificateKind::pattern ? "pattern" : "template") << ' ' << cert.n
     << ' ' << cert.r << '\n';
  for (const auto& step : cert.steps) {
    for (std::size_t j = 0; j < step.edge.size(); ++j) os << (j ? " " : "") << step.edge[j];
    os << " | " << step.phase_key << " | ";
    if (const auto* pw = std::get_if<PatternWitness>(&step.witness)) {
      for (std::size_t v = 0; v < pw->mapping.size(); ++v)
        os << (v ? " " : "") << v << "->" << pw->mapping[v];
    } else {
      const auto& tw = std::get<TemplateWitness>(step.witness);
      os << "W=";
      write_set(os, tw.w);
      os << " Z=";
      write_set(os, tw.z);
    }
    os << '\n';
  }
}

std::string to_text(const SaturationCertificate& cert) {
  std::ostringstream os;
  write_certificate(os, cert);
  return os.str();
}

SaturationCertificate read_certificate(std::istream& is) {
  LineReader in(is);
  std::string_view line;
  if (!in.next(line)) throw ParseError(in.line_number() + 1, "missing CERT header");
  const auto head = tokens(line);
  if (head.size() != 4 || head[0] != "CERT")
    throw ParseError(in.line_number(), "header must be `CERT pattern|template n r`");
  SaturationCertificate cert;
  if (head[1] == "pattern")
    cert.kind = CertificateKind::pattern;
  else if (head[1] == "template")
    cert.kind = CertificateKind::template_;
  else
    throw ParseError(in.line_number(), "unknown certificate kind `" + std::string(head[1]) + "`");
  cert.n = detail::parse_unsigned(head[2], in.line_number());
  cert.r = detail::parse_unsigned(head[3], in.line_number());

  while (in.next(line)) {
    const auto ln = in.line_number();
    const auto parts = detail::split(line, '|');
    if (parts.size() != 3) throw ParseError(ln, "step must be `edge | phase_key | witness`");
    const auto vs = detail::parse_unsigned_fields(parts[0], ln);
    if (vs.size() != cert.r)
      throw ParseError(ln, "edge must have " + std::to_string(cert.r) + " vertices");
    std::vector<Vertex> vertices(vs.begin(), vs.end());
    CertificateStep step;
    try {
      step.edge = Edge(std::span<const Vertex>(vertices));
    } catch (const InvalidInput& e) {
      throw ParseError(ln, e.what());
    }
    step.phase_key = detail::parse_signed(detail::trim(parts[1]), ln);
    const auto witness = detail::trim(parts[2]);
    if (cert.kind == CertificateKind::pattern) {
      step.witness = parse_mapping(witness, step.edge, ln);
    } else {
      const auto toks = tokens(witness);
      if (toks.size() != 2) throw ParseError(ln, "template witness must be `W={...} Z={...}`");
      step.witness = TemplateWitness{parse_set(toks[0], "W", ln), parse_set(toks[1], "Z", ln)};
    }
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

SaturationCertificate parse_certificate(std::string_view text) {
  std::istringstream is{std::string(text)};
  return read_certificate(is);
}

SaturationCertificate load_certificate(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw InvalidInput("cannot open " + path.string());
  return read_certificate(is);
}

}  // namespace wsat
