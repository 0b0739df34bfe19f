#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wsat/certificate.hpp"
#include "wsat/constructions.hpp"
#include "wsat/designs.hpp"
#include "wsat/error.hpp"
#include "wsat/hypergraph_io.hpp"
#include "wsat/pattern.hpp"
#include "wsat/percolation.hpp"
#include "wsat/solver.hpp"
#include "wsat/templates.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

struct Globals {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string output;
  std::string format = "text";
};

/// Writes `content` to DIR/name when --output is set, else to stdout.
class Sink {
 public:
  explicit Sink(const Globals& g) : dir_(g.output) {
    if (!dir_.empty()) fs::create_directories(dir_);
  }

  void emit(const std::string& name, const std::string& content) const {
    if (dir_.empty()) {
      std::cout << content;
      return;
    }
    std::ofstream out(dir_ / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir_ / name).string());
    out << content;
  }

  bool to_files() const { return !dir_.empty(); }

 private:
  fs::path dir_;
};

wsat::Pattern load_pattern(const std::string& arg) {
  if (auto p = wsat::named_pattern(arg)) return *p;
  if (!fs::exists(arg)) throw wsat::InvalidInput("unknown pattern '" + arg + "' (not a shorthand or a file)");
  return wsat::Pattern(wsat::load_hypergraph(arg));
}

std::string bound_lines(const std::vector<wsat::BoundCheck>& bounds) {
  std::string out;
  for (const auto& b : bounds)
    out += "#BOUND " + b.name + ' ' + std::to_string(b.lhs) + ' ' + std::to_string(b.rhs) + ' ' +
           (b.holds ? "holds" : "fails") + '\n';
  return out;
}

std::string fixed(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << x;
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string template_claim(std::size_t h, std::size_t s, bool percolated) {
  return "#PERCOLATES template " + std::to_string(h) + ' ' + std::to_string(s) + ' ' + yes_no(percolated) + '\n';
}

std::string pattern_claim(const wsat::Pattern& p, bool percolated) {
  return "#PERCOLATES pattern " + wsat::pattern_hash(p) + ' ' + yes_no(percolated) + '\n';
}

// closure ------------------------------------------------------------------

struct ClosureArgs {
  std::string graph;
  std::string pattern;
  std::vector<std::size_t> tmpl;
};

int run_closure(const Globals& g, const ClosureArgs& a) {
  const auto host = wsat::load_hypergraph(a.graph);
  wsat::ClosureOptions opts;
  opts.threads = g.threads;
  wsat::ClosureResult res{wsat::Hypergraph(1, 1), {}, false, 0};
  if (!a.tmpl.empty()) {
    if (!a.pattern.empty()) throw wsat::InvalidInput("give either a pattern or --template, not both");
    res = wsat::template_closure(host, a.tmpl[0], a.tmpl[1], opts);
  } else {
    if (a.pattern.empty()) throw wsat::InvalidInput("a pattern or --template h s is required");
    const auto pat = load_pattern(a.pattern);
    if (pat.r() != host.r())
      throw wsat::InvalidInput("uniformity mismatch: graph has r = " + std::to_string(host.r()) +
                               ", pattern has r = " + std::to_string(pat.r()));
    res = wsat::closure(host, pat, opts);
  }
  const Sink sink(g);
  std::ostringstream summary;
  summary << "percolated " << yes_no(res.percolated) << " added " << res.certificate.size() << " rounds "
          << res.rounds << " edges " << res.closure.edge_count() << '\n';
  std::cout << summary.str();
  if (sink.to_files()) {
    sink.emit("closure.txt", wsat::to_text(res.closure));
    sink.emit("certificate.txt", wsat::to_text(res.certificate));
  } else {
    std::cout << wsat::to_text(res.closure) << wsat::to_text(res.certificate);
  }
  return res.percolated ? kExitOk : kExitNegative;
}

// generate -----------------------------------------------------------------

struct GenerateArgs {
  std::string kind;
  std::vector<std::string> positional;
  std::size_t r = 2, s = 2, h = 3, l = 0, t = 0, a = 0, b = 0;
  std::size_t n = 0, m = 0, m1 = 0;
  double eps = 0.1;
  std::string gm;
};

std::size_t positional_size(const GenerateArgs& a, std::size_t i, const char* what) {
  if (i >= a.positional.size())
    throw wsat::InvalidInput("generate " + a.kind + ": missing positional argument " + what);
  try {
    std::size_t used = 0;
    const auto v = std::stoull(a.positional[i], &used);
    if (used != a.positional[i].size()) throw std::invalid_argument(a.positional[i]);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw wsat::InvalidInput("generate " + a.kind + ": " + what + " must be a non-negative integer");
  }
}

void expect_positionals(const GenerateArgs& a, std::size_t count) {
  if (a.positional.size() != count)
    throw wsat::InvalidInput("generate " + a.kind + " takes " + std::to_string(count) + " positional arguments");
}

int run_generate(const Globals& g, const GenerateArgs& a) {
  const Sink sink(g);
  wsat::ClosureOptions opts;
  opts.threads = g.threads;
  opts.record_certificate = false;

  if (a.kind == "clique-extremal") {
    expect_positionals(a, 3);
    const auto n = positional_size(a, 0, "n"), t = positional_size(a, 1, "t"), r = positional_size(a, 2, "r");
    const auto c = wsat::clique_extremal(n, t, r);
    const bool ok = wsat::is_weakly_saturated(c.graph, wsat::clique_pattern(t, r), g.threads);
    sink.emit("clique-extremal.txt",
              bound_lines(c.bounds) + pattern_claim(wsat::clique_pattern(t, r), ok) + wsat::to_text(c.graph));
    return ok ? kExitOk : kExitNegative;
  }
  if (a.kind == "cover") {
    expect_positionals(a, 3);
    wsat::CoverOptions co;
    co.seed = g.seed;
    const auto d = wsat::greedy_cover(positional_size(a, 0, "N"), positional_size(a, 1, "k"),
                                      positional_size(a, 2, "t"), co);
    const bool ok = wsat::verify_cover(d);
    const auto bound = wsat::rodl_bound(d.N, d.k, d.t, d.delta);
    std::string head = "#COVER valid " + yes_no(ok) + " blocks " + std::to_string(d.blocks.size()) + " sampled " +
                       yes_no(d.sampled) + '\n';
    head += "#RODL bound " + std::to_string(bound.numerator()) + '/' + std::to_string(bound.denominator()) +
            " ratio " + fixed(static_cast<double>(d.blocks.size()) / boost::rational_cast<double>(bound)) + '\n';
    sink.emit("cover.txt", head + wsat::to_text(d));
    return ok ? kExitOk : kExitNegative;
  }
  if (a.kind == "template") {
    expect_positionals(a, 3);
    const auto r = positional_size(a, 0, "r"), h = positional_size(a, 1, "h"), s = positional_size(a, 2, "s");
    const auto tg = wsat::template_graph(r, h, s);
    const auto minus = wsat::template_minus(r, h, s);
    const bool ok = wsat::creates_template_copy(minus, tg.special, h, s).has_value();
    std::string head = "#SPECIAL";
    for (auto v : tg.special) head += ' ' + std::to_string(v);
    head += "\n#SPECIAL_ADDABLE " + yes_no(ok) + '\n';
    sink.emit("template.txt", head + wsat::to_text(tg.graph));
    return ok ? kExitOk : kExitNegative;
  }
  if (a.kind == "cone") {
    expect_positionals(a, 0);
    const wsat::ConeSpec spec{a.a, a.b, a.h, a.r, a.s, {}};
    const auto c = wsat::cone_gadget(spec);
    const bool ok = wsat::template_closure(c.graph, a.h, a.s, opts).percolated;
    sink.emit("cone.txt", bound_lines(c.bounds) + template_claim(a.h, a.s, ok) + wsat::to_text(c.graph));
    return ok ? kExitOk : kExitNegative;
  }
  if (a.kind == "spartite") {
    expect_positionals(a, 0);
    const wsat::SpartiteSpec spec{a.r, a.s, a.h, std::vector<std::size_t>(a.s, a.t), {}};
    const auto c = wsat::spartite_gadget(spec);
    const bool ok = wsat::template_closure(c.graph, a.h, a.s, opts).percolated;
    sink.emit("spartite.txt", bound_lines(c.bounds) + template_claim(a.h, a.s, ok) + wsat::to_text(c.graph));
    return ok ? kExitOk : kExitNegative;
  }
  if (a.kind == "percolate") {
    expect_positionals(a, 0);
    const auto gadget = wsat::percolate_gadget({a.l, a.t, a.h, a.r, a.s});
    const auto combined = gadget.combined();
    const bool ok = wsat::template_closure(combined, a.h, a.s, opts).percolated;
    const auto head = bound_lines(gadget.bounds) + template_claim(a.h, a.s, ok);
    if (sink.to_files()) {
      sink.emit("percolate_e1.txt", wsat::to_text(gadget.e1));
      sink.emit("percolate_e2.txt", wsat::to_text(gadget.e2));
    }
    sink.emit("percolate.txt", head + wsat::to_text(combined));
    return ok ? kExitOk : kExitNegative;
  }
  if (a.kind == "s1") {
    expect_positionals(a, 2);
    const auto pat = load_pattern(a.positional[0]);
    const auto c = wsat::s1_construction(pat, positional_size(a, 1, "n"));
    const bool ok = wsat::is_weakly_saturated(c.graph, pat, g.threads);
    sink.emit("s1.txt", bound_lines(c.bounds) + pattern_claim(pat, ok) + wsat::to_text(c.graph));
    return ok ? kExitOk : kExitNegative;
  }
  if (a.kind == "main") {
    expect_positionals(a, 1);
    const auto pat = load_pattern(a.positional[0]);
    const auto m1 = a.m1 == 0 ? a.m : a.m1;
    wsat::MainSpec spec{pat, a.n, a.m, m1, a.eps, wsat::Hypergraph(1, 1), std::nullopt, {}, g.threads};
    spec.cover_options.seed = g.seed;
    if (!a.gm.empty()) {
      spec.g_m = wsat::load_hypergraph(a.gm);
    } else {
      if (a.m < pat.h()) throw wsat::InvalidInput("generate main: m must be at least h");
      spec.g_m = wsat::wsat_upper(a.m, pat, g.threads).graph;
    }
    const auto res = wsat::main_construction(spec);
    std::string head = bound_lines(res.bounds);
    for (const auto& ratio : res.ratios) head += "#RATIO " + ratio.name + ' ' + fixed(ratio.value) + '\n';
    head += "#LAYOUT clusters " + std::to_string(res.clusters) + " cluster_size " +
            std::to_string(res.cluster_size) + " block_size " + std::to_string(res.block_size) + " blocks " +
            std::to_string(res.cover.blocks.size()) + '\n';
    head += "#EDGES gprime " + std::to_string(res.g_prime.edge_count()) + " e2 " +
            std::to_string(res.e2.edge_count()) + " total " + std::to_string(res.graph.edge_count()) + '\n';
    head += pattern_claim(pat, res.percolated);
    if (sink.to_files()) {
      sink.emit("main_gm.txt", wsat::to_text(spec.g_m));
      sink.emit("main_cover.txt", wsat::to_text(res.cover));
    }
    sink.emit("main.txt", head + wsat::to_text(res.graph));
    return res.percolated ? kExitOk : kExitNegative;
  }
  throw wsat::InvalidInput("unknown generate kind '" + a.kind + "'");
}

// wsat ---------------------------------------------------------------------

struct WsatArgs {
  std::vector<std::string> positional;
  bool exact = false;
  bool upper = false;
  bool no_iso = false;
  std::uint64_t budget = 10'000'000;
  std::string table;
};

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw wsat::InvalidInput("--table expects a..b");
  try {
    const auto lo = std::stoull(text.substr(0, dots));
    const auto hi = std::stoull(text.substr(dots + 2));
    if (lo > hi) throw wsat::InvalidInput("--table range is empty");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw wsat::InvalidInput("--table expects a..b with integers");
  }
}

int run_wsat(const Globals& g, const WsatArgs& a) {
  wsat::SolverOptions so;
  so.budget = a.budget;
  so.iso_pruning = !a.no_iso;
  so.threads = g.threads;
  const Sink sink(g);

  if (!a.table.empty()) {
    if (a.positional.size() != 1) throw wsat::InvalidInput("wsat --table takes only a pattern");
    const auto pat = load_pattern(a.positional[0]);
    const auto [lo, hi] = parse_range(a.table);
    std::vector<std::size_t> sizes;
    for (auto n = lo; n <= hi; ++n) sizes.push_back(n);
    wsat::RatioOptions ro;
    ro.solver = so;
    std::ostringstream os;
    os << "# n value method ratio  (s = " << pat.s() << ", ratio = value / n^(s-1))\n";
    for (const auto& row : wsat::ratio_table(pat, sizes, ro))
      os << row.n << ' ' << row.value << ' ' << (row.exact ? "exact" : "upper") << ' ' << fixed(row.ratio) << '\n';
    sink.emit("table.txt", os.str());
    return kExitOk;
  }

  if (a.positional.size() != 2) throw wsat::InvalidInput("wsat expects N PATTERN");
  if (a.exact == a.upper) throw wsat::InvalidInput("choose exactly one of --exact and --upper");
  std::size_t n = 0;
  try {
    n = std::stoull(a.positional[0]);
  } catch (const std::logic_error&) {
    throw wsat::InvalidInput("N must be a non-negative integer");
  }
  const auto pat = load_pattern(a.positional[1]);
  if (a.upper) {
    if (n < pat.r()) throw wsat::InvalidInput("wsat --upper requires N >= r");
    const auto up = wsat::wsat_upper(n, pat, g.threads);
    std::cout << "wsat " << n << ' ' << pat.r() << ' ' << wsat::pattern_hash(pat) << ' ' << up.value << " upper "
              << up.method << '\n';
    sink.emit("witness.txt", wsat::to_text(up.graph));
    return kExitOk;
  }
  const auto res = wsat::wsat_exact(n, pat, so);
  std::cout << wsat::result_line(n, pat, res) << '\n';
  if (!res.exact()) {
    std::cerr << "budget exhausted after " << res.explored << " checks; wsat >= " << res.resolved_below << '\n';
    return kExitInconclusive;
  }
  if (sink.to_files()) {
    sink.emit("witness.txt", wsat::to_text(*res.witness));
    sink.emit("certificate.txt", wsat::to_text(res.certificate));
  } else {
    std::cout << wsat::to_text(*res.witness);
  }
  return kExitOk;
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
  std::string graph;
  std::string pattern;
  std::string cert;
};

int report(const char* label, const wsat::VerifyReport& rep) {
  if (rep.valid) {
    std::cout << label << " valid complete " << yes_no(rep.complete) << '\n';
    return kExitOk;
  }
  std::cout << label << " invalid step " << rep.failed_step << ": " << rep.reason << '\n';
  return kExitNegative;
}

int run_verify(const Globals& g, const VerifyArgs& a) {
  const auto host = wsat::load_hypergraph(a.graph);
  const auto pat = load_pattern(a.pattern);
  const auto cert = wsat::load_certificate(a.cert);
  if (cert.kind == wsat::CertificateKind::pattern) return report("pattern", wsat::check_certificate(host, pat, cert));

  // template parameters come from the witnesses, or from H for an empty process
  std::size_t h = pat.h(), s = pat.s();
  if (!cert.steps.empty()) {
    const auto& w = std::get<wsat::TemplateWitness>(cert.steps.front().witness);
    h = w.w.size();
    s = w.z.size();
  }
  const int native = report("template", wsat::check_template_certificate(host, h, s, cert));
  if (native != kExitOk) return native;
  if (pat.h() != h || pat.s() != s || s < 2) {
    std::cout << "pattern skipped: template parameters differ from H\n";
    return kExitOk;
  }
  std::mt19937_64 rng(g.seed);
  const auto converted = wsat::template_cert_to_pattern_cert(cert, pat, &rng);
  return report("pattern", wsat::check_certificate(host, pat, converted));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak saturation toolkit: bootstrap closures, constructions, exact wsat"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for sampled procedures");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--output", g.output, "Write output files into this directory");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text"}));

  ClosureArgs ca;
  auto* closure = app.add_subcommand("closure", "Bootstrap closure of a graph with a certificate");
  closure->add_option("graph", ca.graph, "Hypergraph file")->required();
  closure->add_option("pattern", ca.pattern, "Pattern shorthand or file");
  closure->add_option("--template", ca.tmpl, "Use the T_{r,h,s} template engine with h s")->expected(2);

  GenerateArgs ga;
  auto* generate = app.add_subcommand("generate", "Build a construction and check it with the engine");
  generate->set_help_flag("--help", "Print this help message and exit");
  generate
      ->add_option("kind", ga.kind, "template|cone|spartite|percolate|s1|main|clique-extremal|cover")
      ->required()
      ->check(CLI::IsMember({"template", "cone", "spartite", "percolate", "s1", "main", "clique-extremal", "cover"}));
  generate->add_option("args", ga.positional, "Positional parameters of the kind");
  generate->add_option("--r", ga.r, "Uniformity");
  generate->add_option("--s", ga.s, "Sparseness parameter");
  generate->add_option("--h", ga.h, "Template size");
  generate->add_option("--l", ga.l, "Cluster count");
  generate->add_option("--t", ga.t, "Cluster or part size");
  generate->add_option("--a", ga.a, "Cone: |A|");
  generate->add_option("--b", ga.b, "Cone: |B|");
  generate->add_option("--n", ga.n, "Main: vertex count");
  generate->add_option("--m", ga.m, "Main: seed graph size");
  generate->add_option("--m1", ga.m1, "Main: size before rounding up to a perfect power");
  generate->add_option("--eps", ga.eps, "Main: accounting slack");
  generate->add_option("--gm", ga.gm, "Main: seed graph file (default: best verified upper construction)");

  WsatArgs wa;
  auto* wsat_cmd = app.add_subcommand("wsat", "Exact or upper-bound weak saturation numbers");
  wsat_cmd->add_option("args", wa.positional, "[N] PATTERN");
  wsat_cmd->add_flag("--exact", wa.exact, "Exhaustive search");
  wsat_cmd->add_flag("--upper", wa.upper, "Best verified construction");
  wsat_cmd->add_flag("--no-iso", wa.no_iso, "Disable isomorphism pruning");
  wsat_cmd->add_option("--budget", wa.budget, "Maximum percolation checks");
  wsat_cmd->add_option("--table", wa.table, "Ratio table over sizes a..b");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Replay a saturation certificate");
  verify->add_option("graph", va.graph, "Start graph file")->required();
  verify->add_option("pattern", va.pattern, "Pattern shorthand or file")->required();
  verify->add_option("cert", va.cert, "Certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : kExitUsage;
  }

  try {
    if (*closure) return run_closure(g, ca);
    if (*generate) return run_generate(g, ga);
    if (*wsat_cmd) return run_wsat(g, wa);
    if (*verify) return run_verify(g, va);
  } catch (const wsat::ParseError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const wsat::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
