#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsrx/enumerate.hpp"
#include "dsrx/errors.hpp"
#include "dsrx/extendability.hpp"
#include "dsrx/graph.hpp"
#include "dsrx/graph6.hpp"
#include "dsrx/spectral.hpp"
#include "dsrx/verify.hpp"

namespace dsrx {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;   // a check or suite reported a failure
constexpr int kUsage = 2;  // bad flags, malformed input, out-of-range values

// Radii print with a fixed number of significant digits; integral values
// keep a trailing .0 so the column always reads as a real number.
std::string format_radius(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  std::string s = buf;
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

// One graph from --graph6 / --family flags; "-" pulls the first non-empty
// line off standard input.
struct GraphInput {
  std::string graph6;
  std::string family;
  std::vector<int> params;
};

void add_graph_flags(CLI::App* sub, GraphInput& gi) {
  CLI::Option* g6 = sub->add_option(
      "--graph6", gi.graph6,
      "graph6 string, or - to read one line from standard input");
  CLI::Option* fam = sub->add_option(
      "--family", gi.family, "named family (construct --help lists the catalog)");
  sub->add_option("--params", gi.params, "integer parameters for --family")
      ->needs(fam);
  g6->excludes(fam);
  fam->excludes(g6);
}

Graph resolve_graph(const GraphInput& gi, std::istream& in, std::ostream& err) {
  if (!gi.graph6.empty()) {
    if (gi.graph6 != "-") return parse_graph6(gi.graph6);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) return parse_graph6(line);
    throw std::invalid_argument("no graph6 line arrived on standard input");
  }
  if (!gi.family.empty()) {
    std::optional<FamilySpec::Kind> kind = family_kind_from_name(gi.family);
    if (!kind) throw std::invalid_argument("unknown family: " + gi.family);
    BuildResult r = build({*kind, gi.params});
    for (const std::string& w : r.warnings) err << "warning: " << w << '\n';
    return r.graph;
  }
  throw std::invalid_argument("no graph given: use --graph6 or --family");
}

void render_report(const VerificationReport& rep, const std::string& format,
                   int digits, std::ostream& out) {
  if (format == "json") {
    out << rep.to_json().dump() << '\n';
    return;
  }
  out << rep.suite << ": " << (rep.passed ? "PASS" : "FAIL") << '\n';
  out << "  parameters " << rep.parameters.dump() << '\n';
  out << "  graphs scanned " << rep.graphs_scanned << '\n';
  if (rep.excluded_no_k_matching > 0)
    out << "  excluded for lacking a k-matching " << rep.excluded_no_k_matching
        << '\n';
  if (rep.minimizer) {
    out << "  minimizer " << rep.minimizer->graph6 << "  radius "
        << format_radius(rep.minimizer->radius, digits);
    if (rep.minimizer->gap)
      out << "  gap " << format_radius(*rep.minimizer->gap, digits);
    out << '\n';
  }
  for (const ReportFailure& f : rep.failures) {
    out << "  failure";
    if (!f.graph6.empty()) out << ' ' << f.graph6;
    out << ": " << f.reason << " (slack " << format_radius(f.margin, digits)
        << ")\n";
  }
}

// Every ordered clique profile with at least two parts and at most `limit`
// vertices in total (hub included), each compared against its flattening.
VerificationReport lemma_bh_sweep(int limit, const ScanOptions& opts) {
  if (limit < 3)
    throw std::invalid_argument("the profile sweep needs a limit of at least 3");
  VerificationReport rep;
  rep.suite = "lemma-bh";
  rep.parameters = {{"limit", limit}, {"tol", opts.tol}, {"margin", opts.margin}};
  long long comparisons = 0;
  std::vector<int> parts;
  std::function<void(int, int)> grow = [&](int s, int used) {
    if (parts.size() >= 2) {
      VerificationReport one = verify_lemma_bh(s, parts, opts);
      ++comparisons;
      rep.graphs_scanned += one.graphs_scanned;
      for (ReportFailure f : one.failures) {
        f.reason = "s=" + std::to_string(s) +
                   " parts=" + nlohmann::ordered_json(parts).dump() + ": " +
                   f.reason;
        rep.failures.push_back(std::move(f));
      }
    }
    for (int next = 1; used + next <= limit; ++next) {
      parts.push_back(next);
      grow(s, used + next);
      parts.pop_back();
    }
  };
  for (int s = 1; s + 2 <= limit; ++s) grow(s, s);
  rep.parameters["comparisons"] = comparisons;
  rep.passed = rep.failures.empty();
  return rep;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, std::istream& in) {
  CLI::App app{"distance spectral radius toolkit", "dsrx"};
  app.require_subcommand(1);
  int code = kPass;

  // --jobs defaults from the environment so batch drivers can set a global
  // worker count without editing every invocation; the flag still wins.
  int default_jobs = 1;
  if (const char* env = std::getenv("DSRX_JOBS")) {
    try {
      default_jobs = std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      // An unparseable value falls back to serial.
    }
  }

  // radius --------------------------------------------------------------
  GraphInput radius_in;
  double radius_tol = 1e-10;
  int radius_digits = 12;
  std::string radius_format = "text";
  CLI::App* radius = app.add_subcommand(
      "radius", "Distance spectral radius of one graph, by power iteration");
  add_graph_flags(radius, radius_in);
  radius->add_option("--tol", radius_tol, "eigensolver acceptance residual");
  radius->add_option("--digits", radius_digits, "significant digits in text output")
      ->check(CLI::Range(1, 17));
  radius->add_option("--format", radius_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  radius->callback([&] {
    Graph g = resolve_graph(radius_in, in, err);
    SpectralResult r = graph_radius(g, radius_tol);
    if (radius_format == "json") {
      nlohmann::ordered_json j;
      j["graph6"] = write_graph6(g);
      j["order"] = g.order();
      j["radius"] = r.radius;
      j["residual"] = r.residual;
      j["iterations"] = r.iterations;
      out << j.dump() << '\n';
    } else {
      out << format_radius(r.radius, radius_digits) << '\n';
    }
  });

  // check-extendable ------------------------------------------------------
  GraphInput ext_in;
  int ext_k = 1;
  std::string ext_method = "direct";
  std::string ext_format = "text";
  CLI::App* ext = app.add_subcommand(
      "check-extendable",
      "Decide whether every matching of size k extends to a perfect matching");
  add_graph_flags(ext, ext_in);
  ext->add_option("--k", ext_k, "matching size that must extend")->required();
  ext->add_option("--method", ext_method,
                  "direct, tutte, hall, or deletion (the latter two need a "
                  "bipartite graph)")
      ->check(CLI::IsMember({"direct", "tutte", "hall", "deletion"}));
  ext->add_option("--format", ext_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  ext->callback([&] {
    Graph g = resolve_graph(ext_in, in, err);
    if ((ext_method == "hall" || ext_method == "deletion") &&
        !g.has_bipartition()) {
      std::optional<std::uint64_t> side = two_color(g);
      if (!side)
        throw std::invalid_argument("the " + ext_method +
                                    " decider needs a bipartite graph");
      g.set_bipartition(*side);
    }
    ExtendabilityVerdict v =
        ext_method == "tutte"      ? is_k_extendable_tutte(g, ext_k)
        : ext_method == "hall"     ? is_k_extendable_hall(g, ext_k)
        : ext_method == "deletion" ? is_k_extendable_deletion(g, ext_k)
                                   : is_k_extendable_direct(g, ext_k);
    if (ext_format == "json") {
      out << verdict_json(v) << '\n';
    } else {
      out << ext_k << "-extendable: ";
      if (v.holds) {
        out << "yes\n";
      } else if (v.no_k_matching) {
        out << "no (the graph has no " << ext_k << "-matching at all)\n";
      } else {
        out << "no\n";
        if (v.witness) out << "  witness " << witness_json(*v.witness) << '\n';
      }
    }
    if (!v.holds) code = kFail;
  });

  // check-factor-critical ----------------------------------------------------
  GraphInput fc_in;
  int fc_k = 1;
  std::string fc_method = "direct";
  std::string fc_format = "text";
  CLI::App* fc = app.add_subcommand(
      "check-factor-critical",
      "Decide whether deleting any k vertices leaves a perfect matching");
  add_graph_flags(fc, fc_in);
  fc->add_option("--k", fc_k, "number of deleted vertices")->required();
  fc->add_option("--method", fc_method, "direct or tutte")
      ->check(CLI::IsMember({"direct", "tutte"}));
  fc->add_option("--format", fc_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  fc->callback([&] {
    Graph g = resolve_graph(fc_in, in, err);
    ExtendabilityVerdict v = fc_method == "tutte"
                                 ? is_k_factor_critical_tutte(g, fc_k)
                                 : is_k_factor_critical(g, fc_k);
    if (fc_format == "json") {
      out << verdict_json(v) << '\n';
    } else {
      out << fc_k << "-factor-critical: " << (v.holds ? "yes" : "no") << '\n';
      if (!v.holds && v.witness)
        out << "  witness " << witness_json(*v.witness) << '\n';
    }
    if (!v.holds) code = kFail;
  });

  // construct ----------------------------------------------------------------
  std::string con_family;
  std::vector<int> con_params;
  int con_n = 0;
  int con_k = 0;
  CLI::App* con = app.add_subcommand(
      "construct", "Emit the graph6 line of a named family member");
  con->add_option("family", con_family,
                  "complete, empty, join, union, diamond, configuration, "
                  "extremal-general, extremal-bipartite, or "
                  "extremal-factor-critical")
      ->required();
  CLI::Option* con_p =
      con->add_option("--params", con_params, "integer parameters, family-specific");
  CLI::Option* con_nopt =
      con->add_option("--n", con_n, "shorthand for the extremal families' n");
  CLI::Option* con_kopt =
      con->add_option("--k", con_k, "shorthand for the extremal families' k");
  con_nopt->excludes(con_p);
  con_kopt->excludes(con_p);
  con_nopt->needs(con_kopt);
  con_kopt->needs(con_nopt);
  con->callback([&] {
    std::optional<FamilySpec::Kind> kind = family_kind_from_name(con_family);
    if (!kind) throw std::invalid_argument("unknown family: " + con_family);
    std::vector<int> params = con_params;
    if (con_nopt->count() > 0) params = {con_n, con_k};
    BuildResult r = build({*kind, params});
    for (const std::string& w : r.warnings) err << "warning: " << w << '\n';
    out << write_graph6(r.graph) << '\n';
  });

  // verify-theorem1/2/3 --------------------------------------------------
  struct TheoremFlags {
    int n = 0;
    int k = 0;
    ScanOptions opts;
    bool quiet = false;
    std::string format = "text";
    int digits = 12;
  };
  auto add_theorem_flags = [&default_jobs](CLI::App* sub, TheoremFlags& f,
                                           const char* n_help) {
    f.opts.jobs = default_jobs;
    sub->add_option("--n", f.n, n_help)->required();
    sub->add_option("--k", f.k, "matching size")->required();
    sub->add_option("--tol", f.opts.tol, "eigensolver acceptance residual");
    sub->add_option("--margin", f.opts.margin,
                    "required separation of strict radius inequalities");
    sub->add_option("--jobs", f.opts.jobs,
                    "worker threads; any count yields the same report "
                    "(default from DSRX_JOBS)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--file", f.opts.graph6_file,
                    "scan this graph6 file instead of enumerating");
    sub->add_flag("--rededup", f.opts.rededup,
                  "drop isomorphic duplicates from --file input");
    sub->add_option("--csv", f.opts.csv_path,
                    "write per-graph rows graph6,radius,verdict to this file");
    sub->add_flag("--quiet", f.quiet, "suppress progress lines on standard error");
    sub->add_option("--format", f.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--digits", f.digits, "significant digits in text output")
        ->check(CLI::Range(1, 17));
  };

  TheoremFlags t1;
  CLI::App* vt1 = app.add_subcommand(
      "verify-theorem1",
      "Theorem 1 check: scan all connected graphs of order 2n and confirm "
      "the reference graph uniquely minimizes the radius among the "
      "non-k-extendable ones");
  add_theorem_flags(vt1, t1, "half the order of the scanned graphs");
  vt1->callback([&] {
    t1.opts.progress = t1.quiet ? nullptr : &err;
    VerificationReport rep = verify_theorem1(t1.n, t1.k, t1.opts);
    render_report(rep, t1.format, t1.digits, out);
    if (!rep.passed) code = kFail;
  });

  TheoremFlags t2;
  CLI::App* vt2 = app.add_subcommand(
      "verify-theorem2",
      "Theorem 2 check: the same minimizer scan over connected balanced "
      "bipartite graphs of order 2n");
  add_theorem_flags(vt2, t2, "half the order of the scanned graphs");
  vt2->callback([&] {
    t2.opts.progress = t2.quiet ? nullptr : &err;
    VerificationReport rep = verify_theorem2(t2.n, t2.k, t2.opts);
    render_report(rep, t2.format, t2.digits, out);
    if (!rep.passed) code = kFail;
  });

  TheoremFlags t3;
  CLI::App* vt3 = app.add_subcommand(
      "verify-theorem3",
      "Theorem 3 check: scan all connected graphs of order n and confirm "
      "the reference graph uniquely minimizes the radius among the "
      "non-k-factor-critical ones");
  add_theorem_flags(vt3, t3, "order of the scanned graphs");
  vt3->callback([&] {
    t3.opts.progress = t3.quiet ? nullptr : &err;
    VerificationReport rep = verify_theorem3(t3.n, t3.k, t3.opts);
    render_report(rep, t3.format, t3.digits, out);
    if (!rep.passed) code = kFail;
  });

  // verify-lemmas ----------------------------------------------------------
  struct LemmaFlags {
    int trials = 500;
    int max_order = 10;
    std::uint64_t seed = 1;
    int limit = 10;
    ScanOptions opts;
    std::string format = "text";
    int digits = 12;
  };
  LemmaFlags lm;
  CLI::App* vl = app.add_subcommand(
      "verify-lemmas",
      "Lemma 3 and Lemma 4 property suites: adding an edge must lower the "
      "radius, and flattening a clique profile must never raise it");
  vl->add_option("--trials", lm.trials, "random edge-addition trials (Lemma 3)");
  vl->add_option("--max-order", lm.max_order, "largest random graph order");
  vl->add_option("--seed", lm.seed, "random seed; same seed, same transcript");
  vl->add_option("--sweep-limit", lm.limit,
                 "largest total order in the clique-profile sweep (Lemma 4)");
  vl->add_option("--tol", lm.opts.tol, "eigensolver acceptance residual");
  vl->add_option("--margin", lm.opts.margin,
                 "required separation of strict radius inequalities");
  vl->add_option("--format", lm.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  vl->add_option("--digits", lm.digits, "significant digits in text output")
      ->check(CLI::Range(1, 17));
  vl->callback([&] {
    VerificationReport pf = verify_lemma_pf(lm.trials, lm.max_order, lm.seed, lm.opts);
    VerificationReport bh = lemma_bh_sweep(lm.limit, lm.opts);
    if (lm.format == "json") {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      arr.push_back(pf.to_json());
      arr.push_back(bh.to_json());
      out << arr.dump() << '\n';
    } else {
      render_report(pf, "text", lm.digits, out);
      render_report(bh, "text", lm.digits, out);
    }
    if (!pf.passed || !bh.passed) code = kFail;
  });

  // scan-s ------------------------------------------------------------------
  struct ScanSFlags {
    int n = 0;
    int k = 0;
    bool bipartite = false;
    ScanOptions opts;
    std::string format = "text";
    int digits = 12;
  };
  ScanSFlags ss;
  CLI::App* scans = app.add_subcommand(
      "scan-s",
      "Separator sweep behind Theorems 1 and 2: every admissible separator "
      "size s must keep its radius above the base graph's, with the proof's "
      "row identities rechecked from the Perron vector");
  scans->add_option("--n", ss.n, "family size parameter n")->required();
  scans->add_option("--k", ss.k, "matching size")->required();
  scans->add_flag("--bipartite", ss.bipartite,
                  "sweep the bipartite family instead of the general one");
  scans->add_option("--tol", ss.opts.tol, "eigensolver acceptance residual");
  scans->add_option("--margin", ss.opts.margin,
                    "required separation of strict radius inequalities");
  scans->add_option("--format", ss.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  scans->add_option("--digits", ss.digits, "significant digits in text output")
      ->check(CLI::Range(1, 17));
  scans->callback([&] {
    VerificationReport rep = ss.bipartite
                                 ? scan_s_range_bipartite(ss.n, ss.k, ss.opts)
                                 : scan_s_range_general(ss.n, ss.k, ss.opts);
    render_report(rep, ss.format, ss.digits, out);
    if (!rep.passed) code = kFail;
  });

  // enumerate ------------------------------------------------------------
  struct EnumFlags {
    int order = 0;
    bool connected = false;
    bool bipartite = false;
  };
  EnumFlags en;
  CLI::App* enu = app.add_subcommand(
      "enumerate", "Stream one canonical graph6 line per isomorphism class");
  enu->add_option("--order", en.order, "number of vertices")->required();
  CLI::Option* conn =
      enu->add_flag("--connected-only", en.connected, "only connected graphs");
  enu->add_flag("--bipartite", en.bipartite,
                "connected balanced bipartite graphs (implies --connected-only)")
      ->excludes(conn);
  enu->callback([&] {
    auto sink = [&out](const Graph& g) {
      out << write_graph6(g) << '\n';
      return true;
    };
    if (en.bipartite)
      enumerate_connected_balanced_bipartite(en.order, sink);
    else
      enumerate_graphs(en.order, en.connected, sink);
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return code;
}

}  // namespace dsrx
