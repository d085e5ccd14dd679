#include "seidelab/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "seidelab/analytic.hpp"
#include "seidelab/search.hpp"

namespace seidelab {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OrderRange {
  int lo;
  int hi;
};

// "7" or "11..22".
OrderRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int n = std::stoi(text, &used);
      if (used != text.size()) throw UsageError("");
      return {n, n};
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw UsageError("");
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw UsageError("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw UsageError("invalid order range '" + text + "' (expected N or LO..HI)");
  }
}

double default_tolerance() {
  const char* env = std::getenv(kToleranceEnv);
  if (!env || !*env) return 1e-6;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0))
    throw UsageError(std::string(kToleranceEnv) + " must be a positive number");
  return v;
}

std::vector<CheckKind> parse_checks(const std::vector<std::string>& names) {
  std::vector<CheckKind> out;
  for (const std::string& name : names) {
    const auto kind = parse_check(name);
    if (!kind) throw UsageError("unknown check '" + name + "'");
    if (std::find(out.begin(), out.end(), *kind) == out.end()) out.push_back(*kind);
  }
  return out;
}

// ---------------------------------------------------------------------------

struct EnergyConfig {
  std::string g6;
  std::vector<double> p = {1.0};
  std::string backend = "both";
  std::string format = "plain";
};

int cmd_energy(const EnergyConfig& cfg, std::ostream& out) {
  for (double p : cfg.p)
    if (!(p > 0.0 && p <= 2.0)) throw UsageError("p values must lie in (0, 2]");
  const Graph g = parse_graph6(cfg.g6);
  GraphAnalysis a(g);
  const bool eig = cfg.backend != "integral";
  const bool integral = cfg.backend != "eig";

  const Spectrum& spec = a.spectrum();
  struct Row {
    double p;
    std::optional<double> eig;
    std::optional<double> integral;
  };
  std::vector<Row> rows;
  for (double p : cfg.p) {
    Row row{p, std::nullopt, std::nullopt};
    if (eig) row.eig = p_energy(spec, p);
    // The integral representation covers 0 < p < 2 only.
    if (integral && p < 2.0) row.integral = energy_by_integral(a.sk(), p);
    rows.push_back(row);
  }
  const auto& sc = a.sc_equivalence();

  if (cfg.format == "json") {
    nlohmann::ordered_json doc;
    doc["graph6"] = a.graph6();
    doc["n"] = g.order();
    std::vector<double> values;
    for (double v : spec.values) values.push_back(std::stod(format_real(v)));
    doc["spectrum"] = values;
    doc["residual"] = std::stod(format_real(spec.residual));
    auto energies = nlohmann::ordered_json::array();
    for (const Row& r : rows) {
      nlohmann::ordered_json e;
      e["p"] = r.p;
      e["eigen"] = r.eig ? nlohmann::ordered_json(std::stod(format_real(*r.eig)))
                         : nlohmann::ordered_json();
      e["integral"] = r.integral
                          ? nlohmann::ordered_json(std::stod(format_real(*r.integral)))
                          : nlohmann::ordered_json();
      energies.push_back(e);
    }
    doc["energies"] = energies;
    doc["odd_pairs"] = a.odd_pairs();
    doc["sc_equivalent_to_complete"] = sc.equivalent;
    out << doc.dump(2) << '\n';
    return kExitOk;
  }

  out << "graph6: " << a.graph6() << '\n';
  out << "n: " << g.order() << '\n';
  out << "spectrum:";
  for (double v : spec.values) out << ' ' << format_real(v);
  out << '\n';
  out << "residual: " << format_real(spec.residual) << '\n';
  for (const Row& r : rows) {
    out << "E_" << format_real(r.p) << ":";
    if (r.eig) out << " eigen=" << format_real(*r.eig);
    if (r.integral) out << " integral=" << format_real(*r.integral);
    if (r.eig && r.integral)
      out << " diff=" << format_real(std::abs(*r.eig - *r.integral));
    if (!r.eig && !r.integral) out << " n/a";
    out << '\n';
  }
  if (std::find(cfg.p.begin(), cfg.p.end(), 1.0) != cfg.p.end() && eig)
    out << "E_S = " << format_real(p_energy(spec, 1.0)) << '\n';
  out << "N_op: " << a.odd_pairs() << '\n';
  out << "SC-equivalent-to-complete = " << (sc.equivalent ? "true" : "false")
      << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyConfig {
  std::string g6;
  std::string g6_file;
  std::string all_n;
  std::string boundary;
  std::vector<std::string> checks;
  std::vector<double> p = {1.0};
  std::string format = "plain";
  unsigned workers = 1;
  bool no_timing = false;
  bool lenient = false;
  std::string output;
  std::size_t failure_cap = 1000;
  std::optional<double> strict_margin;
  std::optional<double> equality_tol;
};

int cmd_verify(const VerifyConfig& cfg, std::ostream& out) {
  ScanOptions opts;
  opts.checks = cfg.checks.empty()
                    ? std::vector<CheckKind>(std::begin(kAllChecks), std::end(kAllChecks))
                    : parse_checks(cfg.checks);
  for (double p : cfg.p)
    if (!(p > 0.0 && p < 2.0)) throw UsageError("p values must lie in (0, 2)");
  opts.p_grid = cfg.p;
  const double tol = default_tolerance();
  opts.tolerances.strict_margin = cfg.strict_margin.value_or(tol);
  opts.tolerances.equality = cfg.equality_tol.value_or(tol);
  if (!(opts.tolerances.strict_margin > 0.0) || !(opts.tolerances.equality > 0.0))
    throw UsageError("tolerances must be positive");
  opts.workers = cfg.workers;
  opts.failure_cap = cfg.failure_cap;
  opts.verbose = cfg.format == "csv";

  std::optional<GraphSource> src;
  if (!cfg.g6.empty()) {
    src.emplace(literal_graphs({parse_graph6(cfg.g6)}, "graph6(" + cfg.g6 + ")"));
  } else if (!cfg.g6_file.empty()) {
    src.emplace(stream_graph6(cfg.g6_file, !cfg.lenient));
  } else if (!cfg.all_n.empty()) {
    const OrderRange r = parse_range(cfg.all_n);
    src.emplace(enumerate_all_graphs(r.lo, r.hi));
  } else {
    const OrderRange r = parse_range(cfg.boundary);
    src.emplace(boundary_family(r.lo, r.hi));
  }

  const ScanReport report = scan(*src, opts);

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) throw UsageError("cannot write '" + cfg.output + "'");
    sink = &file;
  }
  if (cfg.format == "json")
    *sink << report_to_json(report, !cfg.no_timing);
  else if (cfg.format == "csv")
    write_report_csv(report, *sink);
  else
    write_report_plain(report, *sink, !cfg.no_timing);
  if (sink != &out) write_report_plain(report, out, !cfg.no_timing);

  if (report.numeric_errors > 0) return kExitNumericError;
  return report.all_passed() ? kExitOk : kExitCheckFailure;
}

// ---------------------------------------------------------------------------

int cmd_constants(const std::vector<double>& ps, std::ostream& out,
                  std::ostream& err) {
  for (double p : ps)
    if (!(p > 0.0 && p < 1.0)) throw UsageError("C_p needs 0 < p < 1");
  for (double p : ps) {
    const double closed = cp_constant(p);
    const double quad = cp_constant_by_quadrature(p);
    if (std::sin(std::numbers::pi * p) < 1e-2)
      err << "warning: p = " << format_real(p)
          << " is near-degenerate (sin(pi p) < 0.01)\n";
    out << "p=" << format_real(p) << " C_p=" << format_real(closed)
        << " quadrature=" << format_real(quad)
        << " diff=" << format_real(std::abs(closed - quad)) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Seidel energy verification laboratory", "seidelab"};
  app.require_subcommand(1);

  EnergyConfig ecfg;
  auto* energy = app.add_subcommand("energy", "Spectrum, p-energies, N_op and SC test of one graph");
  energy->add_option("--g6", ecfg.g6, "graph6 string")->required();
  energy->add_option("-p", ecfg.p, "p values in (0, 2]")->delimiter(',');
  energy->add_option("--backend", ecfg.backend, "eig, integral or both")
      ->check(CLI::IsMember({"eig", "integral", "both"}));
  energy->add_option("--format", ecfg.format, "plain or json")
      ->check(CLI::IsMember({"plain", "json"}));

  VerifyConfig vcfg;
  auto* verify = app.add_subcommand("verify", "Run lemma and theorem checkers over a graph source");
  auto* input = verify->add_option_group("input", "exactly one graph source");
  input->add_option("--g6", vcfg.g6, "single graph6 string");
  input->add_option("--g6-file", vcfg.g6_file, "file of graph6 lines");
  input->add_option("--all-n", vcfg.all_n, "all labelled graphs of order N or LO..HI (<= 7)");
  input->add_option("--boundary-family", vcfg.boundary, "boundary family for N or LO..HI in 11..22");
  input->require_option(1);
  verify->add_option("--checks", vcfg.checks,
                     "comma list of sk-basic, sk-oddpairs, oddpair-lower, theorem1, theorem2")
      ->delimiter(',');
  verify->add_option("-p", vcfg.p, "p grid for theorem1, values in (0, 2)")->delimiter(',');
  verify->add_option("--format", vcfg.format, "plain, json or csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  verify->add_option("--workers", vcfg.workers, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--no-timing", vcfg.no_timing, "omit wall-clock timing from reports");
  verify->add_flag("--lenient", vcfg.lenient, "skip malformed graph6 lines instead of aborting");
  verify->add_option("-o,--output", vcfg.output, "write the report to a file");
  verify->add_option("--failure-cap", vcfg.failure_cap, "maximum failures listed");
  verify->add_option("--strict-margin", vcfg.strict_margin, "margin required by strict inequalities");
  verify->add_option("--equality-tol", vcfg.equality_tol, "tolerance for equality claims");

  std::vector<double> cps = {0.5};
  auto* constants = app.add_subcommand("constants", "C_p by closed form and by quadrature");
  constants->add_option("-p", cps, "p values in (0, 1)")->delimiter(',');

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (energy->parsed()) return cmd_energy(ecfg, out);
    if (verify->parsed()) return cmd_verify(vcfg, out);
    return cmd_constants(cps, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Graph6Error& e) {
    err << "error: graph6: " << e.what() << '\n';
    return kExitInputError;
  } catch (const SourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const NonConvergenceError& e) {
    err << "error: numeric: " << e.what() << '\n';
    return kExitNumericError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace seidelab
