#include <cmath>
#include <string>

#include <json.hpp>

#include "seidelab/search.hpp"

namespace seidelab {

namespace {

using Json = nlohmann::ordered_json;

// Reals go through the 12-digit rendering so the document never depends on
// digits beyond what is printed elsewhere.
Json real(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::stod(format_real(x));
}

}  // namespace

std::string report_to_json(const ScanReport& r, bool include_timing) {
  Json doc;
  doc["source"] = r.source;
  doc["checks"] = r.checks;
  Json grid = Json::array();
  for (double p : r.p_grid) grid.push_back(real(p));
  doc["p_grid"] = grid;

  Json per_check = Json::object();
  for (const std::string& name : r.checks) {
    const CheckTally& t = r.tallies.at(name);
    per_check[name] = {{"graphs", t.graphs},
                       {"reports", t.reports},
                       {"failed", t.failed},
                       {"skipped", t.skipped},
                       {"min_margin", t.min_margin ? real(*t.min_margin) : Json()}};
  }
  doc["counts"] = {{"graphs", r.graphs},
                   {"failures_total", r.failures_total},
                   {"numeric_errors", r.numeric_errors},
                   {"equality_graphs", r.equality_graphs},
                   {"equality_violations", r.equality_violations},
                   {"skipped_lines", r.skipped_lines.size()},
                   {"per_check", per_check}};

  if (r.min_energy)
    doc["min_energy"] = {{"graph6", r.min_energy->graph6},
                         {"value", real(r.min_energy->value)}};
  else
    doc["min_energy"] = nullptr;

  Json failures = Json::array();
  for (const FailureRecord& f : r.failures)
    failures.push_back({{"graph6", f.graph6},
                        {"check", f.check},
                        {"lhs", f.lhs},
                        {"rhs", f.rhs},
                        {"margin", f.margin}});
  doc["failures"] = failures;

  Json skipped = Json::array();
  for (const ParseIssue& issue : r.skipped_lines)
    skipped.push_back({{"line", issue.line}, {"message", issue.message}});
  doc["skipped_lines"] = skipped;

  if (include_timing) doc["timing"] = {{"wall_seconds", r.wall_seconds}};
  return doc.dump(2) + "\n";
}

void write_report_csv(const ScanReport& r, std::ostream& out) {
  out << "graph6,n,E_S,N_op";
  for (const std::string& name : r.checks) out << ",min_margin_" << name;
  out << '\n';
  for (const GraphRow& row : r.rows) {
    out << row.graph6 << ',' << row.n << ',' << format_real(row.energy) << ','
        << row.odd_pairs;
    for (const auto& m : row.min_margin) {
      out << ',';
      if (m) out << format_real(*m);
    }
    out << '\n';
  }
}

void write_report_plain(const ScanReport& r, std::ostream& out,
                        bool include_timing) {
  out << "source:   " << r.source << '\n';
  out << "graphs:   " << r.graphs << '\n';
  for (const std::string& name : r.checks) {
    const CheckTally& t = r.tallies.at(name);
    out << "check " << name << ": " << t.graphs << " graphs, " << t.reports
        << " inequalities, " << t.failed << " failed, " << t.skipped
        << " skipped";
    if (t.min_margin) out << ", min margin " << format_real(*t.min_margin);
    out << '\n';
  }
  if (r.min_energy)
    out << "min E_S:  " << format_real(r.min_energy->value) << " ("
        << r.min_energy->graph6 << ")\n";
  out << "equality: " << r.equality_graphs << " graphs at 2n-2, "
      << r.equality_violations << " outside the SC-class of K_n\n";
  if (!r.skipped_lines.empty())
    out << "skipped:  " << r.skipped_lines.size() << " malformed lines\n";
  out << "failures: " << r.failures_total;
  if (r.numeric_errors) out << " (" << r.numeric_errors << " numeric errors)";
  out << '\n';
  for (const FailureRecord& f : r.failures)
    out << "  FAIL " << f.check << " " << f.graph6 << " lhs=" << f.lhs
        << " rhs=" << f.rhs << " margin=" << f.margin << '\n';
  if (include_timing) out << "time:     " << format_real(r.wall_seconds) << " s\n";
}

}  // namespace seidelab
