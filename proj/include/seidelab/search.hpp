#ifndef SEIDELAB_SEARCH_HPP
#define SEIDELAB_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "seidelab/graph.hpp"
#include "seidelab/verify.hpp"

namespace seidelab {

/// Input-side failure of a graph source (unreadable file, bad line in strict
/// mode, parameters out of range).
class SourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParseIssue {
  std::size_t line = 0;
  std::string message;
};

/// One member of the boundary family: clique C = {0..n-3}, v1 = n-2,
/// v2 = n-1; |N(v1) cap C| = a, |N(v2) cap C| = b <= a, shared c, edge v1v2 = e.
struct BoundaryParams {
  int a = 0;
  int b = 0;
  int c = 0;
  bool e = false;

  friend bool operator==(const BoundaryParams&, const BoundaryParams&) = default;
};

inline constexpr int kBoundaryMinOrder = 11;
inline constexpr int kBoundaryMaxOrder = 22;
inline constexpr int kExhaustiveMaxOrder = 7;

/// All valid (a, b, c, e) for order n in generation order.
std::vector<BoundaryParams> boundary_family_parameters(int n);

/// Shared neighbours come first in C, then v1-only, then v2-only.
Graph boundary_graph(int n, const BoundaryParams& params);

/**
 * Sequential, deterministic stream of graphs. Kinds: every labelled graph of
 * order n (edge mask order), the boundary family, a graph6 file, or a fixed
 * list. Each graph is produced exactly once.
 */
class GraphSource {
 public:
  enum class Kind { AllGraphs, BoundaryFamily, Graph6Stream, Literal };

  GraphSource(GraphSource&&) noexcept;
  GraphSource& operator=(GraphSource&&) noexcept;
  ~GraphSource();

  std::optional<Graph> next();

  Kind kind() const { return kind_; }
  const std::string& descriptor() const { return descriptor_; }
  /// Malformed lines skipped by a non-strict graph6 stream.
  const std::vector<ParseIssue>& issues() const { return issues_; }

  friend GraphSource enumerate_all_graphs(int lo, int hi);
  friend GraphSource boundary_family(int lo, int hi);
  friend GraphSource stream_graph6(const std::string& path, bool strict);
  friend GraphSource literal_graphs(std::vector<Graph> graphs,
                                    std::string descriptor);

 private:
  struct State;
  GraphSource(Kind kind, std::string descriptor, std::unique_ptr<State> state);

  Kind kind_;
  std::string descriptor_;
  std::vector<ParseIssue> issues_;
  std::unique_ptr<State> state_;
};

/// All 2^C(n,2) labelled graphs for each order in [lo, hi], hi <= 7.
GraphSource enumerate_all_graphs(int lo, int hi);
inline GraphSource enumerate_all_graphs(int n) { return enumerate_all_graphs(n, n); }

/// Boundary family for each order in [lo, hi] within [11, 22].
GraphSource boundary_family(int lo, int hi);
inline GraphSource boundary_family(int n) { return boundary_family(n, n); }

/**
 * Newline-separated graph6 lines. Blank lines and a leading ">>graph6<<"
 * marker are ignored. Strict mode throws SourceError naming the line;
 * otherwise bad lines are recorded in issues() and skipped.
 */
GraphSource stream_graph6(const std::string& path, bool strict = true);

GraphSource literal_graphs(std::vector<Graph> graphs, std::string descriptor);

struct ScanOptions {
  std::vector<CheckKind> checks;
  /// p values for theorem1.
  std::vector<double> p_grid = {1.0};
  Tolerances tolerances;
  unsigned workers = 1;
  std::size_t failure_cap = 1000;
  /// Collect one GraphRow per graph (CSV view).
  bool verbose = false;
  std::size_t batch_size = 4096;
};

struct FailureRecord {
  std::string graph6;
  std::string check;
  std::string lhs;
  std::string rhs;
  std::string margin;

  friend bool operator==(const FailureRecord&, const FailureRecord&) = default;
};

struct CheckTally {
  std::uint64_t graphs = 0;   ///< graphs the check ran on
  std::uint64_t reports = 0;  ///< individual inequalities evaluated
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;  ///< graphs below the check's minimum order
  std::optional<double> min_margin;

  friend bool operator==(const CheckTally&, const CheckTally&) = default;
};

struct EnergyRecord {
  std::string graph6;
  double value = 0.0;

  friend bool operator==(const EnergyRecord&, const EnergyRecord&) = default;
};

struct GraphRow {
  std::string graph6;
  int n = 0;
  double energy = 0.0;
  std::uint64_t odd_pairs = 0;
  /// Per selected check, in option order; empty when the check was skipped.
  std::vector<std::optional<double>> min_margin;
};

struct ScanReport {
  std::string source;
  std::vector<std::string> checks;
  std::vector<double> p_grid;
  std::uint64_t graphs = 0;
  std::map<std::string, CheckTally> tallies;
  std::uint64_t failures_total = 0;
  /// Checker exceptions (e.g. eigensolver non-convergence), also failures.
  std::uint64_t numeric_errors = 0;
  std::vector<FailureRecord> failures;
  std::optional<EnergyRecord> min_energy;
  /// Graphs with |E_S - (2n-2)| within the equality tolerance, and how many
  /// of those have N_op > 0 or fail the SC-equivalence test.
  std::uint64_t equality_graphs = 0;
  std::uint64_t equality_violations = 0;
  std::vector<ParseIssue> skipped_lines;
  std::vector<GraphRow> rows;
  double wall_seconds = 0.0;

  bool all_passed() const { return failures_total == 0; }
};

/// Runs the selected checks on every graph of src. The aggregate does not
/// depend on opts.workers.
ScanReport scan(GraphSource& src, const ScanOptions& opts);

/// JSON document for the report; timing omitted when include_timing is false.
std::string report_to_json(const ScanReport& report, bool include_timing);

/// One row per graph: graph6, n, E_S, N_op, then the min margin per check.
void write_report_csv(const ScanReport& report, std::ostream& out);

/// Human-readable summary.
void write_report_plain(const ScanReport& report, std::ostream& out,
                        bool include_timing);

}  // namespace seidelab

#endif  // SEIDELAB_SEARCH_HPP
