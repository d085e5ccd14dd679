#include "seidelab/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <thread>
#include <utility>
#include <variant>

namespace seidelab {

// ---------------------------------------------------------------------------
// Boundary family

std::vector<BoundaryParams> boundary_family_parameters(int n) {
  if (n < kBoundaryMinOrder || n > kBoundaryMaxOrder)
    throw SourceError("boundary family needs 11 <= n <= 22, got " +
                      std::to_string(n));
  const int m = n - 2;
  std::vector<BoundaryParams> out;
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = std::max(0, a + b - m); c <= b; ++c)
        for (bool e : {false, true}) out.push_back({a, b, c, e});
  return out;
}

Graph boundary_graph(int n, const BoundaryParams& prm) {
  const int m = n - 2;
  if (prm.b < 0 || prm.b > prm.a || prm.a > m || prm.c < 0 || prm.c > prm.b ||
      prm.a + prm.b - prm.c > m)
    throw std::invalid_argument("invalid boundary family parameters");
  Graph g = Graph::complete(n);
  const int v1 = n - 2;
  const int v2 = n - 1;
  g.set_edge(v1, v2, prm.e);
  for (int x = 0; x < m; ++x) {
    // [0, c) shared, [c, a) v1 only, [a, a+b-c) v2 only.
    const bool to_v1 = x < prm.a;
    const bool to_v2 = x < prm.c || (x >= prm.a && x < prm.a + prm.b - prm.c);
    g.set_edge(v1, x, to_v1);
    g.set_edge(v2, x, to_v2);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Sources

namespace {

struct AllGraphsCursor {
  int n;
  int hi;
  std::uint64_t mask = 0;
  std::vector<std::pair<int, int>> pairs;

  void load_pairs() {
    pairs.clear();
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
};

struct BoundaryCursor {
  int n;
  int hi;
  std::vector<BoundaryParams> params;
  std::size_t index = 0;
};

struct StreamCursor {
  std::ifstream in;
  std::size_t line = 0;
  bool strict = true;
};

struct LiteralCursor {
  std::vector<Graph> graphs;
  std::size_t index = 0;
};

}  // namespace

struct GraphSource::State {
  std::variant<AllGraphsCursor, BoundaryCursor, StreamCursor, LiteralCursor>
      cursor;
};

GraphSource::GraphSource(Kind kind, std::string descriptor,
                         std::unique_ptr<State> state)
    : kind_(kind), descriptor_(std::move(descriptor)), state_(std::move(state)) {}
GraphSource::GraphSource(GraphSource&&) noexcept = default;
GraphSource& GraphSource::operator=(GraphSource&&) noexcept = default;
GraphSource::~GraphSource() = default;

namespace {

std::string range_text(int lo, int hi) {
  return lo == hi ? std::to_string(lo)
                  : std::to_string(lo) + ".." + std::to_string(hi);
}

}  // namespace

GraphSource enumerate_all_graphs(int lo, int hi) {
  if (lo < 1 || hi < lo)
    throw SourceError("invalid order range " + range_text(lo, hi));
  if (hi > kExhaustiveMaxOrder)
    throw SourceError("exhaustive enumeration supports n <= 7; use a graph6 "
                      "file (--g6-file) for larger orders");
  AllGraphsCursor cur;
  cur.n = lo;
  cur.hi = hi;
  cur.load_pairs();
  auto state = std::make_unique<GraphSource::State>(GraphSource::State{cur});
  return GraphSource(GraphSource::Kind::AllGraphs,
                     "all(" + range_text(lo, hi) + ")", std::move(state));
}

GraphSource boundary_family(int lo, int hi) {
  if (lo < kBoundaryMinOrder || hi > kBoundaryMaxOrder || hi < lo)
    throw SourceError("boundary family needs 11 <= n <= 22, got " +
                      range_text(lo, hi));
  BoundaryCursor cur{lo, hi, boundary_family_parameters(lo)};
  auto state = std::make_unique<GraphSource::State>(GraphSource::State{cur});
  return GraphSource(GraphSource::Kind::BoundaryFamily,
                     "boundary-family(" + range_text(lo, hi) + ")",
                     std::move(state));
}

GraphSource stream_graph6(const std::string& path, bool strict) {
  StreamCursor cur;
  cur.in.open(path);
  if (!cur.in) throw SourceError("cannot read graph6 file '" + path + "'");
  cur.strict = strict;
  auto state = std::make_unique<GraphSource::State>();
  state->cursor = std::move(cur);
  return GraphSource(GraphSource::Kind::Graph6Stream, "graph6-stream(" + path + ")",
                     std::move(state));
}

GraphSource literal_graphs(std::vector<Graph> graphs, std::string descriptor) {
  auto state = std::make_unique<GraphSource::State>();
  state->cursor = LiteralCursor{std::move(graphs)};
  return GraphSource(GraphSource::Kind::Literal, std::move(descriptor),
                     std::move(state));
}

std::optional<Graph> GraphSource::next() {
  return std::visit(
      [this](auto& cur) -> std::optional<Graph> {
        using T = std::decay_t<decltype(cur)>;
        if constexpr (std::is_same_v<T, AllGraphsCursor>) {
          while (cur.n <= cur.hi) {
            const std::uint64_t limit = std::uint64_t{1} << cur.pairs.size();
            if (cur.mask < limit) {
              Graph g(cur.n);
              for (std::uint64_t m = cur.mask; m; m &= m - 1) {
                const auto& [i, j] = cur.pairs[std::countr_zero(m)];
                g.set_edge(i, j);
              }
              ++cur.mask;
              return g;
            }
            ++cur.n;
            cur.mask = 0;
            cur.load_pairs();
          }
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, BoundaryCursor>) {
          while (cur.index == cur.params.size()) {
            if (cur.n == cur.hi) return std::nullopt;
            ++cur.n;
            cur.params = boundary_family_parameters(cur.n);
            cur.index = 0;
          }
          return boundary_graph(cur.n, cur.params[cur.index++]);
        } else if constexpr (std::is_same_v<T, StreamCursor>) {
          std::string text;
          while (std::getline(cur.in, text)) {
            ++cur.line;
            if (!text.empty() && text.back() == '\r') text.pop_back();
            if (text.empty()) continue;
            if (cur.line == 1 && text.rfind(">>graph6<<", 0) == 0) {
              text.erase(0, 10);
              if (text.empty()) continue;
            }
            try {
              return parse_graph6(text);
            } catch (const Graph6Error& e) {
              if (cur.strict)
                throw SourceError("line " + std::to_string(cur.line) + ": " +
                                  e.what());
              issues_.push_back({cur.line, e.what()});
            }
          }
          if (cur.in.bad())
            throw SourceError("read error after line " + std::to_string(cur.line));
          return std::nullopt;
        } else {
          if (cur.index == cur.graphs.size()) return std::nullopt;
          return cur.graphs[cur.index++];
        }
      },
      state_->cursor);
}

// ---------------------------------------------------------------------------
// Scan driver

namespace {

struct Partial {
  std::uint64_t graphs = 0;
  std::vector<CheckTally> tallies;
  std::uint64_t failures_total = 0;
  std::uint64_t numeric_errors = 0;
  std::vector<FailureRecord> failures;
  std::optional<EnergyRecord> min_energy;
  std::uint64_t equality_graphs = 0;
  std::uint64_t equality_violations = 0;
  std::vector<GraphRow> rows;
};

void note_margin(CheckTally& t, double m) {
  t.min_margin = t.min_margin ? std::min(*t.min_margin, m) : m;
}

std::vector<VerificationReport> run_check(CheckKind kind, GraphAnalysis& a,
                                          const ScanOptions& opts) {
  switch (kind) {
    case CheckKind::SkBasic: return verify_sk_basic(a);
    case CheckKind::SkOddPairs: return verify_sk_oddpairs(a);
    case CheckKind::OddPairLower: return {verify_oddpair_lower(a)};
    case CheckKind::Theorem1: {
      std::vector<VerificationReport> out;
      for (double p : opts.p_grid)
        out.push_back(verify_theorem1(a, p, opts.tolerances));
      return out;
    }
    case CheckKind::Theorem2: return {verify_theorem2(a, opts.tolerances)};
  }
  return {};
}

void process_graph(const Graph& g, const ScanOptions& opts, Partial& acc) {
  GraphAnalysis a(g);
  const int n = g.order();
  ++acc.graphs;

  auto fail = [&](FailureRecord rec) {
    ++acc.failures_total;
    if (acc.failures.size() < opts.failure_cap) acc.failures.push_back(std::move(rec));
  };

  std::optional<double> energy;
  try {
    energy = a.energy(1.0);
  } catch (const NonConvergenceError& e) {
    ++acc.numeric_errors;
    fail({a.graph6(), "spectrum", "", "", std::string("error: ") + e.what()});
  }
  if (energy) {
    if (!acc.min_energy || *energy < acc.min_energy->value)
      acc.min_energy = EnergyRecord{a.graph6(), *energy};
    if (std::abs(*energy - (2.0 * n - 2.0)) <= opts.tolerances.equality) {
      ++acc.equality_graphs;
      if (a.odd_pairs() != 0 || !a.sc_equivalence().equivalent)
        ++acc.equality_violations;
    }
  }

  GraphRow row;
  if (opts.verbose) {
    row.graph6 = a.graph6();
    row.n = n;
    row.energy = energy.value_or(std::nan(""));
    row.odd_pairs = a.odd_pairs();
  }

  for (std::size_t ci = 0; ci < opts.checks.size(); ++ci) {
    const CheckKind kind = opts.checks[ci];
    CheckTally& tally = acc.tallies[ci];
    std::optional<double> row_min;
    if (n < check_min_order(kind)) {
      ++tally.skipped;
      if (opts.verbose) row.min_margin.push_back(std::nullopt);
      continue;
    }
    ++tally.graphs;
    try {
      for (const VerificationReport& r : run_check(kind, a, opts)) {
        ++tally.reports;
        note_margin(tally, r.margin_value);
        row_min = row_min ? std::min(*row_min, r.margin_value) : r.margin_value;
        if (!r.pass) {
          ++tally.failed;
          fail({r.graph6, r.check, r.lhs, r.rhs, r.margin});
        }
      }
    } catch (const std::exception& e) {
      if (dynamic_cast<const NonConvergenceError*>(&e)) ++acc.numeric_errors;
      ++tally.failed;
      fail({a.graph6(), std::string(check_name(kind)), "", "",
            std::string("error: ") + e.what()});
    }
    if (opts.verbose) row.min_margin.push_back(row_min);
  }
  if (opts.verbose) acc.rows.push_back(std::move(row));
}

// Appends `later` (covering graphs after those in `acc`) to `acc`.
void merge(Partial& acc, Partial&& later, std::size_t cap) {
  acc.graphs += later.graphs;
  for (std::size_t i = 0; i < acc.tallies.size(); ++i) {
    CheckTally& t = acc.tallies[i];
    const CheckTally& u = later.tallies[i];
    t.graphs += u.graphs;
    t.reports += u.reports;
    t.failed += u.failed;
    t.skipped += u.skipped;
    if (u.min_margin) note_margin(t, *u.min_margin);
  }
  acc.failures_total += later.failures_total;
  acc.numeric_errors += later.numeric_errors;
  for (FailureRecord& f : later.failures) {
    if (acc.failures.size() >= cap) break;
    acc.failures.push_back(std::move(f));
  }
  if (later.min_energy &&
      (!acc.min_energy || later.min_energy->value < acc.min_energy->value))
    acc.min_energy = std::move(later.min_energy);
  acc.equality_graphs += later.equality_graphs;
  acc.equality_violations += later.equality_violations;
  std::move(later.rows.begin(), later.rows.end(), std::back_inserter(acc.rows));
}

Partial process_range(const std::vector<Graph>& batch, std::size_t begin,
                      std::size_t end, const ScanOptions& opts) {
  Partial p;
  p.tallies.resize(opts.checks.size());
  for (std::size_t i = begin; i < end; ++i) process_graph(batch[i], opts, p);
  return p;
}

}  // namespace

ScanReport scan(GraphSource& src, const ScanOptions& opts) {
  if (opts.checks.empty()) throw std::invalid_argument("scan needs at least one check");
  for (double p : opts.p_grid)
    if (!(p > 0.0 && p < 2.0))
      throw std::invalid_argument("p values must lie in (0, 2)");
  const auto start = std::chrono::steady_clock::now();
  const unsigned workers = std::max(1U, opts.workers);
  const std::size_t batch_size = std::max<std::size_t>(1, opts.batch_size);

  Partial total;
  total.tallies.resize(opts.checks.size());
  std::vector<Graph> batch;
  batch.reserve(batch_size);
  bool exhausted = false;
  while (!exhausted) {
    batch.clear();
    while (batch.size() < batch_size) {
      std::optional<Graph> g = src.next();
      if (!g) {
        exhausted = true;
        break;
      }
      batch.push_back(std::move(*g));
    }
    if (batch.empty()) break;

    // Contiguous slices, merged back in slice order.
    const std::size_t slices = std::min<std::size_t>(workers, batch.size());
    std::vector<Partial> parts(slices);
    auto bounds = [&](std::size_t s) { return batch.size() * s / slices; };
    if (slices == 1) {
      parts[0] = process_range(batch, 0, batch.size(), opts);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(slices);
      for (std::size_t s = 0; s < slices; ++s)
        pool.emplace_back([&, s] {
          try {
            parts[s] = process_range(batch, bounds(s), bounds(s + 1), opts);
          } catch (...) {
            errors[s] = std::current_exception();
          }
        });
      for (auto& t : pool) t.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (Partial& p : parts) merge(total, std::move(p), opts.failure_cap);
  }

  ScanReport report;
  report.source = src.descriptor();
  for (CheckKind k : opts.checks) report.checks.emplace_back(check_name(k));
  report.p_grid = opts.p_grid;
  report.graphs = total.graphs;
  for (std::size_t i = 0; i < opts.checks.size(); ++i)
    report.tallies[std::string(check_name(opts.checks[i]))] = total.tallies[i];
  report.failures_total = total.failures_total;
  report.numeric_errors = total.numeric_errors;
  report.failures = std::move(total.failures);
  report.min_energy = std::move(total.min_energy);
  report.equality_graphs = total.equality_graphs;
  report.equality_violations = total.equality_violations;
  report.skipped_lines = src.issues();
  report.rows = std::move(total.rows);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace seidelab
