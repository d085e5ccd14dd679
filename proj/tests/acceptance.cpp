// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "seidelab/analytic.hpp"
#include "seidelab/search.hpp"
#include "seidelab/seidel.hpp"
#include "seidelab/spectral.hpp"
#include "seidelab/verify.hpp"

using namespace seidelab;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) detail << "first failure: " << why << "; ";
    pass = pass && ok;
  }
};

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

Graph random_graph(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.set_edge(i, j);
  return g;
}

// det(xI - S(K_n)) = (x - 1)^(n-1) (x + n - 1), expanded exactly.
std::vector<mpz_class> complete_char_poly(int n) {
  std::vector<mpz_class> poly{mpz_class(n - 1), mpz_class(1)};
  for (int i = 0; i < n - 1; ++i) {
    std::vector<mpz_class> next(poly.size() + 1, 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k];
    }
    poly = next;
  }
  return poly;
}

void criterion1(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n = 2; n <= 50; ++n) {
    const Graph kn = Graph::complete(n);
    const double e = p_energy(eigenvalues(seidel_matrix(kn)), 1.0);
    worst = std::max(worst, std::abs(e - (2.0 * n - 2)));
    o.require(std::abs(e - (2.0 * n - 2)) <= 1e-8, "E_S(K_" + std::to_string(n) + ")");
    o.require(char_poly_exact(seidel_matrix(kn)).coeffs == complete_char_poly(n),
              "exact spectrum of K_" + std::to_string(n));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(secs < 5.0, "runtime");
  o.detail << "max |E - (2n-2)| = " << worst << ", " << secs << " s";
}

void criterion2(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  std::uint64_t graphs = 0, equality = 0;
  for (int n = 1; n <= kExhaustiveMaxOrder; ++n) {
    auto src = enumerate_all_graphs(n);
    ScanOptions opts;
    opts.checks = {CheckKind::Theorem2};
    opts.workers = worker_count();
    const ScanReport r = scan(src, opts);
    graphs += r.graphs;
    equality += r.equality_graphs;
    o.require(r.failures_total == 0, "theorem2 failure at n=" + std::to_string(n));
    o.require(r.equality_violations == 0,
              "equality witness with N_op > 0 or not SC-equivalent at n=" +
                  std::to_string(n));
    o.require(r.min_energy && std::abs(r.min_energy->value - (2.0 * n - 2)) <= 1e-6,
              "minimum energy at n=" + std::to_string(n));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.detail << graphs << " graphs, " << equality << " equality graphs, " << secs << " s";
}

void criterion3(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  auto src = boundary_family(kBoundaryMinOrder, kBoundaryMaxOrder);
  ScanOptions opts;
  opts.checks = {CheckKind::Theorem2};
  opts.workers = worker_count();
  const ScanReport r = scan(src, opts);
  o.require(r.failures_total == 0, "boundary family member failed theorem2");
  o.require(r.numeric_errors == 0, "numeric error");
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(secs < 30.0, "runtime");

  // Smallest gap above 2n-2 among members outside the SC-class of K_n.
  double gap = INFINITY;
  auto again = boundary_family(kBoundaryMinOrder, kBoundaryMaxOrder);
  while (auto g = again.next()) {
    if (is_sc_equivalent_to_complete(*g).equivalent) continue;
    const double e = p_energy(eigenvalues(seidel_matrix(*g)), 1.0);
    gap = std::min(gap, e - (2.0 * g->order() - 2));
  }
  o.require(gap > 1e-6, "strict gap");
  o.detail << r.graphs << " graphs, " << r.equality_graphs << " at 2n-2, "
           << "smallest strict gap " << gap << ", " << secs << " s";
}

void criterion4(Outcome& o) {
  std::mt19937_64 rng(20240601);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = random_graph(n, rng);
    const Spectrum s = eigenvalues(seidel_matrix(g));
    const auto sk = elementary_symmetric_A2(seidel_matrix(g));
    for (double p : {0.3, 0.5, 1.0, 1.5, 1.9}) {
      const double e = p_energy(s, p);
      const double err = std::abs(energy_by_integral(sk, p) - e) / std::max(1.0, e);
      worst = std::max(worst, err);
      o.require(err <= 1e-6, encode_graph6(g) + " p=" + std::to_string(p));
    }
  }
  o.detail << "worst scaled difference " << worst;
}

void criterion5(Outcome& o) {
  const double closed = cp_constant(0.5);
  const double quad = cp_constant_by_quadrature(0.5);
  o.require(std::abs(closed - 0.159154943) <= 1e-9, "closed-form value");
  o.require(std::abs(quad - closed) <= 1e-9 * closed, "quadrature agreement");
  o.detail << "C_1/2 = " << format_real(closed) << ", quadrature " << format_real(quad);
}

void criterion6(Outcome& o) {
  std::uint64_t graphs = 0, reports = 0;
  for (int n = 2; n <= kExhaustiveMaxOrder; ++n) {
    const mpz_class s1 = n * (n - 1);
    auto src = enumerate_all_graphs(n);
    while (auto g = src.next()) {
      GraphAnalysis a(*g);
      ++graphs;
      o.require(a.sk()[1] == s1, "S_1 of " + a.graph6());
      for (const auto& r : verify_sk_basic(a)) {
        ++reports;
        o.require(r.pass, "sk-basic " + r.graph6);
      }
      if (n < 4) continue;
      for (const auto& r : verify_sk_oddpairs(a)) {
        ++reports;
        o.require(r.pass, "sk-oddpairs " + r.graph6);
      }
    }
  }
  o.detail << graphs << " graphs, " << reports << " exact inequalities";
}

void criterion7(Outcome& o) {
  std::uint64_t graphs = 0, classes = 0;
  for (int n = 1; n <= kExhaustiveMaxOrder; ++n) {
    const std::uint64_t floor = 2ULL * (n - 3) * (n - 3);
    auto src = enumerate_all_graphs(n);
    while (auto g = src.next()) {
      ++graphs;
      const auto op = count_odd_pairs(*g);
      const bool sc = is_sc_equivalent_to_complete(*g).equivalent;
      classes += sc;
      o.require((op == 0) == sc, "criterion " + encode_graph6(*g));
      if (op > 0) o.require(op >= floor, "lower bound " + encode_graph6(*g));
    }
  }
  o.detail << graphs << " graphs, " << classes << " SC-equivalent to K_n";
}

void criterion8(Outcome& o) {
  auto src = enumerate_all_graphs(2, 6);
  ScanOptions opts;
  opts.checks = {CheckKind::Theorem1};
  opts.p_grid = {0.25, 0.5, 1.0, 1.5, 1.75};
  opts.workers = worker_count();
  const ScanReport r = scan(src, opts);
  const auto& tally = r.tallies.at("theorem1");
  o.require(r.failures_total == 0, "theorem1 failure");
  o.require(tally.reports == r.graphs * 5, "report count");
  o.detail << r.graphs << " graphs, " << tally.reports << " inequalities, min margin "
           << (tally.min_margin ? *tally.min_margin : 0.0);
}

void criterion9(Outcome& o) {
  std::mt19937_64 rng(97);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uint64_t identities = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int rows = dim(rng), cols = dim(rng);
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = entry(rng);
    for (int k = 1; k <= std::min(rows, cols); ++k) {
      const auto sides = cauchy_binet_check(m, k);
      ++identities;
      o.require(sides.lhs == sides.rhs, "matrix " + std::to_string(trial));
    }
  }
  o.detail << "1000 matrices, " << identities << " identities";
}

void criterion10(Outcome& o) {
  std::mt19937_64 rng(1009);
  std::uniform_real_distribution<double> expo(-3.0, 3.0);
  double min_gap = INFINITY;
  for (int trial = 0; trial < 1000; ++trial) {
    const CubicCoefficients cc{std::pow(10.0, expo(rng)), std::pow(10.0, expo(rng)),
                               std::pow(10.0, expo(rng))};
    const double gap = cubic_integral_lhs(cc) - cubic_bound_rhs(cc);
    min_gap = std::min(min_gap, gap);
    o.require(gap >= -1e-9, "cubic " + std::to_string(trial));
  }
  const double w3 = cubic_integral_lhs({3, 3, 1});
  const double w4 = cubic_integral_lhs({6, 9, 4});
  o.require(std::abs(w3 - 3.0) <= 1e-7, "(1+t)^3 witness");
  o.require(std::abs(w4 - 4.0) <= 1e-7, "(1+4t)(1+t)^2 witness");
  o.detail << "min LHS - RHS " << min_gap << ", witnesses " << format_real(w3) << " and "
           << format_real(w4);
}

void criterion11(Outcome& o) {
  const std::vector<CheckKind> all(std::begin(kAllChecks), std::end(kAllChecks));
  const std::vector<std::pair<std::string, std::function<GraphSource()>>> sources = {
      {"all(6)", [] { return enumerate_all_graphs(6); }},
      {"boundary(11..13)", [] { return boundary_family(11, 13); }},
  };
  for (const auto& [name, make] : sources) {
    std::string reference;
    for (unsigned workers : {1u, 2u, 8u}) {
      auto src = make();
      ScanOptions opts;
      opts.checks = all;
      opts.p_grid = {0.5, 1.0, 1.5};
      opts.workers = workers;
      const std::string json = report_to_json(scan(src, opts), false);
      if (reference.empty())
        reference = json;
      else
        o.require(json == reference, name + " with " + std::to_string(workers) + " workers");
    }
  }
  o.detail << "workers 1, 2, 8 on all(6) and boundary(11..13)";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)(Outcome&)>> criteria = {
      {"complete-graph equality, n = 2..50", criterion1},
      {"exhaustive E_S >= 2n-2, n <= 7", criterion2},
      {"boundary family, n = 11..22", criterion3},
      {"integral identity on 100 random graphs", criterion4},
      {"constant C_1/2", criterion5},
      {"exact S_k bounds, n <= 7", criterion6},
      {"odd-pair lemmas, n <= 7", criterion7},
      {"E_p > (n-1)^p + (n-2), n <= 6", criterion8},
      {"Cauchy-Binet on 1000 random matrices", criterion9},
      {"cubic lemma", criterion10},
      {"determinism across worker counts", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first
              << "  [" << o.detail.str() << "]" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
