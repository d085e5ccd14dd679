#include "seidelab/verify.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace seidelab {

namespace {

void require_order(const Graph& g, CheckKind kind) {
  if (g.order() < check_min_order(kind))
    throw std::domain_error(std::string(check_name(kind)) + " requires n >= " +
                            std::to_string(check_min_order(kind)));
}

VerificationReport exact_report(GraphAnalysis& g, CheckKind kind,
                                const mpz_class& lhs, const mpz_class& rhs) {
  VerificationReport r;
  r.graph6 = g.graph6();
  r.check = std::string(check_name(kind));
  r.exact = true;
  const mpz_class margin = lhs - rhs;
  r.pass = margin >= 0;
  r.lhs = lhs.get_str();
  r.rhs = rhs.get_str();
  r.margin = margin.get_str();
  r.margin_value = margin.get_d();
  r.n = g.graph().order();
  return r;
}

VerificationReport real_report(GraphAnalysis& g, CheckKind kind, double lhs,
                               double rhs) {
  VerificationReport r;
  r.graph6 = g.graph6();
  r.check = std::string(check_name(kind));
  r.lhs = format_real(lhs);
  r.rhs = format_real(rhs);
  r.margin_value = lhs - rhs;
  r.margin = format_real(r.margin_value);
  r.n = g.graph().order();
  return r;
}

}  // namespace

std::string_view check_name(CheckKind kind) {
  switch (kind) {
    case CheckKind::SkBasic: return "sk-basic";
    case CheckKind::SkOddPairs: return "sk-oddpairs";
    case CheckKind::OddPairLower: return "oddpair-lower";
    case CheckKind::Theorem1: return "theorem1";
    case CheckKind::Theorem2: return "theorem2";
  }
  return "unknown";
}

std::optional<CheckKind> parse_check(std::string_view name) {
  for (CheckKind kind : kAllChecks)
    if (check_name(kind) == name) return kind;
  return std::nullopt;
}

int check_min_order(CheckKind kind) {
  switch (kind) {
    case CheckKind::SkBasic: return 2;
    case CheckKind::SkOddPairs: return 4;
    case CheckKind::OddPairLower: return 4;
    case CheckKind::Theorem1: return 2;
    case CheckKind::Theorem2: return 1;
  }
  return 1;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

GraphAnalysis::GraphAnalysis(Graph g)
    : graph_(std::move(g)), seidel_(seidel_matrix(graph_)) {}

const std::string& GraphAnalysis::graph6() {
  if (!graph6_) graph6_ = encode_graph6(graph_);
  return *graph6_;
}

const Spectrum& GraphAnalysis::spectrum() {
  if (!spectrum_) spectrum_ = eigenvalues(seidel_);
  return *spectrum_;
}

const std::vector<mpz_class>& GraphAnalysis::sk() {
  if (!sk_) sk_ = elementary_symmetric_A2(seidel_);
  return *sk_;
}

OddPairCount GraphAnalysis::odd_pairs() {
  if (!odd_pairs_) odd_pairs_ = count_odd_pairs(graph_);
  return *odd_pairs_;
}

const ScEquivalence& GraphAnalysis::sc_equivalence() {
  if (!sc_) sc_ = is_sc_equivalent_to_complete(graph_);
  return *sc_;
}

double GraphAnalysis::energy(double p) { return p_energy(spectrum(), p); }

std::vector<VerificationReport> verify_sk_basic(GraphAnalysis& g) {
  require_order(g.graph(), CheckKind::SkBasic);
  const long n = g.graph().order();
  const auto& sk = g.sk();
  std::vector<VerificationReport> out;
  for (long k = 1; k <= n; ++k) {
    const mpz_class rhs = n * (n - 1) * binomial(n - 2, k - 1);
    VerificationReport r = exact_report(g, CheckKind::SkBasic, sk[k], rhs);
    r.k = static_cast<int>(k);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> verify_sk_basic(const Graph& g) {
  GraphAnalysis a(g);
  return verify_sk_basic(a);
}

std::vector<VerificationReport> verify_sk_oddpairs(GraphAnalysis& g) {
  require_order(g.graph(), CheckKind::SkOddPairs);
  const long n = g.graph().order();
  const auto& sk = g.sk();
  const mpz_class nop = static_cast<unsigned long>(g.odd_pairs());
  std::vector<VerificationReport> out;
  for (long k = 1; k <= n; ++k) {
    const mpz_class rhs = n * (n - 1) * binomial(n - 2, k - 1) +
                          4 * nop * binomial(n - 4, k - 2);
    VerificationReport r = exact_report(g, CheckKind::SkOddPairs, sk[k], rhs);
    r.k = static_cast<int>(k);
    r.odd_pairs = g.odd_pairs();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> verify_sk_oddpairs(const Graph& g) {
  GraphAnalysis a(g);
  return verify_sk_oddpairs(a);
}

VerificationReport verify_oddpair_lower(GraphAnalysis& g) {
  require_order(g.graph(), CheckKind::OddPairLower);
  const long n = g.graph().order();
  const mpz_class nop = static_cast<unsigned long>(g.odd_pairs());
  VerificationReport r;
  if (g.sc_equivalence().equivalent) {
    // SC-class of K_n: no odd pairs at all.
    r = exact_report(g, CheckKind::OddPairLower, nop, 0);
    r.pass = nop == 0;
    r.branch = "equality";
  } else {
    r = exact_report(g, CheckKind::OddPairLower, nop, 2 * (n - 3) * (n - 3));
    r.branch = "strict";
  }
  r.odd_pairs = g.odd_pairs();
  return r;
}

VerificationReport verify_oddpair_lower(const Graph& g) {
  GraphAnalysis a(g);
  return verify_oddpair_lower(a);
}

VerificationReport verify_theorem1(GraphAnalysis& g, double p,
                                   const Tolerances& tol) {
  require_order(g.graph(), CheckKind::Theorem1);
  if (!(p > 0.0 && p < 2.0))
    throw std::domain_error("theorem1 requires 0 < p < 2");
  const int n = g.graph().order();
  const double rhs = std::pow(n - 1.0, p) + (n - 2.0);
  VerificationReport r = real_report(g, CheckKind::Theorem1, g.energy(p), rhs);
  r.pass = r.margin_value > tol.strict_margin;
  r.p = p;
  return r;
}

VerificationReport verify_theorem1(const Graph& g, double p,
                                   const Tolerances& tol) {
  GraphAnalysis a(g);
  return verify_theorem1(a, p, tol);
}

VerificationReport verify_theorem2(GraphAnalysis& g, const Tolerances& tol) {
  const int n = g.graph().order();
  VerificationReport r =
      real_report(g, CheckKind::Theorem2, g.energy(1.0), 2.0 * n - 2.0);
  if (g.sc_equivalence().equivalent) {
    r.branch = "equality";
    r.pass = std::abs(r.margin_value) <= tol.equality;
  } else {
    r.branch = "strict";
    r.pass = r.margin_value > tol.strict_margin;
  }
  r.p = 1.0;
  return r;
}

VerificationReport verify_theorem2(const Graph& g, const Tolerances& tol) {
  GraphAnalysis a(g);
  return verify_theorem2(a, tol);
}

}  // namespace seidelab
