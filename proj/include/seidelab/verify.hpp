#ifndef SEIDELAB_VERIFY_HPP
#define SEIDELAB_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "seidelab/graph.hpp"
#include "seidelab/seidel.hpp"
#include "seidelab/spectral.hpp"

namespace seidelab {

enum class CheckKind { SkBasic, SkOddPairs, OddPairLower, Theorem1, Theorem2 };

inline constexpr CheckKind kAllChecks[] = {
    CheckKind::SkBasic, CheckKind::SkOddPairs, CheckKind::OddPairLower,
    CheckKind::Theorem1, CheckKind::Theorem2};

/// "sk-basic", "sk-oddpairs", "oddpair-lower", "theorem1", "theorem2".
std::string_view check_name(CheckKind kind);
std::optional<CheckKind> parse_check(std::string_view name);

/// Smallest order a checker accepts.
int check_min_order(CheckKind kind);

struct Tolerances {
  /// Strict claims pass only with margin above this.
  double strict_margin = 1e-6;
  /// Equality claims pass with |margin| at most this.
  double equality = 1e-6;
};

/**
 * Outcome of one inequality on one graph. lhs, rhs and margin are decimal
 * strings: exact integers in full, reals to 12 significant digits.
 * margin_value is the same margin as a double, for aggregation.
 */
struct VerificationReport {
  std::string graph6;
  std::string check;
  bool pass = false;
  bool exact = false;
  std::string lhs;
  std::string rhs;
  std::string margin;
  double margin_value = 0.0;

  int n = 0;
  std::optional<int> k;
  std::optional<double> p;
  std::optional<std::uint64_t> odd_pairs;
  /// theorem2 only: "equality" for the SC-class of K_n, "strict" otherwise.
  std::string branch;
};

/// 12-significant-digit rendering used for every real in reports.
std::string format_real(double x);

/**
 * Per-graph cache shared by the checkers so that a scan computes the
 * spectrum, S_k(A^2), N_op and the SC test at most once per graph.
 */
class GraphAnalysis {
 public:
  explicit GraphAnalysis(Graph g);

  const Graph& graph() const { return graph_; }
  const std::string& graph6();
  const SeidelMatrix& seidel() const { return seidel_; }
  const Spectrum& spectrum();
  const std::vector<mpz_class>& sk();
  OddPairCount odd_pairs();
  const ScEquivalence& sc_equivalence();
  double energy(double p = 1.0);

 private:
  Graph graph_;
  SeidelMatrix seidel_;
  std::optional<std::string> graph6_;
  std::optional<Spectrum> spectrum_;
  std::optional<std::vector<mpz_class>> sk_;
  std::optional<OddPairCount> odd_pairs_;
  std::optional<ScEquivalence> sc_;
};

/// S_k(A^2) >= n(n-1) C(n-2, k-1), k = 1..n. Requires n >= 2.
std::vector<VerificationReport> verify_sk_basic(GraphAnalysis& g);
std::vector<VerificationReport> verify_sk_basic(const Graph& g);

/**
 * S_k(A^2) >= n(n-1) C(n-2, k-1) + 4 N_op C(n-4, k-2), reported for
 * k = 1..n; for k > n-2 both binomials on the right reduce to the basic
 * bound or vanish. Requires n >= 4.
 */
std::vector<VerificationReport> verify_sk_oddpairs(GraphAnalysis& g);
std::vector<VerificationReport> verify_sk_oddpairs(const Graph& g);

/// N_op = 0 for the SC-class of K_n, otherwise N_op >= 2(n-3)^2. n >= 4.
VerificationReport verify_oddpair_lower(GraphAnalysis& g);
VerificationReport verify_oddpair_lower(const Graph& g);

/// E_p > (n-1)^p + (n-2) strictly, 0 < p < 2. Requires n >= 2.
VerificationReport verify_theorem1(GraphAnalysis& g, double p,
                                   const Tolerances& tol = {});
VerificationReport verify_theorem1(const Graph& g, double p,
                                   const Tolerances& tol = {});

/**
 * E_S >= 2n-2. For graphs SC-equivalent to K_n the energy must equal 2n-2
 * within tol.equality; for all others it must exceed 2n-2 by more than
 * tol.strict_margin.
 */
VerificationReport verify_theorem2(GraphAnalysis& g, const Tolerances& tol = {});
VerificationReport verify_theorem2(const Graph& g, const Tolerances& tol = {});

}  // namespace seidelab

#endif  // SEIDELAB_VERIFY_HPP
