#ifndef SEIDELAB_ANALYTIC_HPP
#define SEIDELAB_ANALYTIC_HPP

#include <span>
#include <vector>

#include <gmpxx.h>

namespace seidelab {

/// Settings for the log-polynomial integral engine.
struct QuadratureSpec {
  /// Relative accuracy target, in (0, 1e-4].
  double relative_tolerance = 1e-10;
  /// Upper limit on dyadic panels per half-line before giving up.
  int max_panels = 900;
  /// Maximum bisection depth inside one panel.
  int max_depth = 40;

  void validate() const;
};

/**
 * I(q) = integral over (0, inf) of ln f(t) * t^(-q-1) dt for
 * f(t) = 1 + a_1 t + ... + a_r t^r with a_k >= 0 and 0 < q < 1.
 *
 * (0, 1] is covered by dyadic panels [2^-k-1, 2^-k] integrated with adaptive
 * Gauss-Kronrod; once the Taylor series of ln f matches a panel to tolerance,
 * the rest of the way to 0 is integrated term by term. (1, inf) is mapped to
 * (0, 1) by t = 1/u, which splits into r/q^2 plus a regular integral of
 * ln(u^r f(1/u)) u^(q-1) handled by the same engine.
 *
 * Throws NonConvergenceError (spectral.hpp) when the panel budget runs out.
 */
double log_polynomial_integral(std::span<const double> coeffs, double q,
                               const QuadratureSpec& spec = {});

/// C_p = p sin(pi p) / pi for 0 < p < 1.
double cp_constant(double p);

/// 1 / integral of ln(1+t) t^(-p-1), by quadrature.
double cp_constant_by_quadrature(double p, const QuadratureSpec& spec = {});

struct IntegralSides {
  double lhs;
  double rhs;
};

/// (alpha^p, C_p * integral of ln(1 + alpha t) t^(-p-1)) for alpha > 0.
IntegralSides base_integral_check(double alpha, double p,
                                  const QuadratureSpec& spec = {});

/**
 * E_p from the elementary symmetric values S_k(A^2):
 * C_{p/2} times the integral of ln(sum_k S_k t^k) t^(-p/2-1), 0 < p < 2.
 */
double energy_by_integral(std::span<const mpz_class> sk, double p,
                          const QuadratureSpec& spec = {});

/// f(t) = 1 + a t + b t^2 + c t^3 with a, b, c > 0.
struct CubicCoefficients {
  double a;
  double b;
  double c;

  void validate() const;
};

/// sqrt(a + 2 sqrt(b + 2 sqrt(a c))).
double cubic_bound_rhs(const CubicCoefficients& cc);

/// C_{1/2} times the integral of ln f(t) t^(-3/2); equals sum sqrt(alpha_i)
/// where f(t) = prod (1 + alpha_i t).
double cubic_integral_lhs(const CubicCoefficients& cc,
                          const QuadratureSpec& spec = {});

}  // namespace seidelab

#endif  // SEIDELAB_ANALYTIC_HPP
