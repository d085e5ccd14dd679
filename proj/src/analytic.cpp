#include "seidelab/analytic.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include "seidelab/spectral.hpp"

namespace seidelab {

namespace {

constexpr int kTaylorTerms = 16;
constexpr double kLn2 = std::numbers::ln2;

// 7-point Gauss / 15-point Kronrod pair on [-1, 1]; odd Kronrod indices are
// the Gauss nodes.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

using Integrand = std::function<double(double)>;

struct PanelEstimate {
  double kronrod;
  double gauss;
  double magnitude;  // Kronrod rule applied to |w|
};

PanelEstimate gauss_kronrod(const Integrand& w, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = w(center);
  PanelEstimate e{kKronrodWeights[7] * fc, kGaussWeights[3] * fc,
                  kKronrodWeights[7] * std::abs(fc)};
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double f1 = w(center - dx);
    const double f2 = w(center + dx);
    e.kronrod += kKronrodWeights[i] * (f1 + f2);
    e.magnitude += kKronrodWeights[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) e.gauss += kGaussWeights[i / 2] * (f1 + f2);
  }
  e.kronrod *= half;
  e.gauss *= half;
  e.magnitude *= half;
  return e;
}

double adaptive_panel(const Integrand& w, double lo, double hi, double rel_tol,
                      int depth, int max_depth) {
  const PanelEstimate e = gauss_kronrod(w, lo, hi);
  if (std::abs(e.kronrod - e.gauss) <= rel_tol * e.magnitude ||
      e.magnitude == 0.0)
    return e.kronrod;
  if (depth >= max_depth)
    throw NonConvergenceError("quadrature panel failed to converge on [" +
                                  std::to_string(lo) + ", " +
                                  std::to_string(hi) + "]",
                              std::abs(e.kronrod - e.gauss));
  const double mid = 0.5 * (lo + hi);
  return adaptive_panel(w, lo, mid, rel_tol, depth + 1, max_depth) +
         adaptive_panel(w, mid, hi, rel_tol, depth + 1, max_depth);
}

// Taylor coefficients of ln(1 + b_1 x + b_2 x^2 + ...), indices 0..terms-1,
// from f g' = f'.
std::vector<double> log_series(std::span<const double> b, int terms) {
  auto coeff = [&](int j) { return j < static_cast<int>(b.size()) ? b[j] : 0.0; };
  std::vector<double> g(terms, 0.0);
  for (int m = 1; m < terms; ++m) {
    double acc = m * coeff(m);
    for (int j = 1; j < m; ++j) acc -= j * g[j] * coeff(m - j);
    g[m] = acc / m;
  }
  return g;
}

/**
 * Integral over (0, 1] of phi(u) u^(s-1), s > 0, where phi is analytic at 0
 * with Taylor coefficients `taylor`. Dyadic panels run toward 0 until two
 * consecutive panels agree with the series; the remaining [0, lo] is summed
 * from the series in closed form.
 */
double dyadic_integral(const std::function<double(double)>& phi, double s,
                       const std::vector<double>& taylor,
                       const QuadratureSpec& spec) {
  const Integrand w = [&](double u) { return phi(u) * std::pow(u, s - 1.0); };
  // u^e over [lo, hi] with hi = 2 lo, without cancellation for small e.
  auto panel_moment = [](double hi, double e) {
    return std::pow(hi, e) * -std::expm1(-e * kLn2) / e;
  };
  const double tol = spec.relative_tolerance;
  double total = 0.0;
  double hi = 1.0;
  int agreed = 0;
  for (int k = 0; k < spec.max_panels; ++k) {
    const double lo = 0.5 * hi;
    const double q = adaptive_panel(w, lo, hi, tol, 0, spec.max_depth);
    double series = 0.0;
    for (std::size_t j = 0; j < taylor.size(); ++j)
      series += taylor[j] * panel_moment(hi, static_cast<double>(j) + s);
    total += q;
    const double scale = std::max(std::abs(total), std::abs(q));
    agreed = std::abs(q - series) <= tol * scale ? agreed + 1 : 0;
    if (agreed >= 2) {
      double rest = 0.0;
      for (std::size_t j = 0; j < taylor.size(); ++j) {
        const double e = static_cast<double>(j) + s;
        rest += taylor[j] * std::pow(lo, e) / e;
      }
      return total + rest;
    }
    hi = lo;
  }
  throw NonConvergenceError("dyadic quadrature exhausted its panel budget",
                            std::abs(total));
}

void check_open_unit(double p, const char* what) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error(std::string(what) + " requires 0 < p < 1, got " +
                            std::to_string(p));
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(relative_tolerance > 0.0 && relative_tolerance <= 1e-4))
    throw std::domain_error("quadrature tolerance must lie in (0, 1e-4]");
  if (max_panels < 2 || max_depth < 1)
    throw std::domain_error("quadrature needs max_panels >= 2 and max_depth >= 1");
}

double log_polynomial_integral(std::span<const double> coeffs, double q,
                               const QuadratureSpec& spec) {
  spec.validate();
  if (!(q > 0.0 && q < 1.0))
    throw std::domain_error("log-polynomial integral requires 0 < q < 1");
  if (coeffs.empty() || coeffs[0] != 1.0)
    throw std::invalid_argument("polynomial must have constant term 1");
  int degree = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] < 0.0 || !std::isfinite(coeffs[k]))
      throw std::invalid_argument("polynomial coefficients must be finite and >= 0");
    if (coeffs[k] > 0.0) degree = static_cast<int>(k);
  }
  if (degree == 0) return 0.0;
  const std::span<const double> a = coeffs.first(degree + 1);

  // (0, 1]: phi(t) = ln f(t) / t with f - 1 summed from nonnegative terms.
  auto f_minus_one = [a, degree](double t) {
    double acc = 0.0;
    for (int k = degree; k >= 1; --k) acc = (acc + a[k]) * t;
    return acc;
  };
  const std::vector<double> g = log_series(a, kTaylorTerms + 1);
  const std::vector<double> near_zero(g.begin() + 1, g.end());
  const double inner = dyadic_integral(
      [&](double t) { return std::log1p(f_minus_one(t)) / t; }, 1.0 - q,
      near_zero, spec);

  // (1, inf): ln(u^r f(1/u)) = ln a_r + ln(1 + sum_j (a_{r-j}/a_r) u^j).
  const double lead = a[degree];
  std::vector<double> reversed(degree + 1);
  for (int j = 0; j <= degree; ++j) reversed[j] = a[degree - j] / lead;
  const double log_lead = std::log(lead);
  auto tail_log = [&reversed, degree, log_lead](double u) {
    double acc = 0.0;
    for (int j = degree; j >= 1; --j) acc = (acc + reversed[j]) * u;
    return log_lead + std::log1p(acc);
  };
  std::vector<double> h = log_series(reversed, kTaylorTerms);
  h[0] = log_lead;
  const double outer = degree / (q * q) + dyadic_integral(tail_log, q, h, spec);
  return inner + outer;
}

double cp_constant(double p) {
  check_open_unit(p, "C_p");
  return p * std::sin(std::numbers::pi * p) / std::numbers::pi;
}

double cp_constant_by_quadrature(double p, const QuadratureSpec& spec) {
  check_open_unit(p, "C_p");
  const std::array<double, 2> f = {1.0, 1.0};
  return 1.0 / log_polynomial_integral(f, p, spec);
}

IntegralSides base_integral_check(double alpha, double p,
                                  const QuadratureSpec& spec) {
  check_open_unit(p, "base integral");
  if (!(alpha > 0.0)) throw std::domain_error("base integral requires alpha > 0");
  const std::array<double, 2> f = {1.0, alpha};
  return {std::pow(alpha, p), cp_constant(p) * log_polynomial_integral(f, p, spec)};
}

double energy_by_integral(std::span<const mpz_class> sk, double p,
                          const QuadratureSpec& spec) {
  if (!(p > 0.0 && p < 2.0))
    throw std::domain_error("energy_by_integral requires 0 < p < 2");
  if (sk.empty() || sk[0] != 1)
    throw std::invalid_argument("S_0 must equal 1");
  std::vector<double> coeffs;
  coeffs.reserve(sk.size());
  for (const mpz_class& s : sk) {
    if (s < 0) throw std::invalid_argument("S_k(A^2) must be nonnegative");
    coeffs.push_back(s.get_d());
  }
  const double q = 0.5 * p;
  return cp_constant(q) * log_polynomial_integral(coeffs, q, spec);
}

void CubicCoefficients::validate() const {
  if (!(a > 0.0 && b > 0.0 && c > 0.0))
    throw std::domain_error("cubic coefficients must be positive");
}

double cubic_bound_rhs(const CubicCoefficients& cc) {
  cc.validate();
  return std::sqrt(cc.a + 2.0 * std::sqrt(cc.b + 2.0 * std::sqrt(cc.a * cc.c)));
}

double cubic_integral_lhs(const CubicCoefficients& cc,
                          const QuadratureSpec& spec) {
  cc.validate();
  const std::array<double, 4> f = {1.0, cc.a, cc.b, cc.c};
  return cp_constant(0.5) * log_polynomial_integral(f, 0.5, spec);
}

}  // namespace seidelab
