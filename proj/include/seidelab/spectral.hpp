#ifndef SEIDELAB_SPECTRAL_HPP
#define SEIDELAB_SPECTRAL_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "seidelab/graph.hpp"

namespace seidelab {

/// Dense row-major integer matrix; used for A^2, Gram matrices and test
/// inputs to the Cauchy-Binet identity.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols);
  IntMatrix(int rows, int cols, std::vector<std::int64_t> entries);
  static IntMatrix identity(int n);
  static IntMatrix from(const SeidelMatrix& s);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& operator()(int i, int j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(int i, int j) const { return data_[i * cols_ + j]; }

  IntMatrix transposed() const;
  IntMatrix submatrix(std::span<const int> row_set,
                      std::span<const int> col_set) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<std::int64_t> data_;
};

/// Eigenvalues of a Seidel matrix, sorted descending, with the residual
/// max |(Q diag(values) Q^T - A)_ij| of the computed decomposition.
struct Spectrum {
  std::vector<double> values;
  double residual = 0.0;
  /// Eigenvalues at or below this magnitude are numerically zero; they are
  /// left in `values` but contribute nothing to p_energy.
  double zero_threshold = 0.0;
  double off_norm = 0.0;
  int sweeps = 0;
};

struct JacobiOptions {
  /// Converged once the off-diagonal Frobenius norm is <= tolerance * n.
  double tolerance = 1e-12;
  int max_sweeps = 60;
};

class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  /// Off-diagonal norm (or error estimate) reached before giving up.
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

/// Full spectrum by cyclic Jacobi rotations with a threshold strategy.
Spectrum eigenvalues(const SeidelMatrix& a, const JacobiOptions& opts = {});

/// sum |lambda_i|^p over the numerically nonzero eigenvalues; p = 1 gives the
/// Seidel energy.
double p_energy(const Spectrum& s, double p);

/// det(xI - A) = sum_k coeffs[k] x^k, coeffs[n] = 1.
struct ExactCharPoly {
  std::vector<mpz_class> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/**
 * Exact characteristic polynomial by the Faddeev-LeVerrier recurrence. Runs
 * in checked 64-bit arithmetic and restarts in GMP integers on overflow;
 * every division in the recurrence is exact.
 */
ExactCharPoly char_poly_exact(const IntMatrix& a);
ExactCharPoly char_poly_exact(const SeidelMatrix& a);

/// S_k(A^2) for k = 0..n, unwound from the characteristic polynomial of A^2.
std::vector<mpz_class> elementary_symmetric_A2(const SeidelMatrix& a);

/// S_k of the eigenvalues of a square integer matrix: (-1)^k c_{n-k}.
std::vector<mpz_class> elementary_symmetric(const IntMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination.
mpz_class exact_determinant(const IntMatrix& a);

/// det(A_{I,J}) for |I| = |J| >= 1.
mpz_class submatrix_det(const SeidelMatrix& a, std::span<const int> row_set,
                        std::span<const int> col_set);

struct CauchyBinetSides {
  mpz_class lhs;  ///< S_k(R R^T)
  mpz_class rhs;  ///< sum over k-sets I, J of det(R_{I,J})^2
};

/// Both sides of the Cauchy-Binet identity for S_k(R R^T).
CauchyBinetSides cauchy_binet_check(const IntMatrix& r, int k);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

/// C(a, b), zero unless 0 <= b <= a.
mpz_class binomial(long a, long b);

}  // namespace seidelab

#endif  // SEIDELAB_SPECTRAL_HPP
