#include "seidelab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace seidelab {

IntMatrix::IntMatrix(int rows, int cols)
    : IntMatrix(rows, cols,
                std::vector<std::int64_t>(
                    static_cast<std::size_t>(rows) * cols, 0)) {}

IntMatrix::IntMatrix(int rows, int cols, std::vector<std::int64_t> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows < 0 || cols < 0 ||
      data_.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument("IntMatrix entry count mismatch");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from(const SeidelMatrix& s) {
  const int n = s.order();
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = s(i, j);
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::submatrix(std::span<const int> row_set,
                               std::span<const int> col_set) const {
  IntMatrix m(static_cast<int>(row_set.size()),
              static_cast<int>(col_set.size()));
  for (std::size_t i = 0; i < row_set.size(); ++i)
    for (std::size_t j = 0; j < col_set.size(); ++j)
      m(static_cast<int>(i), static_cast<int>(j)) =
          (*this)(row_set[i], col_set[j]);
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("IntMatrix product shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int l = 0; l < a.cols_; ++l) {
      const std::int64_t x = a(i, l);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += x * b(l, j);
    }
  return c;
}

// ---------------------------------------------------------------------------
// Jacobi eigensolver

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) sum += a[i * n + j] * a[i * n + j];
  return std::sqrt(2.0 * sum);
}

// Applies the rotation zeroing a(p,q) to the upper triangle of a and to the
// columns of v.
void rotate(std::vector<double>& a, std::vector<double>& v, int n, int p,
            int q, double c, double s) {
  const double tau = s / (1.0 + c);
  auto upper = [&](int i, int j) -> double& {
    return i < j ? a[i * n + j] : a[j * n + i];
  };
  for (int r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    double& arp = upper(r, p);
    double& arq = upper(r, q);
    const double g = arp;
    const double h = arq;
    arp = g - s * (h + g * tau);
    arq = h + s * (g - h * tau);
  }
  for (int r = 0; r < n; ++r) {
    const double g = v[r * n + p];
    const double h = v[r * n + q];
    v[r * n + p] = g - s * (h + g * tau);
    v[r * n + q] = h + s * (g - h * tau);
  }
}

}  // namespace

Spectrum eigenvalues(const SeidelMatrix& input, const JacobiOptions& opts) {
  const int n = input.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i * n + j] = input(i, j);
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

  std::vector<double> d(n), sweep_start(n), drift(n, 0.0);
  for (int i = 0; i < n; ++i) d[i] = sweep_start[i] = a[i * n + i];

  const double target = opts.tolerance * n;
  Spectrum out;
  double off = off_diagonal_norm(a, n);
  int sweep = 0;
  while (off > target) {
    if (sweep == opts.max_sweeps)
      throw NonConvergenceError(
          "Jacobi eigensolver did not converge after " +
              std::to_string(opts.max_sweeps) + " sweeps",
          off);
    ++sweep;
    // Early sweeps skip small entries; later ones rotate everything.
    double abs_sum = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) abs_sum += std::abs(a[i * n + j]);
    const double threshold = sweep < 4 ? 0.2 * abs_sum / (n * n) : 0.0;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double& apq = a[p * n + q];
        const double g = 100.0 * std::abs(apq);
        if (sweep > 4 && std::abs(d[p]) + g == std::abs(d[p]) &&
            std::abs(d[q]) + g == std::abs(d[q])) {
          apq = 0.0;
          continue;
        }
        if (std::abs(apq) <= threshold) continue;
        const double h = d[q] - d[p];
        double t;
        if (std::abs(h) + g == std::abs(h)) {
          t = apq / h;
        } else {
          const double theta = 0.5 * h / apq;
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double shift = t * apq;
        drift[p] -= shift;
        drift[q] += shift;
        d[p] -= shift;
        d[q] += shift;
        apq = 0.0;
        rotate(a, v, n, p, q, c, s);
      }
    }
    // Refresh the diagonal from the accumulated shifts to limit roundoff.
    for (int i = 0; i < n; ++i) {
      sweep_start[i] += drift[i];
      d[i] = sweep_start[i];
      drift[i] = 0.0;
    }
    off = off_diagonal_norm(a, n);
  }

  double residual = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double sum = 0.0;
      for (int k = 0; k < n; ++k) sum += v[i * n + k] * d[k] * v[j * n + k];
      residual = std::max(residual, std::abs(sum - input(i, j)));
    }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return d[x] > d[y]; });
  out.values.reserve(n);
  for (int i : order) out.values.push_back(d[i]);
  out.residual = residual;
  // Roundoff floor for a matrix with spectral norm at most n-1. Without it a
  // zero eigenvalue computed as 1e-16 would add 1e-16^p to the p-energy.
  out.zero_threshold =
      std::max(residual, 8.0 * n * std::max(n - 1, 1) *
                             std::numeric_limits<double>::epsilon());
  out.off_norm = off;
  out.sweeps = sweep;
  return out;
}

double p_energy(const Spectrum& s, double p) {
  if (!(p > 0.0)) throw std::domain_error("p-energy requires p > 0");
  double sum = 0.0;
  for (double x : s.values)
    if (std::abs(x) > s.zero_threshold) sum += std::pow(std::abs(x), p);
  return sum;
}

// ---------------------------------------------------------------------------
// Exact characteristic polynomials

namespace {

bool mul_add(std::int64_t& acc, std::int64_t a, std::int64_t b) {
  std::int64_t prod;
  if (__builtin_mul_overflow(a, b, &prod)) return false;
  return !__builtin_add_overflow(acc, prod, &acc);
}

bool mul_add(mpz_class& acc, const mpz_class& a, const mpz_class& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return true;
}

bool add_to(std::int64_t& acc, std::int64_t x) {
  return !__builtin_add_overflow(acc, x, &acc);
}

bool add_to(mpz_class& acc, const mpz_class& x) {
  acc += x;
  return true;
}

std::int64_t divide_exact(std::int64_t x, long k) { return x / k; }

mpz_class divide_exact(const mpz_class& x, long k) {
  mpz_class q;
  mpz_divexact_ui(q.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(k));
  return q;
}

// M_1 = I; for k = 1..n: AM = A M_k, c_{n-k} = -tr(AM)/k,
// M_{k+1} = AM + c_{n-k} I. Returns false on 64-bit overflow.
template <typename Int>
bool faddeev_leverrier(const IntMatrix& a, std::vector<Int>& coeffs) {
  const int n = a.rows();
  std::vector<Int> aa(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) aa[i * n + j] = Int(a(i, j));
  std::vector<Int> m(static_cast<std::size_t>(n) * n, Int(0));
  for (int i = 0; i < n; ++i) m[i * n + i] = Int(1);
  std::vector<Int> am(m.size());

  coeffs.assign(n + 1, Int(0));
  coeffs[n] = Int(1);
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int acc(0);
        for (int l = 0; l < n; ++l) {
          if (aa[i * n + l] == 0) continue;
          if (!mul_add(acc, aa[i * n + l], m[l * n + j])) return false;
        }
        am[i * n + j] = acc;
      }
    Int trace(0);
    for (int i = 0; i < n; ++i)
      if (!add_to(trace, am[i * n + i])) return false;
    if (trace == std::numeric_limits<std::int64_t>::min()) return false;
    const Int c = -divide_exact(trace, k);
    coeffs[n - k] = c;
    if (k == n) break;
    std::swap(m, am);
    for (int i = 0; i < n; ++i)
      if (!add_to(m[i * n + i], c)) return false;
  }
  return true;
}

}  // namespace

ExactCharPoly char_poly_exact(const IntMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("characteristic polynomial needs a square matrix");
  ExactCharPoly out;
  std::vector<std::int64_t> small;
  if (faddeev_leverrier(a, small)) {
    out.coeffs.reserve(small.size());
    for (std::int64_t c : small) out.coeffs.emplace_back(static_cast<long>(c));
    return out;
  }
  faddeev_leverrier(a, out.coeffs);
  return out;
}

ExactCharPoly char_poly_exact(const SeidelMatrix& a) {
  return char_poly_exact(IntMatrix::from(a));
}

std::vector<mpz_class> elementary_symmetric(const IntMatrix& b) {
  const ExactCharPoly cp = char_poly_exact(b);
  const int n = cp.degree();
  std::vector<mpz_class> s(n + 1);
  for (int k = 0; k <= n; ++k)
    s[k] = (k % 2 == 0) ? cp.coeffs[n - k] : mpz_class(-cp.coeffs[n - k]);
  return s;
}

std::vector<mpz_class> elementary_symmetric_A2(const SeidelMatrix& a) {
  const IntMatrix m = IntMatrix::from(a);
  return elementary_symmetric(m * m);
}

mpz_class exact_determinant(const IntMatrix& a) {
  const int n = a.rows();
  if (n != a.cols())
    throw std::invalid_argument("determinant needs a square matrix");
  if (n == 0) return 1;
  std::vector<mpz_class> m(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i * n + j] = static_cast<long>(a(i, j));

  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k * n + k] == 0) {
      int pivot = k + 1;
      while (pivot < n && m[pivot * n + k] == 0) ++pivot;
      if (pivot == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(m[k * n + j], m[pivot * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j];
        mpz_divexact(m[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k * n + k];
  }
  mpz_class det = m[(n - 1) * n + (n - 1)];
  return sign > 0 ? det : mpz_class(-det);
}

mpz_class submatrix_det(const SeidelMatrix& a, std::span<const int> row_set,
                        std::span<const int> col_set) {
  if (row_set.size() != col_set.size() || row_set.empty())
    throw std::invalid_argument("submatrix_det needs |I| = |J| >= 1");
  for (std::span<const int> set : {row_set, col_set})
    for (int v : set)
      if (v < 0 || v >= a.order())
        throw std::out_of_range("submatrix index outside matrix");
  for (std::span<const int> set : {row_set, col_set}) {
    std::vector<int> sorted(set.begin(), set.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("submatrix index repeated");
  }
  return exact_determinant(IntMatrix::from(a).submatrix(row_set, col_set));
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

CauchyBinetSides cauchy_binet_check(const IntMatrix& r, int k) {
  if (k < 1 || k > std::min(r.rows(), r.cols()))
    throw std::invalid_argument("Cauchy-Binet needs 1 <= k <= min(m, q)");
  CauchyBinetSides sides;
  sides.lhs = elementary_symmetric(r * r.transposed())[k];
  const auto row_sets = k_subsets(r.rows(), k);
  const auto col_sets = k_subsets(r.cols(), k);
  sides.rhs = 0;
  for (const auto& rows : row_sets)
    for (const auto& cols : col_sets) {
      const mpz_class d = exact_determinant(r.submatrix(rows, cols));
      sides.rhs += d * d;
    }
  return sides;
}

mpz_class binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return out;
}

}  // namespace seidelab
