#pragma once

// Dense linear algebra for small systems (n <= ~6): Gaussian elimination
// with partial pivoting, Cholesky-based SPD tests, determinants.  All
// matrices are row-major flat arrays.

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace statgeo {

class NumericsError : public std::runtime_error {
 public:
  explicit NumericsError(const std::string& what) : std::runtime_error(what) {}
};

namespace linalg {

// Solves A x = b for k right-hand sides stored column-contiguous in b
// (b has n*k entries, rhs j at b[i*k+j]).  A and b are overwritten; the
// solution ends up in b.
inline void solve_in_place(int n, double* a, double* b, int k = 1) {
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(a[col * n + col]);
    for (int r = col + 1; r < n; ++r) {
      double v = std::abs(a[r * n + col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (!(best > 0.0) || !std::isfinite(best))
      throw NumericsError("singular matrix in linear solve");
    if (piv != col) {
      for (int c = col; c < n; ++c) std::swap(a[piv * n + c], a[col * n + c]);
      for (int c = 0; c < k; ++c) std::swap(b[piv * k + c], b[col * k + c]);
    }
    const double d = a[col * n + col];
    for (int r = col + 1; r < n; ++r) {
      const double m = a[r * n + col] / d;
      if (m == 0.0) continue;
      for (int c = col + 1; c < n; ++c) a[r * n + c] -= m * a[col * n + c];
      for (int c = 0; c < k; ++c) b[r * k + c] -= m * b[col * k + c];
      a[r * n + col] = 0.0;
    }
  }
  for (int row = n - 1; row >= 0; --row) {
    for (int c = 0; c < k; ++c) {
      double s = b[row * k + c];
      for (int j = row + 1; j < n; ++j) s -= a[row * n + j] * b[j * k + c];
      b[row * k + c] = s / a[row * n + row];
    }
  }
}

inline std::vector<double> solve(int n, std::vector<double> a,
                                 std::vector<double> b, int k = 1) {
  solve_in_place(n, a.data(), b.data(), k);
  return b;
}

// Inverse via Gauss-Jordan on [A | I].
inline std::vector<double> inverse(int n, const double* a) {
  std::vector<double> m(a, a + std::size_t(n) * n);
  std::vector<double> inv(std::size_t(n) * n, 0.0);
  for (int i = 0; i < n; ++i) inv[i * n + i] = 1.0;
  solve_in_place(n, m.data(), inv.data(), n);
  return inv;
}

inline double det(int n, const double* a) {
  std::vector<double> m(a, a + std::size_t(n) * n);
  double sign = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(m[col * n + col]);
    for (int r = col + 1; r < n; ++r)
      if (std::abs(m[r * n + col]) > best) {
        best = std::abs(m[r * n + col]);
        piv = r;
      }
    if (best == 0.0) return 0.0;
    if (piv != col) {
      sign = -sign;
      for (int c = col; c < n; ++c) std::swap(m[piv * n + c], m[col * n + c]);
    }
    for (int r = col + 1; r < n; ++r) {
      const double f = m[r * n + col] / m[col * n + col];
      for (int c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
    }
  }
  double d = sign;
  for (int i = 0; i < n; ++i) d *= m[i * n + i];
  return d;
}

// True iff the symmetric matrix is positive definite (Cholesky succeeds).
inline bool is_spd(int n, const double* a) {
  std::vector<double> l(a, a + std::size_t(n) * n);
  for (int j = 0; j < n; ++j) {
    double d = l[j * n + j];
    for (int k = 0; k < j; ++k) d -= l[j * n + k] * l[j * n + k];
    if (!(d > 0.0) || !std::isfinite(d)) return false;
    const double s = std::sqrt(d);
    l[j * n + j] = s;
    for (int i = j + 1; i < n; ++i) {
      double v = l[i * n + j];
      for (int k = 0; k < j; ++k) v -= l[i * n + k] * l[j * n + k];
      l[i * n + j] = v / s;
    }
  }
  return true;
}

inline double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline double norm(std::span<const double> x) { return std::sqrt(dot(x, x)); }

// g-inner product with metric coefficients gij (row-major n x n).
inline double metric_dot(int n, const double* gij, const double* x,
                         const double* y) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += gij[i * n + j] * x[i] * y[j];
  return s;
}

inline double metric_norm(int n, const double* gij, const double* x) {
  return std::sqrt(metric_dot(n, gij, x, x));
}

}  // namespace linalg
}  // namespace statgeo
