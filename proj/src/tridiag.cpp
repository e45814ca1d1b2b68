#include "anharm/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace anharm {

int tridiag_count_below(std::span<const double> diag, std::span<const double> off, double x) {
  const std::size_t n = diag.size();
  int count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    double e2 = i == 0 ? 0.0 : off[i - 1] * off[i - 1];
    d = diag[i] - x - (i == 0 ? 0.0 : e2 / d);
    if (d == 0.0) d = 1e-300;
    if (d < 0.0) ++count;
  }
  return count;
}

std::vector<double> tridiag_eigenvalues(std::span<const double> diag,
                                        std::span<const double> off, double tol_rel) {
  const std::size_t n = diag.size();
  if (n == 0) return {};
  if (off.size() + 1 != n) throw std::invalid_argument("tridiag: off size must be n-1");

  // Gershgorin bounds
  double lo = diag[0], hi = diag[0];
  for (std::size_t i = 0; i < n; ++i) {
    double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(off[i]) : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  double scale = std::max({std::abs(lo), std::abs(hi), 1.0});
  lo -= 1e-12 * scale;
  hi += 1e-12 * scale;

  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    double a = lo, b = hi;
    // locate eigenvalue k: smallest x with count_below(x) >= k+1
    for (int it = 0; it < 120 && (b - a) > tol_rel * scale; ++it) {
      double m = 0.5 * (a + b);
      if (tridiag_count_below(diag, off, m) >= static_cast<int>(k) + 1)
        b = m;
      else
        a = m;
    }
    out[k] = 0.5 * (a + b);
  }
  return out;
}

std::vector<double> dense_solve(std::vector<double> a, std::vector<double> b, int n) {
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    if (a[piv * n + col] == 0.0) a[piv * n + col] = 1e-300;
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(a[piv * n + c], a[col * n + c]);
      std::swap(b[piv], b[col]);
    }
    for (int r = col + 1; r < n; ++r) {
      double f = a[r * n + col] / a[col * n + col];
      for (int c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      b[r] -= f * b[col];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r * n + c] * b[c];
    b[r] = s / a[r * n + r];
  }
  return b;
}

}  // namespace anharm
