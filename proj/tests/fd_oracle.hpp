#pragma once

// Independent finite-difference oracle for ground-state eigenvalues:
// Dirichlet discretization of -y'' + P y on a uniform grid, smallest
// eigenvalue by tridiagonal Sturm bisection, Richardson-extrapolated in h.

#include <vector>

#include "anharm/polynomial.hpp"
#include "anharm/tridiag.hpp"

namespace fd_oracle {

inline double lowest_eigenvalue_once(const anharm::EvenPolynomial& P, double half_width,
                                     int points) {
  const int n = points;
  const double h = 2.0 * half_width / (n + 1);
  std::vector<double> diag(n), off(n - 1, -1.0 / (h * h));
  for (int i = 0; i < n; ++i) {
    double x = -half_width + h * (i + 1);
    diag[i] = 2.0 / (h * h) + P(x);
  }
  // only the lowest eigenvalue is needed
  double lo = diag[0], hi = diag[0];
  for (int i = 0; i < n; ++i) {
    double r = (i > 0 ? -off[i - 1] : 0.0) + (i + 1 < n ? -off[i] : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  for (int it = 0; it < 100; ++it) {
    double m = 0.5 * (lo + hi);
    if (anharm::tridiag_count_below(diag, off, m) >= 1)
      hi = m;
    else
      lo = m;
  }
  return 0.5 * (lo + hi);
}

/// Grid [-half_width, half_width] with >= `points` interior points,
/// Richardson-extrapolated against the doubled grid (O(h^2) scheme).
inline double lowest_eigenvalue(const anharm::EvenPolynomial& P, double half_width = 8.0,
                                int points = 4000) {
  double coarse = lowest_eigenvalue_once(P, half_width, points);
  double fine = lowest_eigenvalue_once(P, half_width, 2 * points);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace fd_oracle
