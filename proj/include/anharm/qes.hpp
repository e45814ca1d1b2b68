#pragma once

#include <string>
#include <utility>
#include <vector>

#include "anharm/polynomial.hpp"

namespace anharm {

struct QesSpec {
  int m = 0;
  int p = 0;  // 0 or 1
  double b = 0.0;
};

/// One closed-form eigenpair of the sextic family: y = z^p Q(z^2) e^T with
/// T = -z^4/4 - b z^2/2, Q monic of degree m. Solutions are sorted by
/// lambda; the k-th has exactly k positive and m-k negative roots of Q in
/// the variable u = z^2, and realizes the eigenfunction of index 2k+p.
struct QesSolution {
  int k = 0;
  double lambda = 0.0;
  std::vector<double> q_coeffs;  // c_0..c_m, c_m = 1
  std::vector<double> u_roots;   // sorted, all real and simple
  double residual = 0.0;
};

/// Tridiagonal action of the Schrodinger operator on coefficients of Q:
///   sub[j]  = M[j+1][j] = 4 (j - m)
///   diag[j] = M[j][j]   = b (4j + 2p + 1)
///   sup[j]  = M[j][j+1] = -2 (j+1) (2j + 2p + 1)
/// M c = lambda c reproduces -y'' + (P_{m,p,b} - lambda) y = 0 identically.
struct QesMatrix {
  int n = 0;  // m + 1
  std::vector<double> diag, sub, sup;
};

QesMatrix qes_matrix(const QesSpec& spec);

/// All m+1 solutions. Eigenvalues come from Sturm-count bisection on the
/// symmetrized tridiagonal form (real and simple by similarity); the closed
/// form is verified by the residual of exact differentiation on a z-grid.
std::vector<QesSolution> qes_solve(const QesSpec& spec);

/// u-roots lifted to eigenfunction zeros: positive roots give symmetric
/// real pairs, negative roots conjugate imaginary pairs; p = 1 adds the
/// origin. Throws ZeroRoot when a root sits at the origin to tolerance.
std::pair<std::vector<double>, std::vector<double>> lift_zeros(const QesSolution& sol, int p);

/// Tree parameters (total zeros, real zeros) = (2m+p, 2k+p) with the
/// constraints 0 <= n <= m and m - n even enforced.
std::pair<int, int> classify(const QesSolution& sol, int p);

struct CrossCheckReport {
  double lambda_qes = 0.0;
  double lambda_shoot = 0.0;
  bool lambda_ok = false;
  bool zeros_ok = false;
  bool confinement_ok = false;
  double max_zero_diff = 0.0;
  bool pass = false;
  std::string detail;
};

/// Compares the closed form against the shooting eigenvalue of index 2k+p
/// and the zero census of the propagated eigenfunction.
CrossCheckReport cross_check(const QesSpec& spec, int k, double tol);

}  // namespace anharm
