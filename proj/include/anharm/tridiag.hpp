#pragma once

#include <span>
#include <vector>

namespace anharm {

/// Number of eigenvalues of the symmetric tridiagonal matrix (diag, off)
/// strictly below x, by counting negative pivots of the shifted LDL^T sweep.
int tridiag_count_below(std::span<const double> diag, std::span<const double> off, double x);

/// All eigenvalues in ascending order, each located by bisection on the
/// Sturm pivot count. Indices are certified by the count itself.
std::vector<double> tridiag_eigenvalues(std::span<const double> diag,
                                        std::span<const double> off, double tol_rel = 1e-14);

/// Dense Gaussian elimination with partial pivoting (small systems only).
std::vector<double> dense_solve(std::vector<double> a, std::vector<double> b, int n);

}  // namespace anharm
