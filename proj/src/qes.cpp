#include "anharm/qes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "anharm/errors.hpp"
#include "anharm/polyops.hpp"
#include "anharm/spectrum.hpp"
#include "anharm/sturm.hpp"
#include "anharm/tridiag.hpp"
#include "anharm/zeros.hpp"

namespace anharm {

QesMatrix qes_matrix(const QesSpec& spec) {
  if (spec.p != 0 && spec.p != 1) throw std::invalid_argument("qes_matrix: p must be 0 or 1");
  if (spec.m < 0) throw std::invalid_argument("qes_matrix: m must be non-negative");
  const int n = spec.m + 1;
  QesMatrix M;
  M.n = n;
  M.diag.resize(n);
  M.sub.resize(n - 1);
  M.sup.resize(n - 1);
  for (int j = 0; j < n; ++j) M.diag[j] = spec.b * (4.0 * j + 2.0 * spec.p + 1.0);
  for (int j = 0; j + 1 < n; ++j) {
    M.sub[j] = 4.0 * (j - spec.m);                                  // M[j+1][j]
    M.sup[j] = -2.0 * (j + 1.0) * (2.0 * j + 2.0 * spec.p + 1.0);   // M[j][j+1]
  }
  return M;
}

namespace {

// Eigenvector for a computed eigenvalue, normalized c_m = 1, by the backward
// three-term recurrence; falls back to inverse iteration when the row-0
// residual is poor.
std::vector<double> qes_eigenvector(const QesMatrix& M, double lambda) {
  const int n = M.n;
  std::vector<double> c(n);
  c[n - 1] = 1.0;
  if (n > 1) {
    c[n - 2] = (lambda - M.diag[n - 1]) / M.sub[n - 2];
    for (int i = n - 2; i >= 1; --i)
      c[i - 1] = ((lambda - M.diag[i]) * c[i] - M.sup[i] * c[i + 1]) / M.sub[i - 1];
  }
  double scale = 0.0;
  for (double v : c) scale = std::max(scale, std::abs(v));
  double r0 = (M.diag[0] - lambda) * c[0] + (n > 1 ? M.sup[0] * c[1] : 0.0);
  if (std::abs(r0) > 1e-8 * scale * std::max(1.0, std::abs(lambda))) {
    // inverse iteration on the dense shifted matrix
    std::vector<double> a(n * n, 0.0);
    double shift = lambda * (1.0 + 1e-13) + 1e-300;
    for (int i = 0; i < n; ++i) {
      a[i * n + i] = M.diag[i] - shift;
      if (i + 1 < n) {
        a[(i + 1) * n + i] = M.sub[i];
        a[i * n + (i + 1)] = M.sup[i];
      }
    }
    std::vector<double> v(n, 1.0);
    for (int it = 0; it < 3; ++it) {
      v = dense_solve(a, v, n);
      double m = 0.0;
      for (double x : v) m = std::max(m, std::abs(x));
      for (double& x : v) x /= m;
    }
    if (v[n - 1] == 0.0) throw DegenerateEigenvalue("qes_solve: eigenvector degenerate");
    for (double& x : v) x /= v[n - 1];
    c = v;
  }
  return c;
}

double closed_form_residual(const std::vector<double>& q, int m, int p, double b,
                            double lambda) {
  std::vector<double> R = polyops::qes_residual_poly(q, m, p, b, lambda);
  double zmax = 1.0;
  for (std::size_t j = 0; j < q.size(); ++j) zmax = std::max(zmax, std::abs(q[j]));
  zmax = std::min(3.5, 1.5 + 0.25 * zmax);
  double worst = 0.0;
  const int grid = 129;
  for (int i = 0; i < grid; ++i) {
    double z = -zmax + 2.0 * zmax * i / (grid - 1);
    double expo = std::exp(-z * z * z * z / 4.0 - b * z * z / 2.0);
    double y = std::pow(z, p) * poly_eval(std::span<const double>(q), z * z) * expo;
    double r = poly_eval(std::span<const double>(R), z) * expo;
    worst = std::max(worst, std::abs(r) / std::max(1.0, std::abs(y)));
  }
  return worst;
}

}  // namespace

std::vector<QesSolution> qes_solve(const QesSpec& spec) {
  QesMatrix M = qes_matrix(spec);
  const int n = M.n;

  // Similar symmetric tridiagonal: off_j = sqrt(sub_j * sup_j) > 0.
  std::vector<double> off(n - 1);
  for (int j = 0; j + 1 < n; ++j) {
    double prod = M.sub[j] * M.sup[j];
    if (!(prod > 0.0)) throw std::logic_error("qes_solve: off-diagonal product not positive");
    off[j] = std::sqrt(prod);
  }
  std::vector<double> lambdas = tridiag_eigenvalues(M.diag, off);

  double lam_scale = 1.0;
  for (double l : lambdas) lam_scale = std::max(lam_scale, std::abs(l));
  for (int j = 0; j + 1 < n; ++j)
    if (lambdas[j + 1] - lambdas[j] < 1e-12 * lam_scale)
      throw DegenerateEigenvalue("qes_solve: eigenvalues coincide within 1e-12");

  std::vector<QesSolution> out;
  for (int k = 0; k < n; ++k) {
    QesSolution sol;
    sol.k = k;
    sol.lambda = lambdas[k];
    sol.q_coeffs = qes_eigenvector(M, sol.lambda);
    sol.residual = closed_form_residual(sol.q_coeffs, spec.m, spec.p, spec.b, sol.lambda);
    if (sol.residual > 1e-9)
      throw std::runtime_error("qes_solve: closed-form residual exceeds 1e-9");

    if (spec.m > 0) {
      SturmChain chain(sol.q_coeffs);
      sol.u_roots = chain.roots(1e-13);
      if (static_cast<int>(sol.u_roots.size()) != spec.m)
        throw std::runtime_error("qes_solve: Sturm isolation lost a root");
      // Certify the sign split two ways: isolated root signs and Descartes
      // counts (exact for a real-rooted polynomial).
      int pos = 0;
      for (double u : sol.u_roots) pos += u > 0.0 ? 1 : 0;
      if (descartes_positive(sol.q_coeffs) != pos ||
          descartes_negative(sol.q_coeffs) != spec.m - pos)
        throw std::runtime_error("qes_solve: Descartes count disagrees with isolated roots");
      if (pos != k)
        throw ConstraintViolation("qes_solve: k-th solution lacks k positive roots");
    }
    out.push_back(std::move(sol));
  }
  return out;
}

std::pair<std::vector<double>, std::vector<double>> lift_zeros(const QesSolution& sol, int p) {
  std::vector<double> real, imag;
  for (double u : sol.u_roots) {
    if (std::abs(u) < 1e-12)
      throw ZeroRoot("lift_zeros: root of Q at the origin violates simplicity");
    double r = std::sqrt(std::abs(u));
    if (u > 0.0) {
      real.push_back(-r);
      real.push_back(r);
    } else {
      imag.push_back(-r);
      imag.push_back(r);
    }
  }
  if (p == 1) real.push_back(0.0);
  std::sort(real.begin(), real.end());
  std::sort(imag.begin(), imag.end());
  return {real, imag};
}

std::pair<int, int> classify(const QesSolution& sol, int p) {
  const int m = static_cast<int>(sol.q_coeffs.size()) - 1;
  int k = 0;
  for (double u : sol.u_roots) k += u > 0.0 ? 1 : 0;
  int m_tree = 2 * m + p;
  int n_tree = 2 * k + p;
  if (!(0 <= n_tree && n_tree <= m_tree && (m_tree - n_tree) % 2 == 0))
    throw ConstraintViolation("classify: (m, n) constraints violated");
  return {m_tree, n_tree};
}

CrossCheckReport cross_check(const QesSpec& spec, int k, double tol) {
  if (k < 0 || k > spec.m) throw std::invalid_argument("cross_check: k out of range");
  CrossCheckReport rep;
  auto sols = qes_solve(spec);
  const QesSolution& sol = sols[k];
  rep.lambda_qes = sol.lambda;

  EvenPolynomial P = qes_potential(spec.m, spec.p, spec.b);
  Eigenpair pair = eigenvalue_k(P, 2 * k + spec.p, std::min(tol, 1e-8));
  rep.lambda_shoot = pair.lambda;
  rep.lambda_ok = std::abs(rep.lambda_qes - rep.lambda_shoot) <= tol;

  auto [lift_real, lift_imag] = lift_zeros(sol, spec.p);
  double need_x = 0.5, need_y = 0.5;
  if (!lift_real.empty()) need_x = std::max(need_x, lift_real.back());
  if (!lift_imag.empty()) need_y = std::max(need_y, lift_imag.back());
  Box box = safe_census_box(P, sol.lambda, need_x, need_y);
  ZeroCensus c = census(P, sol.lambda, parity_of_index(2 * k + spec.p), box,
                        defaults::kZeroTol, 2 * k + spec.p);

  auto set_match = [&](const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return std::pair(false, 0.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return std::pair(worst <= 1e-5, worst);
  };
  auto [rok, rdiff] = set_match(lift_real, c.real_zeros);
  auto [iok, idiff] = set_match(lift_imag, c.imaginary_zeros);
  rep.zeros_ok = rok && iok;
  rep.max_zero_diff = std::max(rdiff, idiff);
  rep.confinement_ok = verify_axis_confinement(c);
  rep.pass = rep.lambda_ok && rep.zeros_ok && rep.confinement_ok;
  if (!rep.pass) {
    rep.detail = "lambda_qes=" + std::to_string(rep.lambda_qes) +
                 " lambda_shoot=" + std::to_string(rep.lambda_shoot) +
                 (rep.zeros_ok ? "" : " zero-census mismatch") +
                 (rep.confinement_ok ? "" : " off-axis zeros present");
  }
  return rep;
}

}  // namespace anharm
