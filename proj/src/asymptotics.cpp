#include "anharm/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "anharm/errors.hpp"
#include "anharm/qes.hpp"
#include "anharm/spectrum.hpp"

namespace anharm {

std::pair<OdeState, OdeState> normalized_pair(Parity parity) {
  if (parity == Parity::Even)
    return {OdeState{0.0, 1.0, 0.0}, OdeState{0.0, 0.0, 1.0}};
  return {OdeState{0.0, 0.0, 1.0}, OdeState{0.0, 1.0, 0.0}};
}

double asymptotic_radius(const EvenPolynomial& P, double lambda) {
  return shooting_radius(P, lambda, defaults::kActionAsym);
}

Complex asymptotic_value(const EvenPolynomial& P, double lambda, Parity parity, int j,
                         double R, double tol) {
  if (!(R > 0.0)) throw std::invalid_argument("asymptotic_value: R must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("asymptotic_value: tol must be positive");
  const int d = P.degree();
  const double theta = 2.0 * std::numbers::pi * j / (d + 2);
  const Complex dir = std::polar(1.0, theta);

  auto [y0, y10] = normalized_pair(parity);
  TaylorPropagator prop(P, lambda);
  TaylorPropagator::PairState s{0.0, y0.y, y0.dy, y10.y, y10.dy};
  s = prop.propagate_pair(s, R * dir, tol * 1e-2);
  Complex f1 = s.y / s.y1;
  s = prop.propagate_pair(s, 1.2 * R * dir, tol * 1e-2);
  Complex f2 = s.y / s.y1;

  if (std::abs(f2) < tol && (std::abs(f2) <= std::abs(f1) || std::abs(f1) < tol))
    return Complex(0.0, 0.0);
  if (std::abs(f1 - f2) <= tol * (1.0 + std::abs(f2))) return f2;
  throw NotStabilized("asymptotic_value: sector value not stabilized; increase R");
}

AsymptoticTable asymptotic_table(const EvenPolynomial& P, double lambda, Parity parity,
                                 double tol) {
  AsymptoticTable t;
  t.d = P.degree();
  t.parity_of_y = parity;
  t.radius = asymptotic_radius(P, lambda);
  for (int j = 0; j < t.d + 2; ++j) {
    double R = t.radius;
    for (int attempt = 0;; ++attempt) {
      try {
        t.values.push_back(asymptotic_value(P, lambda, parity, j, R, tol));
        break;
      } catch (const NotStabilized&) {
        if (attempt >= 4) throw;
        R *= 1.3;
      }
    }
  }
  return t;
}

double g_angle(int k, int m, int p, double b, double tol) {
  if (k < 0 || k > m) throw std::invalid_argument("g_angle: need 0 <= k <= m");
  auto sols = qes_solve({m, p, b});
  const double lambda = sols[k].lambda;
  EvenPolynomial P = qes_potential(m, p, b);
  const Parity parity = p == 0 ? Parity::Even : Parity::Odd;
  double R = asymptotic_radius(P, lambda);
  for (int attempt = 0;; ++attempt) {
    try {
      Complex a = asymptotic_value(P, lambda, parity, 1, R, tol);
      return std::arg(a);
    } catch (const NotStabilized&) {
      if (attempt >= 4) throw;
      R *= 1.3;
    }
  }
}

GScan surjectivity_scan(int k, int m, int p, const std::vector<double>& b_grid, double tol) {
  if (!std::is_sorted(b_grid.begin(), b_grid.end()))
    throw std::invalid_argument("surjectivity_scan: grid must be sorted");
  GScan scan;
  for (double b : b_grid) {
    scan.b_values.push_back(b);
    scan.g_values.push_back(g_angle(k, m, p, b, tol));
  }
  if (!scan.g_values.empty()) {
    auto [lo, hi] = std::minmax_element(scan.g_values.begin(), scan.g_values.end());
    scan.covered_lo = *lo;
    scan.covered_hi = *hi;
  }
  return scan;
}

}  // namespace anharm
