#include "anharm/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <semaphore>
#include <stdexcept>
#include <thread>

#include "anharm/errors.hpp"
#include "anharm/sturm.hpp"

namespace anharm {

double min_potential(const EvenPolynomial& P) {
  auto c = P.even_coeffs();
  double best = c[0];  // P(0)
  // Positive critical points: roots u > 0 of g(u) = sum_{j>=1} j c_j u^{j-1},
  // where u = z^2 (P'(z) = 2z g(z^2)).
  std::vector<double> g(c.size() - 1);
  for (std::size_t j = 1; j < c.size(); ++j) g[j - 1] = c[j] * static_cast<double>(j);
  if (g.size() >= 2) {
    SturmChain chain(g);
    for (double u : chain.roots(1e-12))
      if (u > 0.0) best = std::min(best, P(std::sqrt(u)));
  }
  return best;
}

namespace {

// Composite-Simpson action integral of sqrt(max(P - lambda, 0)) over [0, R].
double action_integral(const EvenPolynomial& P, double lambda, double R) {
  const int n = 512;  // even
  double h = R / n;
  auto f = [&](double x) { return std::sqrt(std::max(P(x) - lambda, 0.0)); };
  double s = f(0.0) + f(R);
  for (int i = 1; i < n; ++i) s += f(i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace

double shooting_radius(const EvenPolynomial& P, double lambda_max, double action,
                       double barrier) {
  double R = 0.5;
  for (int it = 0; it < 400 && P(R) - lambda_max < barrier; ++it) R *= 1.25;
  if (P(R) - lambda_max < barrier)
    throw RadiusTooSmall("shooting_radius: cannot clear the barrier");
  // tighten the barrier radius a little, then extend for the action target
  double lo = R / 1.25, hi = R;
  for (int it = 0; it < 30; ++it) {
    double m = 0.5 * (lo + hi);
    (P(m) - lambda_max >= barrier ? hi : lo) = m;
  }
  R = hi;
  for (int it = 0; it < 200 && action_integral(P, lambda_max, R) < action; ++it) R *= 1.08;
  return R;
}

double miss(const EvenPolynomial& P, double lambda, double R, Parity parity, double tol) {
  if (!(P(R) > lambda))
    throw RadiusTooSmall("miss: P(R) <= lambda");
  TaylorPropagator prop(P, lambda);
  OdeState s = prop.propagate(initial_state(parity), Complex(R, 0.0), tol);
  double logderiv = (s.dy / s.y).real();
  return logderiv + std::sqrt(P(R) - lambda);
}

int node_count(const EvenPolynomial& P, double lambda, double R, Parity parity, double tol) {
  if (!(P(R) > lambda))
    throw RadiusTooSmall("node_count: P(R) <= lambda");
  TaylorPropagator prop(P, lambda);

  // Cap substeps well below the local oscillation wavelength so endpoint
  // plus interior samples cannot skip a sign change.
  auto cap = [&](Complex z) {
    double w2 = std::max(1.0, lambda - P(z.real()));
    return 0.3 / std::sqrt(w2);
  };

  int changes = 0;
  int last_sign = 0;
  auto observer = [&](const StepView& v) {
    const int sub = 10;
    for (int i = 1; i <= sub; ++i) {
      double val = v.eval(v.h * i / sub).real();
      int s = val == 0.0 ? 0 : (val > 0 ? 1 : -1);
      if (s == 0) continue;
      if (last_sign != 0 && s != last_sign) ++changes;
      last_sign = s;
    }
  };
  // Seed the sign at 0+ (even: y(0)=1; odd: y'(0)=1 so y>0 just right of 0).
  last_sign = 1;
  prop.propagate_observed(initial_state(parity), Complex(R, 0.0), tol, observer, cap);
  return 2 * changes + (parity == Parity::Odd ? 1 : 0);
}

Eigenpair eigenvalue_k(const EvenPolynomial& P, int k, double tol) {
  if (k < 0) throw std::invalid_argument("eigenvalue_k: k must be >= 0");
  if (!(tol > 0.0)) throw std::invalid_argument("eigenvalue_k: tol must be positive");
  const Parity parity = parity_of_index(k);
  const int target = k + 2;  // node count just above lambda_k

  double lo = min_potential(P) - 1.0;
  double hi = std::max(P(0.0), lo + 1.0);
  double R = shooting_radius(P, hi);
  for (int it = 0;; ++it) {
    if (node_count(P, hi, R, parity) >= target) break;
    if (it > 120)
      throw ConvergenceFailure("eigenvalue_k: search bound growth exhausted", lo, hi);
    hi = lo + 2.0 * (hi - lo);
    R = shooting_radius(P, hi);
  }

  double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
  double width_target = std::max(1e-3 * tol, 1e-14 * scale);
  for (int it = 0; it < 200 && (hi - lo) > width_target; ++it) {
    double mid = 0.5 * (lo + hi);
    if (node_count(P, mid, R, parity) >= target)
      hi = mid;
    else
      lo = mid;
  }
  double lambda = 0.5 * (lo + hi);

  // Secant polish on the miss discriminant, at a contamination-safe radius
  // (the e^40 separation radius drowns the recessive component in roundoff;
  // the sign window of miss is exponentially thin, so polish only when the
  // terminal bracket actually straddles it).
  try {
    double rm = shooting_radius(P, hi, 13.0);
    double fa = miss(P, lo, rm, parity);
    double fb = miss(P, hi, rm, parity);
    if (std::signbit(fa) != std::signbit(fb)) {
      double a = lo, b = hi;
      for (int it = 0; it < 16 && (b - a) > 1e-16 * scale; ++it) {
        double m = b - fb * (b - a) / (fb - fa);
        if (!(m > a && m < b)) m = 0.5 * (a + b);
        double fm = miss(P, m, rm, parity);
        if (std::signbit(fm) == std::signbit(fa)) {
          a = m;
          fa = fm;
        } else {
          b = m;
          fb = fm;
        }
      }
      lambda = 0.5 * (a + b);
    }
  } catch (const RadiusTooSmall&) {
    // keep the bisection midpoint
  }

  // Certify the index: counts must read k just below and k+2 just above.
  double delta = std::max(10.0 * tol, 4.0 * (hi - lo));
  bool ok = false;
  for (int it = 0; it < 3 && !ok; ++it, delta *= 10.0) {
    ok = node_count(P, lambda - delta, R, parity) == k &&
         node_count(P, lambda + delta, R, parity) == target;
  }
  if (!ok)
    throw ConvergenceFailure("eigenvalue_k: index certification failed", lo, hi);

  return Eigenpair{k, lambda, parity, k, R};
}

namespace {

// Worker cap for concurrent eigenvalue searches; ANHARM_WORKERS overrides.
std::counting_semaphore<256>& worker_slots() {
  static std::counting_semaphore<256> sem = [] {
    long n = 0;
    if (const char* env = std::getenv("ANHARM_WORKERS")) n = std::strtol(env, nullptr, 10);
    if (n < 1) n = std::max(1u, std::thread::hardware_concurrency());
    return std::counting_semaphore<256>(std::min(n, 256L));
  }();
  return sem;
}

}  // namespace

std::vector<Eigenpair> eigenvalues(const EvenPolynomial& P, int K, double tol) {
  if (K < 0) throw std::invalid_argument("eigenvalues: K must be >= 0");
  std::vector<std::future<Eigenpair>> futs;
  futs.reserve(K + 1);
  for (int k = 0; k <= K; ++k)
    futs.push_back(std::async(std::launch::async, [&P, k, tol] {
      worker_slots().acquire();
      struct Release {
        ~Release() { worker_slots().release(); }
      } release;
      return eigenvalue_k(P, k, tol);
    }));
  std::vector<Eigenpair> out;
  out.reserve(K + 1);
  for (auto& f : futs) out.push_back(f.get());
  for (int k = 0; k < K; ++k)
    if (!(out[k + 1].lambda > out[k].lambda))
      throw ConvergenceFailure("eigenvalues: sequence not strictly increasing",
                               out[k].lambda, out[k + 1].lambda);
  return out;
}

}  // namespace anharm
