#include "anharm/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "anharm/errors.hpp"

namespace anharm {

namespace {

// Internal transport runs in 80-bit extended precision: the recessive
// solution keeps about e^20 of action worth of relative accuracy instead of
// binary64's e^11, which is what zero censuses on sextic boxes need.
using Real = long double;
using CF = std::complex<Real>;

// Full coefficient list (odd entries zero) of an even-coefficient polynomial.
std::vector<Real> full_coeffs(std::span<const double> even) {
  std::vector<Real> full(2 * even.size() - 1, 0.0L);
  for (std::size_t j = 0; j < even.size(); ++j) full[2 * j] = even[j];
  return full;
}

// Coefficients of V(z0 + w) in powers of w (classic synthetic Taylor shift).
void taylor_shift(std::span<const Real> full, CF z0, std::vector<CF>& out) {
  const std::size_t n = full.size();
  out.assign(full.begin(), full.end());
  if (z0 == CF(0.0L)) return;
  for (std::size_t k = 0; k + 1 < n; ++k)
    for (std::size_t j = n - 1; j-- > k;) out[j] += z0 * out[j + 1];
}

Real max_abs(std::initializer_list<CF> vs) {
  Real m = 0.0L;
  for (const auto& v : vs) m = std::max(m, std::abs(v));
  return m;
}

struct LocalSeries {
  std::vector<CF> a;   // column 1
  std::vector<CF> a2;  // column 2 (pair propagation)
  std::vector<Complex> view;  // double copy for observers
};

// Builds the local series and picks a step length h <= limit so the top
// coefficients contribute less than tol * scale.
double build_step(const std::vector<Real>& full, Real mu, int order, CF z0, CF dir, CF y,
                  CF dy, const CF* y1, const CF* dy1, double limit, double tol, double floor,
                  LocalSeries& out) {
  static thread_local std::vector<CF> shifted;
  taylor_shift(full, z0, shifted);
  const int d = static_cast<int>(shifted.size()) - 1;

  // q_k = dir^{k+2} V_k(z0) - dir^2 mu [k=0]
  static thread_local std::vector<CF> q;
  q.resize(shifted.size());
  CF dirpow = dir * dir;
  for (int k = 0; k <= d; ++k) {
    q[k] = dirpow * shifted[k];
    if (k == 0) q[k] -= dir * dir * mu;
    dirpow *= dir;
  }

  auto recur = [&](std::vector<CF>& a, CF a0, CF a1) {
    a.assign(static_cast<std::size_t>(order) + 1, CF(0.0L));
    a[0] = a0;
    a[1] = a1;
    for (int n = 0; n + 2 <= order; ++n) {
      CF s = 0.0L;
      for (int k = 0; k <= std::min(n, d); ++k) s += q[k] * a[n - k];
      a[n + 2] = s / static_cast<Real>((n + 1.0) * (n + 2.0));
    }
  };

  recur(out.a, y, dy * dir);
  if (y1) recur(out.a2, *y1, (*dy1) * dir);

  Real scale = max_abs({out.a[0], out.a[1]});
  if (y1) scale = std::max(scale, max_abs({out.a2[0], out.a2[1]}));
  scale = std::max(scale, Real(1e-290));

  double h_acc = std::numeric_limits<double>::infinity();
  auto shrink = [&](const std::vector<CF>& a) {
    for (int n = order - 2; n <= order; ++n) {
      Real an = std::abs(a[n]);
      if (!std::isfinite(static_cast<double>(an)))
        throw StepUnderflow("TaylorPropagator: series blow-up");
      if (an > 0.0L) {
        double hn = static_cast<double>(std::pow(Real(tol) * scale / an, Real(1.0) / n));
        h_acc = std::min(h_acc, 0.8 * hn);
      }
    }
  };
  shrink(out.a);
  if (y1) shrink(out.a2);

  // The floor guards against accuracy-driven collapse, not against a short
  // remaining distance.
  if (h_acc < limit && !(h_acc > floor * std::max(1.0, static_cast<double>(std::abs(z0)))))
    throw StepUnderflow("TaylorPropagator: required substep below floor");
  return std::min(limit, h_acc);
}

CF eval_series(const std::vector<CF>& a, Real s) {
  CF acc = 0.0L;
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * s + a[i];
  return acc;
}

CF eval_series_deriv(const std::vector<CF>& a, Real s) {
  CF acc = 0.0L;
  for (std::size_t i = a.size(); i-- > 1;) acc = acc * s + a[i] * static_cast<Real>(i);
  return acc;
}

Complex to_d(CF v) {
  return Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
}

}  // namespace

Complex StepView::eval(double s) const {
  Complex acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * s + coeffs[i];
  return acc;
}

Complex StepView::eval_deriv(double s) const {
  Complex acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 1;)
    acc = acc * s + coeffs[i] * static_cast<double>(i);
  return acc;
}

std::vector<double> central_series(const EvenPolynomial& P, double lambda, Parity parity,
                                   int order) {
  return parity == Parity::Even ? central_series(P, lambda, 1.0, 0.0, order)
                                : central_series(P, lambda, 0.0, 1.0, order);
}

std::vector<double> central_series(const EvenPolynomial& P, double lambda, double y0,
                                   double dy0, int order) {
  if (order < 2) throw std::invalid_argument("central_series: order must be >= 2");
  std::vector<Real> q = full_coeffs(P.even_coeffs());
  q[0] -= lambda;
  const int d = static_cast<int>(q.size()) - 1;
  std::vector<Real> a(static_cast<std::size_t>(order) + 1, 0.0L);
  a[0] = y0;
  if (order >= 1) a[1] = dy0;
  for (int n = 0; n + 2 <= order; ++n) {
    Real s = 0.0L;
    for (int k = 0; k <= std::min(n, d); ++k) s += q[k] * a[n - k];
    a[n + 2] = s / static_cast<Real>((n + 1.0) * (n + 2.0));
  }
  return {a.begin(), a.end()};
}

ImaginaryAxisOde imaginary_restriction(const EvenPolynomial& P, double lambda) {
  auto c = P.even_coeffs();
  std::vector<double> pt(c.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    pt[j] = (j % 2 == 0 ? -1.0 : 1.0) * c[j];  // (-1)^{j+1} c_j
  return {std::move(pt), lambda};
}

TaylorPropagator::TaylorPropagator(std::span<const double> even_coeffs, double mu,
                                   PropagatorOptions opt)
    : v_(even_coeffs.begin(), even_coeffs.end()), mu_(mu), opt_(opt) {
  if (v_.empty()) throw std::invalid_argument("TaylorPropagator: empty coefficient list");
  if (opt_.order < 4) throw std::invalid_argument("TaylorPropagator: order must be >= 4");
}

TaylorPropagator::TaylorPropagator(const EvenPolynomial& P, double lambda,
                                   PropagatorOptions opt)
    : TaylorPropagator(P.even_coeffs(), lambda, opt) {}

OdeState TaylorPropagator::propagate(OdeState state, Complex target, double tol) const {
  return propagate_observed(state, target, tol, nullptr, nullptr);
}

OdeState TaylorPropagator::propagate_observed(OdeState state, Complex target, double tol,
                                              const StepObserver& observer,
                                              const StepCap& cap) const {
  if (!(tol > 0.0)) throw std::invalid_argument("propagate: tol must be positive");
  const std::vector<Real> full = full_coeffs(v_);
  Complex delta = target - state.z;
  double total = std::abs(delta);
  if (total == 0.0) return state;
  Complex ddir = delta / total;
  CF dir(ddir.real(), ddir.imag());
  CF z(state.z.real(), state.z.imag());
  CF y(state.y.real(), state.y.imag());
  CF dy(state.dy.real(), state.dy.imag());
  double travelled = 0.0;
  LocalSeries ls;
  while (travelled < total) {
    double remaining = total - travelled;
    double limit = remaining;
    if (cap) limit = std::min(limit, std::max(cap(to_d(z)), opt_.step_floor));
    double h = build_step(full, mu_, opt_.order, z, dir, y, dy, nullptr, nullptr, limit, tol,
                          opt_.step_floor, ls);
    if (h >= remaining) h = remaining;
    if (observer) {
      ls.view.assign(ls.a.size(), Complex());
      for (std::size_t i = 0; i < ls.a.size(); ++i) ls.view[i] = to_d(ls.a[i]);
      observer(StepView{to_d(z), ddir, h, ls.view});
    }
    y = eval_series(ls.a, h);
    dy = eval_series_deriv(ls.a, h) * std::conj(dir);
    travelled += h;
    z = (travelled >= total) ? CF(target.real(), target.imag()) : z + static_cast<Real>(h) * dir;
  }
  return {target, to_d(y), to_d(dy)};
}

TaylorPropagator::PairState TaylorPropagator::propagate_pair(PairState state, Complex target,
                                                             double tol) const {
  if (!(tol > 0.0)) throw std::invalid_argument("propagate_pair: tol must be positive");
  const std::vector<Real> full = full_coeffs(v_);
  Complex delta = target - state.z;
  double total = std::abs(delta);
  if (total == 0.0) return state;
  Complex ddir = delta / total;
  CF dir(ddir.real(), ddir.imag());
  CF z(state.z.real(), state.z.imag());
  CF y(state.y.real(), state.y.imag()), dy(state.dy.real(), state.dy.imag());
  CF y1(state.y1.real(), state.y1.imag()), dy1(state.dy1.real(), state.dy1.imag());
  double travelled = 0.0;
  LocalSeries ls;
  while (travelled < total) {
    double remaining = total - travelled;
    double h = build_step(full, mu_, opt_.order, z, dir, y, dy, &y1, &dy1, remaining, tol,
                          opt_.step_floor, ls);
    if (h >= remaining) h = remaining;
    CF cdir = std::conj(dir);
    y = eval_series(ls.a, h);
    dy = eval_series_deriv(ls.a, h) * cdir;
    y1 = eval_series(ls.a2, h);
    dy1 = eval_series_deriv(ls.a2, h) * cdir;
    travelled += h;
    z = (travelled >= total) ? CF(target.real(), target.imag()) : z + static_cast<Real>(h) * dir;

    // Common power-of-two renormalization: exact, preserves ratios and args.
    Real m = max_abs({y, dy, y1, dy1});
    if (m > 0x1p200L || (m > 0.0L && m < 0x1p-200L)) {
      int e = 0;
      std::frexp(static_cast<double>(std::min(m, Real(1e300))), &e);
      Real f = std::ldexp(1.0L, -e);
      y *= f;
      dy *= f;
      y1 *= f;
      dy1 *= f;
    }
  }
  return {target, to_d(y), to_d(dy), to_d(y1), to_d(dy1)};
}

}  // namespace anharm
