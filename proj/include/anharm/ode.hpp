#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "anharm/defaults.hpp"
#include "anharm/polynomial.hpp"

namespace anharm {

using Complex = std::complex<double>;

/// Solution sample of -y'' + (P - lambda) y = 0 at a point.
struct OdeState {
  Complex z;
  Complex y;
  Complex dy;
};

enum class Parity { Even, Odd };

inline Parity parity_of_index(int k) { return k % 2 == 0 ? Parity::Even : Parity::Odd; }

/// Even eigenfunctions are normalized y(0)=1, y'(0)=0; odd ones y(0)=0, y'(0)=1.
inline OdeState initial_state(Parity p) {
  return p == Parity::Even ? OdeState{0.0, 1.0, 0.0} : OdeState{0.0, 0.0, 1.0};
}

/// Taylor coefficients a_0..a_order of the solution at 0 with the given
/// initial data, from the recurrence (n+2)(n+1) a_{n+2} = sum_j (P-lambda)_j a_{n-j}.
std::vector<double> central_series(const EvenPolynomial& P, double lambda, Parity parity,
                                   int order);
std::vector<double> central_series(const EvenPolynomial& P, double lambda, double y0,
                                   double dy0, int order);

/// Restriction of the equation to the imaginary axis: u(t) = y(it) satisfies
/// u'' + (P(it) - lambda) u = 0. Packaged as the real even coefficient list of
/// P~(t) = -P(it), whose coefficients are (-1)^{j+1} c_j, together with lambda.
/// In the propagator's normal form u'' = (V - mu) u this is V = P~, mu = -lambda.
struct ImaginaryAxisOde {
  std::vector<double> ptilde_even_coeffs;
  double lambda;
};

ImaginaryAxisOde imaginary_restriction(const EvenPolynomial& P, double lambda);

struct PropagatorOptions {
  int order = defaults::kTaylorOrder;
  double step_floor = defaults::kStepFloor;
};

/// One accepted substep: the local series in the arc parameter s in [0, h]
/// along the unit direction dir from z0. Valid only inside the observer call.
struct StepView {
  Complex z0;
  Complex dir;
  double h;
  std::span<const Complex> coeffs;

  Complex eval(double s) const;
  Complex eval_deriv(double s) const;  // derivative in s
};

using StepObserver = std::function<void(const StepView&)>;
using StepCap = std::function<double(Complex)>;  // max substep length at a position

/// Adaptive re-centered Taylor propagation of y'' = (V(z) - mu) y along
/// straight segments. V is any real even polynomial (no sign constraint);
/// for the eigenvalue problem V = P and mu = lambda.
class TaylorPropagator {
 public:
  TaylorPropagator(std::span<const double> even_coeffs, double mu, PropagatorOptions opt = {});
  TaylorPropagator(const EvenPolynomial& P, double lambda, PropagatorOptions opt = {});

  /// Throws StepUnderflow when the required substep falls below the floor.
  OdeState propagate(OdeState state, Complex target, double tol) const;

  OdeState propagate_observed(OdeState state, Complex target, double tol,
                              const StepObserver& observer, const StepCap& cap = {}) const;

  /// Two solutions of the same equation transported along the same substeps,
  /// renormalized by a common power of two whenever they grow or shrink past
  /// 2^+-200. Only ratios and arguments of the pair are meaningful afterwards.
  struct PairState {
    Complex z, y, dy, y1, dy1;
  };
  PairState propagate_pair(PairState state, Complex target, double tol) const;

  std::span<const double> even_coeffs() const { return v_; }
  double mu() const { return mu_; }

 private:
  std::vector<double> v_;
  double mu_;
  PropagatorOptions opt_;
};

}  // namespace anharm
