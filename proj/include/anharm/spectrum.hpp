#pragma once

#include <vector>

#include "anharm/defaults.hpp"
#include "anharm/ode.hpp"
#include "anharm/polynomial.hpp"

namespace anharm {

struct Eigenpair {
  int k = 0;
  double lambda = 0.0;
  Parity parity = Parity::Even;
  int real_zero_count = 0;
  double radius_used = 0.0;
};

/// Global minimum of the potential (the spectrum is bounded below by it).
double min_potential(const EvenPolynomial& P);

/// Smallest R with P(R) - lambda_max >= barrier, extended until the WKB
/// action integral of sqrt(P - lambda_max) over [0, R] reaches `action`.
/// Guarantees an e^action dominant/recessive separation at R.
double shooting_radius(const EvenPolynomial& P, double lambda_max,
                       double action = defaults::kActionShoot,
                       double barrier = defaults::kBarrier);

/// Logarithmic-derivative mismatch Re(dy/y)(R) + sqrt(P(R) - lambda) of the
/// parity solution propagated from 0 against the recessive WKB decay rate.
/// Its root in lambda sits exponentially close to the eigenvalue; away from
/// the root the dominant solution pins the value near +2 sqrt(P(R) - lambda).
double miss(const EvenPolynomial& P, double lambda, double R, Parity parity,
            double tol = 1e-12);

/// Total real zeros of the parity solution on (-R, R): twice the sign
/// changes on (0, R], plus one for the origin when odd. Nondecreasing in
/// lambda; jumps by 2 as lambda crosses an eigenvalue of that parity.
int node_count(const EvenPolynomial& P, double lambda, double R, Parity parity,
               double tol = 1e-11);

/// k-th eigenvalue (parity k mod 2) by node-count bisection, with a guarded
/// secant polish on `miss` inside the terminal bracket when it brackets a
/// sign change. Throws ConvergenceFailure with the last bracket on failure.
Eigenpair eigenvalue_k(const EvenPolynomial& P, int k, double tol);

/// Eigenvalues k = 0..K, strictly increasing, searched concurrently.
std::vector<Eigenpair> eigenvalues(const EvenPolynomial& P, int K,
                                   double tol = defaults::kEigenTol);

}  // namespace anharm
