#pragma once

#include <utility>
#include <vector>

#include "anharm/ode.hpp"
#include "anharm/polynomial.hpp"

namespace anharm {

/// Initial states making f = y/y1 odd: the eigenfunction normalization
/// together with the opposite-parity companion (y1(0)=0, y1'(0)=1 for even
/// y; y1(0)=1, y1'(0)=0 for odd y). W(y, y1)(0) = +-1.
std::pair<OdeState, OdeState> normalized_pair(Parity parity);

/// Sector-indexed asymptotic values a_j of f = y/y1, d+2 entries.
struct AsymptoticTable {
  int d = 0;
  std::vector<Complex> values;
  double radius = 0.0;
  Parity parity_of_y = Parity::Even;
};

/// Radius past the turning point with a moderate action target: far enough
/// that f has stabilized exponentially, short of drowning the recessive
/// component in roundoff.
double asymptotic_radius(const EvenPolynomial& P, double lambda);

/// f evaluated along the bisector of sector j at radii R and 1.2R; returns
/// the stabilized value (exact 0 when |f| sits under tol and is not
/// growing). Throws NotStabilized when the two radii disagree.
Complex asymptotic_value(const EvenPolynomial& P, double lambda, Parity parity, int j,
                         double R, double tol);

/// All sectors, with per-call retries growing R on NotStabilized.
AsymptoticTable asymptotic_table(const EvenPolynomial& P, double lambda, Parity parity,
                                 double tol);

/// g_{k,m,p}(b) = Arg a_1 for the 2k+p-th eigenpair of the QES potential.
/// Lands in (0, pi/2) for p = 1 and (-pi/2, 0) for p = 0.
double g_angle(int k, int m, int p, double b, double tol = 1e-8);

struct GScan {
  std::vector<double> b_values;
  std::vector<double> g_values;
  double covered_lo = 0.0;
  double covered_hi = 0.0;
};

/// Samples g over a sorted grid of b values and reports the swept interval.
GScan surjectivity_scan(int k, int m, int p, const std::vector<double>& b_grid,
                        double tol = 1e-8);

}  // namespace anharm
