#pragma once

#include <complex>
#include <vector>

#include "anharm/defaults.hpp"
#include "anharm/ode.hpp"
#include "anharm/polynomial.hpp"

namespace anharm {

/// Symmetric box [-x_max, x_max] x [-y_max, y_max].
struct Box {
  double x_max = 0.0;
  double y_max = 0.0;
};

struct Rect {
  double x0, x1, y0, y1;
};

enum class Axis { Real, Imaginary };

/// All simple zeros of the axis restriction of the parity solution in
/// (0, limit], reflected to negatives. The imaginary axis uses the real
/// ODE u'' + (P(it) - lambda) u = 0 from imaginary_restriction.
std::vector<double> axis_zeros(const EvenPolynomial& P, double lambda, Parity parity,
                               double limit, double tol, Axis axis);

/// Zeros of the propagated solution inside an axis-aligned rectangle by the
/// argument principle: phase-unwrapped increments over an adaptively refined
/// boundary, each step kept below pi/2. Throws BoundaryZero when |y| on the
/// contour falls under the floor or refinement hits the per-side cap.
int count_zeros_rect(const EvenPolynomial& P, double lambda, Parity parity, Rect rect,
                     double tol);

struct ZeroCensus {
  std::vector<double> real_zeros;
  std::vector<double> imaginary_zeros;  // positions t, zero at i t
  int offaxis_count = 0;
  std::vector<Complex> quadrant_zeros;
  std::vector<int> quadrant_counts;  // Q1..Q4
  Box box;
  double lambda = 0.0;
  int k = -1;
  int whole_box_count = 0;
  bool consistent = false;
};

/// Full census over the box: axis lists from axis_zeros, off-axis counts
/// from four quadrant rectangles inset 10*tol from the axes, plus the
/// whole-box winding total as a consistency check. Boundary hits are
/// retried with jittered contours before giving up.
ZeroCensus census(const EvenPolynomial& P, double lambda, Parity parity, Box box,
                  double tol, int k = -1);

inline bool verify_axis_confinement(const ZeroCensus& c) { return c.offaxis_count == 0; }

/// Largest box edge in [need, need+1] whose WKB action beyond the turning
/// point of w'' = (V - mu) w stays under the budget. Counting contours that
/// cut deeper into a decay sector lose the recessive phase to roundoff; the
/// default budget matches the engine's extended-precision transport.
double safe_box_edge(std::span<const double> even_coeffs, double mu, double need,
                     double action_budget = 16.0);

/// Census box sized to hold the given zeros with numerically safe edges.
Box safe_census_box(const EvenPolynomial& P, double lambda, double need_x, double need_y);

}  // namespace anharm
