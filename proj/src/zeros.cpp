#include "anharm/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "anharm/errors.hpp"

namespace anharm {

namespace {

constexpr double kPi = std::numbers::pi;

// Zero positions of the real solution of w'' = (V - mu) w on (0, limit].
std::vector<double> scan_positive_zeros(std::span<const double> v_coeffs, double mu,
                                        Parity parity, double limit, double tol) {
  TaylorPropagator prop(v_coeffs, mu);
  auto cap = [&](Complex z) {
    double w2 = std::max(1.0, -(eval_even(v_coeffs, z.real()) - mu));
    return 0.3 / std::sqrt(w2);
  };

  std::vector<double> zeros;
  double last_val = 1.0;  // both parities leave 0 with positive sign
  int last_sign = 1;
  auto observer = [&](const StepView& view) {
    const int sub = 10;
    double prev_s = 0.0;
    double prev_val = last_val;
    for (int i = 1; i <= sub; ++i) {
      double s = view.h * i / sub;
      double val = view.eval(s).real();
      int sign = val == 0.0 ? 0 : (val > 0 ? 1 : -1);
      if (sign != 0) {
        if (last_sign != 0 && sign != last_sign) {
          // bracket [prev_s, s] within this step: bisect, then Newton
          double a = prev_s, b = s, fa = prev_val;
          for (int it = 0; it < 60 && (b - a) > 1e-3 * tol; ++it) {
            double m = 0.5 * (a + b);
            double fm = view.eval(m).real();
            if ((fm > 0) == (fa > 0)) {
              a = m;
              fa = fm;
            } else {
              b = m;
            }
          }
          double root = 0.5 * (a + b);
          for (int it = 0; it < 3; ++it) {
            double f = view.eval(root).real();
            double df = view.eval_deriv(root).real();
            if (df == 0.0) break;
            double nr = root - f / df;
            if (nr < a - view.h || nr > b + view.h) break;
            root = nr;
          }
          double pos = view.z0.real() + root;
          if (pos > 0.0 && pos <= limit + tol) zeros.push_back(std::min(pos, limit));
        }
        last_sign = sign;
      }
      prev_s = s;
      prev_val = val;
    }
    last_val = prev_val;
  };
  prop.propagate_observed(initial_state(parity), Complex(limit, 0.0),
                          std::min(1e-16, tol * 1e-3), observer, cap);
  return zeros;
}

}  // namespace

std::vector<double> axis_zeros(const EvenPolynomial& P, double lambda, Parity parity,
                               double limit, double tol, Axis axis) {
  if (!(limit > 0.0)) throw std::invalid_argument("axis_zeros: limit must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("axis_zeros: tol must be positive");
  std::vector<double> pos;
  if (axis == Axis::Real) {
    pos = scan_positive_zeros(P.even_coeffs(), lambda, parity, limit, tol);
  } else {
    ImaginaryAxisOde im = imaginary_restriction(P, lambda);
    pos = scan_positive_zeros(im.ptilde_even_coeffs, -im.lambda, parity, limit, tol);
  }
  std::vector<double> out;
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) out.push_back(-*it);
  out.insert(out.end(), pos.begin(), pos.end());
  return out;
}

namespace {

struct ContourNode {
  Complex z;
  OdeState state;  // renormalized
};

class RectCounter {
 public:
  RectCounter(const EvenPolynomial& P, double lambda, Parity parity, double tol)
      : prop_(P, lambda),
        parity_(parity),
        // Contour nodes deep in a decay sector sit exponentially below the
        // dominant scale; a tight transport tolerance keeps their phase
        // meaningful for boxes of moderate action.
        tol_(std::min(1e-16, 1e-4 * tol)) {}

  int count(Rect r) const {
    if (!(r.x0 < r.x1 && r.y0 < r.y1))
      throw std::invalid_argument("count_zeros_rect: empty rectangle");
    const Complex corners[4] = {{r.x0, r.y0}, {r.x1, r.y0}, {r.x1, r.y1}, {r.x0, r.y1}};
    len_scale_ = std::max(r.x1 - r.x0, r.y1 - r.y0);
    double total = 0.0;
    OdeState start = state_at(corners[0]);
    OdeState cur = start;
    const int initial = 8;
    for (int side = 0; side < 4; ++side) {
      nodes_on_side_ = 0;
      Complex a = corners[side], b = corners[(side + 1) % 4];
      for (int piece = 1; piece <= initial; ++piece) {
        Complex target = a + (b - a) * (static_cast<double>(piece) / initial);
        OdeState next = piece == initial && side == 3 ? start : state_at(target);
        walk(cur, next, total, 0);
        cur = next;
      }
    }
    // Closing the loop lands on the starting corner again; the accumulated
    // phase must be an integer multiple of 2 pi.
    double w = total / (2.0 * kPi);
    double n = std::round(w);
    if (std::abs(w - n) > 0.2)
      throw BoundaryZero("count_zeros_rect: winding total far from an integer");
    return static_cast<int>(n);
  }

 private:
  static void renorm(OdeState& s) {
    double m = std::max(std::abs(s.y), std::abs(s.dy));
    if (m > 0x1p120 || (m > 0.0 && m < 0x1p-120)) {
      int e = 0;
      std::frexp(m, &e);
      double f = std::ldexp(1.0, -e);
      s.y *= f;
      s.dy *= f;
    }
  }

  // Fresh radial transport per node: errors committed in the dominant part
  // of the contour never pollute the recessive part.
  OdeState state_at(Complex z) const {
    OdeState s = prop_.propagate(initial_state(parity_), z, tol_);
    renorm(s);
    double scale = std::max(std::abs(s.y), std::abs(s.dy) * len_scale_);
    if (std::abs(s.y) < defaults::kBoundaryFloor * scale)
      throw BoundaryZero("count_zeros_rect: |y| under the boundary floor");
    return s;
  }

  void walk(const OdeState& from, const OdeState& to, double& total, int depth) const {
    if (++nodes_on_side_ > defaults::kRefineCap)
      throw BoundaryZero("count_zeros_rect: refinement cap exceeded");
    double d = std::arg(to.y) - std::arg(from.y);
    while (d > kPi) d -= 2.0 * kPi;
    while (d <= -kPi) d += 2.0 * kPi;
    // The endpoint difference alone can alias across a full turn; bound the
    // phase travel along the segment by h |y'/y| at the endpoints as well.
    double h = std::abs(to.z - from.z);
    double rate = std::max(std::abs(from.dy / from.y), std::abs(to.dy / to.y));
    bool fine = std::abs(d) < 0.5 * kPi && h * rate < 1.2;
    if (fine || depth >= 24) {
      if (!fine)
        throw BoundaryZero("count_zeros_rect: phase step stuck above pi/2");
      total += d;
      return;
    }
    OdeState mid = state_at(0.5 * (from.z + to.z));
    walk(from, mid, total, depth + 1);
    walk(mid, to, total, depth + 1);
  }

  TaylorPropagator prop_;
  Parity parity_;
  double tol_;
  mutable double len_scale_ = 1.0;
  mutable int nodes_on_side_ = 0;
};

// Quadtree refinement of off-axis zero positions inside a rectangle.
void refine_positions(const RectCounter& counter, const TaylorPropagator& prop, Parity parity,
                      Rect r, double tol, std::vector<Complex>& out, int depth = 0) {
  int n = counter.count(r);
  if (n == 0) return;
  double dx = r.x1 - r.x0, dy = r.y1 - r.y0;
  if (n == 1 && std::max(dx, dy) < 0.05) {
    Complex z(0.5 * (r.x0 + r.x1), 0.5 * (r.y0 + r.y1));
    for (int it = 0; it < 40; ++it) {
      OdeState s = prop.propagate(initial_state(parity), z, tol * 1e-3);
      Complex step = s.y / s.dy;
      z -= step;
      if (std::abs(step) < 1e-12 * std::max(1.0, std::abs(z))) break;
    }
    OdeState s = prop.propagate(initial_state(parity), z, tol * 1e-3);
    if (std::abs(s.y) > tol * std::max(1.0, std::abs(s.dy)))
      throw BoundaryZero("census: off-axis zero refinement failed to converge");
    out.push_back(z);
    return;
  }
  if (depth > 24) throw BoundaryZero("census: quadtree refinement too deep");
  double mx = 0.5 * (r.x0 + r.x1), my = 0.5 * (r.y0 + r.y1);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<Complex> found;
    try {
      if (dx >= dy) {
        refine_positions(counter, prop, parity, {r.x0, mx, r.y0, r.y1}, tol, found, depth + 1);
        refine_positions(counter, prop, parity, {mx, r.x1, r.y0, r.y1}, tol, found, depth + 1);
      } else {
        refine_positions(counter, prop, parity, {r.x0, r.x1, r.y0, my}, tol, found, depth + 1);
        refine_positions(counter, prop, parity, {r.x0, r.x1, my, r.y1}, tol, found, depth + 1);
      }
      out.insert(out.end(), found.begin(), found.end());
      return;
    } catch (const BoundaryZero&) {
      if (attempt == 2) throw;
      if (dx >= dy)
        mx += defaults::kJitterRel * dx;
      else
        my += defaults::kJitterRel * dy;
    }
  }
}

int count_with_jitter(const RectCounter& counter, Rect r) {
  double dx = r.x1 - r.x0, dy = r.y1 - r.y0;
  for (int attempt = 0;; ++attempt) {
    try {
      return counter.count(r);
    } catch (const BoundaryZero&) {
      if (attempt >= defaults::kJitterRetries) throw;
      // shrink the outer edges by a relative jitter; axis insets stay put
      double f = defaults::kJitterRel * (attempt + 1);
      r = {r.x0 + f * dx * 0.5, r.x1 - f * dx, r.y0 + f * dy * 0.5, r.y1 - f * dy};
    }
  }
}

}  // namespace

int count_zeros_rect(const EvenPolynomial& P, double lambda, Parity parity, Rect rect,
                     double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("count_zeros_rect: tol must be positive");
  return RectCounter(P, lambda, parity, tol).count(rect);
}

double safe_box_edge(std::span<const double> even_coeffs, double mu, double need,
                     double action_budget) {
  auto forbidden_rate = [&](double x) {
    return std::sqrt(std::max(eval_even(even_coeffs, x) - mu, 0.0));
  };
  double x = std::max(need, 0.05);
  double action = 0.0;
  const double dx = 0.002;
  for (double t = 0.5 * dx; t < x; t += dx) action += forbidden_rate(t) * dx;
  double limit = need + 1.0;
  while (x < limit) {
    double step = forbidden_rate(x + 0.5 * dx) * dx;
    if (action + step > action_budget) break;
    action += step;
    x += dx;
  }
  return x;
}

Box safe_census_box(const EvenPolynomial& P, double lambda, double need_x, double need_y) {
  ImaginaryAxisOde im = imaginary_restriction(P, lambda);
  return {safe_box_edge(P.even_coeffs(), lambda, need_x + 0.05),
          safe_box_edge(im.ptilde_even_coeffs, -im.lambda, need_y + 0.05)};
}

ZeroCensus census(const EvenPolynomial& P, double lambda, Parity parity, Box box, double tol,
                  int k) {
  if (!(box.x_max > 0.0 && box.y_max > 0.0))
    throw std::invalid_argument("census: box must be positive");
  ZeroCensus c;
  c.box = box;
  c.lambda = lambda;

  c.real_zeros = axis_zeros(P, lambda, parity, box.x_max, tol, Axis::Real);
  c.imaginary_zeros = axis_zeros(P, lambda, parity, box.y_max, tol, Axis::Imaginary);
  if (parity == Parity::Odd) {
    c.real_zeros.insert(
        std::lower_bound(c.real_zeros.begin(), c.real_zeros.end(), 0.0), 0.0);
  }
  c.k = k >= 0 ? k : static_cast<int>(c.real_zeros.size());

  RectCounter counter(P, lambda, parity, tol);
  const double inset = 10.0 * tol;
  const Rect quadrants[4] = {
      {inset, box.x_max, inset, box.y_max},
      {-box.x_max, -inset, inset, box.y_max},
      {-box.x_max, -inset, -box.y_max, -inset},
      {inset, box.x_max, -box.y_max, -inset},
  };
  c.quadrant_counts.resize(4);
  for (int qi = 0; qi < 4; ++qi)
    c.quadrant_counts[qi] = count_with_jitter(counter, quadrants[qi]);
  c.offaxis_count =
      c.quadrant_counts[0] + c.quadrant_counts[1] + c.quadrant_counts[2] + c.quadrant_counts[3];

  c.whole_box_count =
      count_with_jitter(counter, {-box.x_max, box.x_max, -box.y_max, box.y_max});
  c.consistent = c.whole_box_count ==
                 static_cast<int>(c.real_zeros.size() + c.imaginary_zeros.size()) +
                     c.offaxis_count;
  if (!c.consistent)
    throw BoundaryZero("census: winding total disagrees with the axis decomposition");

  if (c.offaxis_count > 0) {
    TaylorPropagator prop(P, lambda);
    for (int qi = 0; qi < 4; ++qi)
      if (c.quadrant_counts[qi] > 0)
        refine_positions(counter, prop, parity, quadrants[qi], tol, c.quadrant_zeros);
  }
  return c;
}

}  // namespace anharm
