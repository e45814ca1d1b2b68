#include <doctest.h>

#include <cmath>
#include <random>

#include "anharm/errors.hpp"
#include "anharm/ode.hpp"

using namespace anharm;

namespace {
const EvenPolynomial kHarmonic({0.0, 1.0});             // z^2
const EvenPolynomial kQes({0.0, 1.0, 4.0, 1.0});        // z^6 + 4z^4 + z^2
const EvenPolynomial kQes0({0.0, -7.0, 0.0, 1.0});      // z^6 - 7z^2
}  // namespace

TEST_CASE("central series of the harmonic ground state") {
  // y = exp(-z^2/2): 1 - z^2/2 + z^4/8 - ...
  auto a = central_series(kHarmonic, 1.0, Parity::Even, 10);
  CHECK(a[0] == 1.0);
  CHECK(a[1] == 0.0);
  CHECK(a[2] == doctest::Approx(-0.5));
  CHECK(a[3] == 0.0);
  CHECK(a[4] == doctest::Approx(0.125));
}

TEST_CASE("central series odd recurrence") {
  auto a = central_series(kHarmonic, 1.0, Parity::Odd, 6);
  CHECK(a[1] == 1.0);
  CHECK(a[0] == 0.0);
  CHECK(a[3] == doctest::Approx(-1.0 / 6.0));
}

TEST_CASE("central series of the closed-form sextic eigenfunction") {
  // lambda = -2 sqrt(2): y proportional to (z^2 + 1/sqrt(2)) exp(-z^4/4);
  // the parity normalization fixes a_0 = 1, so compare after scaling by
  // 1/sqrt(2).
  double s = 1.0 / std::sqrt(2.0);
  auto a = central_series(kQes0, -2.0 * std::sqrt(2.0), Parity::Even, 12);
  // (z^2 + s)(1 - z^4/4 + z^8/32) = s + z^2 - s z^4/4 - z^6/4 + s z^8/32 + z^10/32
  std::vector<double> want = {s, 0, 1, 0, -s / 4, 0, -0.25, 0, s / 32, 0, 1.0 / 32, 0};
  for (std::size_t n = 0; n < want.size(); ++n)
    CHECK(a[n] * s == doctest::Approx(want[n]).epsilon(1e-12));
}

TEST_CASE("central series rejects tiny order") {
  CHECK_THROWS(central_series(kHarmonic, 1.0, Parity::Even, 1));
}

TEST_CASE("imaginary restriction flips alternate coefficients") {
  auto quartic = imaginary_restriction(EvenPolynomial({0.0, 0.0, 1.0}), 0.3);
  CHECK(quartic.ptilde_even_coeffs == std::vector<double>{0.0, 0.0, -1.0});
  auto harm = imaginary_restriction(kHarmonic, 0.3);
  CHECK(harm.ptilde_even_coeffs == std::vector<double>{0.0, 1.0});  // -P(it) = t^2
  auto sext = imaginary_restriction(kQes0, 0.3);
  CHECK(sext.ptilde_even_coeffs == std::vector<double>{0.0, -7.0, 0.0, 1.0});
  CHECK(sext.lambda == 0.3);
}

TEST_CASE("propagate reproduces the harmonic closed form") {
  TaylorPropagator prop(kHarmonic, 1.0);
  SUBCASE("real target") {
    OdeState s = prop.propagate(initial_state(Parity::Even), Complex(1.0, 0.0), 1e-12);
    CHECK(s.y.real() == doctest::Approx(std::exp(-0.5)).epsilon(1e-11));
    CHECK(s.dy.real() == doctest::Approx(-std::exp(-0.5)).epsilon(1e-11));
    CHECK(std::abs(s.y.imag()) == 0.0);
  }
  SUBCASE("imaginary target") {
    // y(i) = e^{1/2}, y'(i) = -i e^{1/2}
    OdeState s = prop.propagate(initial_state(Parity::Even), Complex(0.0, 1.0), 1e-12);
    CHECK(s.y.real() == doctest::Approx(std::exp(0.5)).epsilon(1e-11));
    CHECK(std::abs(s.y.imag()) < 1e-12);
    CHECK(s.dy.imag() == doctest::Approx(-std::exp(0.5)).epsilon(1e-11));
    CHECK(std::abs(s.dy.real()) < 1e-12);
  }
}

TEST_CASE("propagate reproduces the sextic closed form") {
  // b = 2: y = exp(-z^4/4 - z^2), lambda = b; y(1) = e^{-5/4}
  TaylorPropagator prop(kQes, 2.0);
  OdeState s = prop.propagate(initial_state(Parity::Even), Complex(1.0, 0.0), 1e-12);
  CHECK(s.y.real() == doctest::Approx(std::exp(-1.25)).epsilon(1e-10));
  // y'/y = -z^3 - 2z = -3 at z = 1
  CHECK((s.dy / s.y).real() == doctest::Approx(-3.0).epsilon(1e-9));
}

TEST_CASE("Wronskian conservation and path independence") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> coef(-2.0, 2.0), lam(-5.0, 5.0), pt(-1.5, 1.5);
  for (int trial = 0; trial < 25; ++trial) {
    EvenPolynomial P({coef(rng), coef(rng), coef(rng), std::abs(coef(rng)) + 0.5});
    double lambda = lam(rng);
    TaylorPropagator prop(P, lambda);
    Complex z1(pt(rng), pt(rng)), z2(pt(rng), pt(rng));
    const double tol = 1e-10;

    OdeState e = prop.propagate(initial_state(Parity::Even), z1, tol);
    OdeState o = prop.propagate(initial_state(Parity::Odd), z1, tol);
    e = prop.propagate(e, z2, tol);
    o = prop.propagate(o, z2, tol);
    Complex w = e.y * o.dy - e.dy * o.y;
    CHECK(std::abs(w - 1.0) < 10 * tol);

    // path independence: direct vs through z1
    OdeState direct = prop.propagate(initial_state(Parity::Even), z2, tol);
    double scale = std::max({1.0, std::abs(direct.y), std::abs(direct.dy)});
    CHECK(std::abs(direct.y - e.y) < 10 * tol * scale);
    CHECK(std::abs(direct.dy - e.dy) < 10 * tol * scale);
  }
}

TEST_CASE("symmetry transport: conjugate path gives conjugate state") {
  EvenPolynomial P({0.5, -1.0, 0.0, 1.0});
  TaylorPropagator prop(P, 2.7);
  const double tol = 1e-11;
  Complex z(1.1, 0.8);
  OdeState a = prop.propagate(initial_state(Parity::Even), z, tol);
  OdeState b = prop.propagate(initial_state(Parity::Even), std::conj(z), tol);
  double scale = std::max(1.0, std::abs(a.y));
  CHECK(std::abs(b.y - std::conj(a.y)) < 2 * tol * scale);
  CHECK(std::abs(b.dy - std::conj(a.dy)) < 2 * tol * scale * std::max(1.0, std::abs(a.dy)));
}

TEST_CASE("step underflow signals unresolvable input") {
  EvenPolynomial P({0.0, 1e280});
  TaylorPropagator prop(P, 0.0);
  CHECK_THROWS_AS(prop.propagate(initial_state(Parity::Even), Complex(10.0, 0.0), 1e-10),
                  StepUnderflow);
}

TEST_CASE("pair propagation preserves the ratio under power-of-two scaling") {
  TaylorPropagator prop(kQes0, 0.7);
  TaylorPropagator::PairState s1{0.0, 1.0, 0.0, 0.0, 1.0};
  TaylorPropagator::PairState s2{0.0, 2.0, 0.0, 0.0, 2.0};
  Complex target(1.3, 1.1);
  auto r1 = prop.propagate_pair(s1, target, 1e-10);
  auto r2 = prop.propagate_pair(s2, target, 1e-10);
  CHECK(r1.y / r1.y1 == r2.y / r2.y1);  // bitwise: scaling by 2 is exact
}
