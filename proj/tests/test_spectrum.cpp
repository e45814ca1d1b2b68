#include <doctest.h>

#include <cmath>

#include "anharm/errors.hpp"
#include "anharm/spectrum.hpp"
#include "fd_oracle.hpp"

using namespace anharm;

namespace {
const EvenPolynomial kHarmonic({0.0, 1.0});
const EvenPolynomial kQuartic({0.0, 0.0, 1.0});
const EvenPolynomial kQes0({0.0, -7.0, 0.0, 1.0});  // z^6 - 7z^2
}  // namespace

TEST_CASE("minimum of the potential") {
  CHECK(min_potential(kHarmonic) == doctest::Approx(0.0));
  // z^6 - 7z^2: minimum at z^2 = (7/3)^(1/2)
  double u = std::sqrt(7.0 / 3.0);
  CHECK(min_potential(kQes0) == doctest::Approx(u * u * u - 7.0 * u).epsilon(1e-10));
}

TEST_CASE("shooting radius clears the barrier and the action target") {
  double R = shooting_radius(kHarmonic, 11.0);
  CHECK(kHarmonic(R) - 11.0 >= 25.0);
  CHECK_THROWS_AS(miss(kHarmonic, 100.0, 2.0, Parity::Even), RadiusTooSmall);
}

TEST_CASE("miss behaves as a shooting discriminant") {
  SUBCASE("dominant growth away from the spectrum") {
    // lambda = 2 is no even eigenvalue: the log-derivative locks onto the
    // growing rate, so miss is close to 2 sqrt(P(R) - lambda).
    double m = miss(kHarmonic, 2.0, 6.0, Parity::Even);
    CHECK(m == doctest::Approx(2.0 * std::sqrt(36.0 - 2.0)).epsilon(0.02));
  }
  SUBCASE("small near the ground state on the scale of the dominant rate") {
    // At lambda = 1 the exact value is the WKB-rate defect, about -0.084;
    // roundoff-seeded growth can shift it by O(0.1). It stays two orders
    // of magnitude under the off-eigenvalue plateau.
    double m = miss(kHarmonic, 1.0, 6.0, Parity::Even, 1e-16);
    CHECK(std::abs(m) < 0.3);
  }
  SUBCASE("qes identity lambda = b") {
    // small relative to the off-eigenvalue plateau at a radius where the
    // recessive component is still above roundoff
    EvenPolynomial P({0.0, 1.0, 4.0, 1.0});
    double R = shooting_radius(P, 2.0, 13.0);
    double m = miss(P, 2.0, R, Parity::Even, 1e-16);
    CHECK(std::abs(m) < 0.05 * 2.0 * std::sqrt(P(R) - 2.0));
  }
}

TEST_CASE("node counts") {
  CHECK(node_count(kHarmonic, 5.0, 6.0, Parity::Even) == 2);
  CHECK(node_count(kHarmonic, 0.9, 6.0, Parity::Even) == 0);
  CHECK(node_count(kHarmonic, 3.0, 6.0, Parity::Odd) == 1);  // at the odd eigenvalue
  double R = shooting_radius(kQes0, 4.0);
  int n = node_count(kQes0, 2.0 * std::sqrt(2.0) + 0.01, R, Parity::Even);
  CHECK(n >= 2);
  CHECK(n == 4);
  CHECK_THROWS_AS(node_count(kHarmonic, 100.0, 3.0, Parity::Even), RadiusTooSmall);
}

TEST_CASE("node count is nondecreasing in lambda") {
  double R = shooting_radius(kQuartic, 30.0);
  int prev = -1;
  for (double lam = 0.0; lam <= 25.0; lam += 1.3) {
    int n = node_count(kQuartic, lam, R, Parity::Even);
    CHECK(n >= prev);
    prev = n;
  }
}

TEST_CASE("harmonic eigenvalues are 2k+1") {
  auto pairs = eigenvalues(kHarmonic, 3, 1e-10);
  REQUIRE(pairs.size() == 4);
  for (int k = 0; k <= 3; ++k) {
    CHECK(pairs[k].lambda == doctest::Approx(2.0 * k + 1.0).epsilon(1e-8));
    CHECK(pairs[k].real_zero_count == k);
    CHECK(pairs[k].parity == (k % 2 ? Parity::Odd : Parity::Even));
  }
}

TEST_CASE("quartic ground state against the finite-difference oracle") {
  double oracle = fd_oracle::lowest_eigenvalue(kQuartic);
  Eigenpair pair = eigenvalue_k(kQuartic, 0, 1e-8);
  CHECK(pair.lambda == doctest::Approx(oracle).epsilon(1e-6));
  CHECK(pair.lambda == doctest::Approx(1.0603621).epsilon(1e-6));
}

TEST_CASE("sextic qes ground state at -2 sqrt 2") {
  Eigenpair pair = eigenvalue_k(kQes0, 0, 1e-9);
  CHECK(pair.lambda == doctest::Approx(-2.0 * std::sqrt(2.0)).epsilon(1e-8));
}

TEST_CASE("radius robustness") {
  Eigenpair pair = eigenvalue_k(kQuartic, 2, 1e-9);
  double R2 = 1.5 * pair.radius_used;
  // recompute with the larger radius via the raw bisection ingredients
  int target = pair.k + 2;
  double lo = min_potential(kQuartic) - 1.0, hi = 40.0;
  for (int it = 0; it < 80; ++it) {
    double mid = 0.5 * (lo + hi);
    if (node_count(kQuartic, mid, R2, Parity::Even) >= target)
      hi = mid;
    else
      lo = mid;
  }
  CHECK(0.5 * (lo + hi) == doctest::Approx(pair.lambda).epsilon(1e-8));
}

TEST_CASE("parity exclusion: even miss keeps one sign strictly between even eigenvalues") {
  auto pairs = eigenvalues(kHarmonic, 2, 1e-9);
  double l0 = pairs[0].lambda, l2 = pairs[2].lambda;
  double R = shooting_radius(kHarmonic, l2 + 1.0, 13.0);
  int sign = 0;
  for (int i = 1; i <= 19; ++i) {
    double lam = l0 + (l2 - l0) * i / 20.0;
    double m = miss(kHarmonic, lam, R, Parity::Even);
    int s = m > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    CHECK(s == sign);
  }
}

TEST_CASE("increasing sequence invariant") {
  auto pairs = eigenvalues(kQes0, 4, 1e-8);
  for (std::size_t i = 0; i + 1 < pairs.size(); ++i)
    CHECK(pairs[i + 1].lambda > pairs[i].lambda);
}
