#include <doctest.h>

#include <cmath>
#include <numbers>

#include "anharm/asymptotics.hpp"
#include "anharm/qes.hpp"
#include "anharm/spectrum.hpp"

using namespace anharm;

namespace {
const EvenPolynomial kQuartic({0.0, 0.0, 1.0});
const EvenPolynomial kQes0({0.0, -7.0, 0.0, 1.0});
const double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("normalized pair and its Wronskian") {
  auto [ye, y1e] = normalized_pair(Parity::Even);
  CHECK(ye.y == Complex(1.0));
  CHECK(y1e.dy == Complex(1.0));
  CHECK(ye.y * y1e.dy - ye.dy * y1e.y == Complex(1.0));
  auto [yo, y1o] = normalized_pair(Parity::Odd);
  CHECK(yo.dy == Complex(1.0));
  CHECK(yo.y * y1o.dy - yo.dy * y1o.y == Complex(-1.0));
}

TEST_CASE("quartic ground state table") {
  Eigenpair p0 = eigenvalue_k(kQuartic, 0, 1e-9);
  AsymptoticTable t = asymptotic_table(kQuartic, p0.lambda, Parity::Even, 1e-7);
  REQUIRE(t.values.size() == 6);
  SUBCASE("decay sectors give exact zero") {
    CHECK(t.values[0] == Complex(0.0));
    CHECK(t.values[3] == Complex(0.0));  // d/2 + 1 = 3
  }
  SUBCASE("a_1 is neither real nor imaginary") {
    CHECK(std::abs(t.values[1].real()) > 1e-3);
    CHECK(std::abs(t.values[1].imag()) > 1e-3);
  }
  SUBCASE("symmetry relations") {
    const int e = 6;
    for (int j = 0; j < e; ++j) {
      Complex aj = t.values[j];
      Complex a_neg = t.values[(e - j) % e];
      Complex a_i = t.values[((3 - j) % e + e) % e];
      CHECK(std::abs(aj - std::conj(a_neg)) <= 1e-6 * (1.0 + std::abs(aj)));
      CHECK(std::abs(aj + std::conj(a_i)) <= 1e-6 * (1.0 + std::abs(aj)));
    }
  }
  SUBCASE("adjacent sector values differ") {
    for (int j = 0; j < 6; ++j)
      CHECK(std::abs(t.values[j] - t.values[(j + 1) % 6]) > 1e-6);
  }
}

TEST_CASE("qes eigenfunctions kill every even sector") {
  auto sols = qes_solve({1, 0, 0.0});
  AsymptoticTable t = asymptotic_table(kQes0, sols[0].lambda, Parity::Even, 1e-7);
  REQUIRE(t.values.size() == 8);
  for (int j = 0; j < 8; j += 2) CHECK(t.values[j] == Complex(0.0));
  for (int j = 1; j < 8; j += 2) CHECK(std::abs(t.values[j]) > 1e-3);
}

TEST_CASE("g lands in the parity interval") {
  double g0 = g_angle(0, 0, 0, 0.0);
  CHECK(g0 > -kPi / 2);
  CHECK(g0 < 0.0);
  double g1 = g_angle(0, 0, 1, 0.0);
  CHECK(g1 > 0.0);
  CHECK(g1 < kPi / 2);
}

TEST_CASE("g is continuous in b at small spacing") {
  double prev = g_angle(0, 0, 0, 1.0);
  for (double h : {1e-2, 1e-3}) {
    double cur = g_angle(0, 0, 0, 1.0 + h);
    CHECK(std::abs(cur - prev) < 0.1);
  }
}

TEST_CASE("scale invariance of the argument") {
  // positive power-of-two scaling of the pair changes nothing, bitwise
  auto sols = qes_solve({0, 0, 0.5});
  double lambda = sols[0].lambda;
  EvenPolynomial P = qes_potential(0, 0, 0.5);
  TaylorPropagator prop(P, lambda);
  Complex dir = std::polar(1.0, 2.0 * kPi / 8.0);
  TaylorPropagator::PairState a{0.0, 1.0, 0.0, 0.0, 1.0};
  TaylorPropagator::PairState b{0.0, 4.0, 0.0, 0.0, 4.0};
  auto ra = prop.propagate_pair(a, 3.0 * dir, 1e-10);
  auto rb = prop.propagate_pair(b, 3.0 * dir, 1e-10);
  CHECK(std::arg(ra.y / ra.y1) == std::arg(rb.y / rb.y1));
}

TEST_CASE("surjectivity scan bookkeeping") {
  GScan one = surjectivity_scan(0, 0, 0, {0.5});
  CHECK(one.covered_lo == one.covered_hi);
  std::vector<double> coarse = {-1.0, 0.0, 1.0};
  std::vector<double> fine = {-1.0, -0.5, 0.0, 0.5, 1.0};
  GScan c = surjectivity_scan(0, 0, 0, coarse);
  GScan f = surjectivity_scan(0, 0, 0, fine);
  CHECK(f.covered_lo <= c.covered_lo + 1e-12);
  CHECK(f.covered_hi >= c.covered_hi - 1e-12);
  CHECK(c.covered_hi - c.covered_lo > 0.0);
  CHECK_THROWS(surjectivity_scan(0, 0, 0, {1.0, -1.0}));
}
