#include <doctest.h>

#include <cmath>

#include "anharm/errors.hpp"
#include "anharm/spectrum.hpp"
#include "anharm/zeros.hpp"

using namespace anharm;

namespace {
const EvenPolynomial kHarmonic({0.0, 1.0});
const EvenPolynomial kQuartic({0.0, 0.0, 1.0});
const EvenPolynomial kQes0({0.0, -7.0, 0.0, 1.0});  // z^6 - 7z^2
const double kSqrt2 = std::sqrt(2.0);
}  // namespace

TEST_CASE("axis zeros of the Hermite eigenfunction") {
  // H2 has zeros +- 1/sqrt(2)
  auto zs = axis_zeros(kHarmonic, 5.0, Parity::Even, 3.0, 1e-8, Axis::Real);
  REQUIRE(zs.size() == 2);
  CHECK(zs[0] == doctest::Approx(-1.0 / kSqrt2).epsilon(1e-7));
  CHECK(zs[1] == doctest::Approx(1.0 / kSqrt2).epsilon(1e-7));
  CHECK(axis_zeros(kHarmonic, 5.0, Parity::Even, 3.0, 1e-8, Axis::Imaginary).empty());
}

TEST_CASE("axis zeros of the sextic closed forms") {
  SUBCASE("ground state: imaginary pair at 2^{-1/4}") {
    double lam = -2.0 * kSqrt2;
    CHECK(axis_zeros(kQes0, lam, Parity::Even, 3.0, 1e-8, Axis::Real).empty());
    auto im = axis_zeros(kQes0, lam, Parity::Even, 3.0, 1e-8, Axis::Imaginary);
    REQUIRE(im.size() == 2);
    CHECK(im[1] == doctest::Approx(std::pow(2.0, -0.25)).epsilon(1e-7));
    CHECK(im[0] == doctest::Approx(-std::pow(2.0, -0.25)).epsilon(1e-7));
  }
  SUBCASE("second excited state: real pair") {
    double lam = 2.0 * kSqrt2;
    auto re = axis_zeros(kQes0, lam, Parity::Even, 3.0, 1e-8, Axis::Real);
    REQUIRE(re.size() == 2);
    CHECK(re[1] == doctest::Approx(std::pow(2.0, -0.25)).epsilon(1e-7));
  }
}

TEST_CASE("rectangle winding counts") {
  SUBCASE("box around a single Hermite zero") {
    CHECK(count_zeros_rect(kHarmonic, 5.0, Parity::Even, {0.5, 1.0, -0.2, 0.2}, 1e-8) == 1);
  }
  SUBCASE("first-quadrant box of the quartic ground state is empty") {
    Eigenpair p0 = eigenvalue_k(kQuartic, 0, 1e-9);
    CHECK(count_zeros_rect(kQuartic, p0.lambda, Parity::Even, {0.2, 3.0, 0.2, 3.0}, 1e-8) ==
          0);
  }
  SUBCASE("whole box of the sextic ground state sees the imaginary pair") {
    CHECK(count_zeros_rect(kQes0, -2.0 * kSqrt2, Parity::Even,
                           {-3.001, 3.0017, -3.0003, 3.0011}, 1e-8) == 2);
  }
}

TEST_CASE("census of the harmonic k=2 state") {
  ZeroCensus c = census(kHarmonic, 5.0, Parity::Even, {3.0, 3.0}, 1e-8, 2);
  CHECK(c.real_zeros.size() == 2);
  CHECK(c.imaginary_zeros.empty());
  CHECK(c.offaxis_count == 0);
  CHECK(c.consistent);
  CHECK(c.whole_box_count == 2);
  CHECK(verify_axis_confinement(c));
}

TEST_CASE("census of the quartic ground state") {
  Eigenpair p0 = eigenvalue_k(kQuartic, 0, 1e-9);
  ZeroCensus c = census(kQuartic, p0.lambda, Parity::Even, {3.0, 3.0}, 1e-7, 0);
  CHECK(c.real_zeros.empty());
  CHECK(!c.imaginary_zeros.empty());
  CHECK(c.offaxis_count == 0);
  CHECK(c.consistent);
  CHECK(verify_axis_confinement(c));
}

TEST_CASE("census of the sextic qes ground state") {
  ZeroCensus c = census(kQes0, -2.0 * kSqrt2, Parity::Even, {3.0, 3.0}, 1e-7, 0);
  CHECK(c.real_zeros.empty());
  REQUIRE(c.imaginary_zeros.size() == 2);
  CHECK(c.imaginary_zeros[1] == doctest::Approx(std::pow(2.0, -0.25)).epsilon(1e-6));
  CHECK(c.offaxis_count == 0);
  CHECK(c.consistent);
}

TEST_CASE("census symmetry and index law across the quartic spectrum") {
  auto pairs = eigenvalues(kQuartic, 3, 1e-9);
  for (const auto& pair : pairs) {
    ZeroCensus c = census(kQuartic, pair.lambda, pair.parity, {3.0, 3.0}, 1e-7, pair.k);
    CHECK(static_cast<int>(c.real_zeros.size()) == pair.k);
    // negation symmetry
    for (std::size_t i = 0; i < c.real_zeros.size(); ++i)
      CHECK(c.real_zeros[i] ==
            doctest::Approx(-c.real_zeros[c.real_zeros.size() - 1 - i]).epsilon(1e-6));
    for (std::size_t i = 0; i < c.imaginary_zeros.size(); ++i)
      CHECK(c.imaginary_zeros[i] ==
            doctest::Approx(-c.imaginary_zeros[c.imaginary_zeros.size() - 1 - i])
                .epsilon(1e-6));
    // quadrant counts pairwise equal
    for (int q = 1; q < 4; ++q) CHECK(c.quadrant_counts[q] == c.quadrant_counts[0]);
    if (pair.parity == Parity::Odd) {
      bool has_origin = false;
      for (double z : c.real_zeros) has_origin = has_origin || z == 0.0;
      CHECK(has_origin);
    }
    CHECK(c.consistent);
  }
}

TEST_CASE("hand-built census fails confinement") {
  ZeroCensus c;
  c.offaxis_count = 4;
  CHECK(!verify_axis_confinement(c));
}

TEST_CASE("degree-8 potential: off-axis zeros are found and refined") {
  // Outside the theorem's degree range the census machinery must still
  // produce a consistent decomposition; the z^8 ground state develops
  // off-axis zeros near the oblique Stokes directions.
  EvenPolynomial P({0.0, 0.0, 0.0, 0.0, 1.0});
  Eigenpair p0 = eigenvalue_k(P, 0, 1e-8);
  ZeroCensus c = census(P, p0.lambda, Parity::Even, {2.5, 2.5}, 1e-7, 0);
  CHECK(c.consistent);
  CHECK(c.offaxis_count > 0);
  CHECK(c.offaxis_count % 4 == 0);
  CHECK(static_cast<int>(c.quadrant_zeros.size()) == c.offaxis_count);
}

TEST_CASE("census argument validation") {
  CHECK_THROWS(census(kHarmonic, 1.0, Parity::Even, {0.0, 3.0}, 1e-7, 0));
  CHECK_THROWS(axis_zeros(kHarmonic, 1.0, Parity::Even, -1.0, 1e-7, Axis::Real));
  CHECK_THROWS(count_zeros_rect(kHarmonic, 1.0, Parity::Even, {1.0, 0.0, 0.0, 1.0}, 1e-7));
}
