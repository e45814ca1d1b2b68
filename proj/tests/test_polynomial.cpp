#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "anharm/polynomial.hpp"

using namespace anharm;
using Complex = std::complex<double>;

TEST_CASE("eval matches direct powers") {
  EvenPolynomial quartic({0.0, 0.0, 1.0});  // z^4
  CHECK(quartic(Complex(2.0, 0.0)) == Complex(16.0, 0.0));
  CHECK(quartic(Complex(0.0, 1.0)) == Complex(1.0, 0.0));  // i^4 = 1
  EvenPolynomial sextic({0.0, 1.0, 4.0, 1.0});  // z^6 + 4z^4 + z^2
  CHECK(sextic(1.0) == doctest::Approx(6.0));
}

TEST_CASE("eval symmetries are exact in floating point") {
  EvenPolynomial P({0.3, -1.25, 0.5, 2.0});
  for (double x : {0.17, 1.3, 2.9})
    for (double y : {-2.0, 0.4, 1.7}) {
      Complex z(x, y);
      CHECK(P(-z) == P(z));
      CHECK(P(std::conj(z)) == std::conj(P(z)));
    }
}

TEST_CASE("constructor validates") {
  CHECK_THROWS(EvenPolynomial({1.0}));          // degree 0
  CHECK_THROWS(EvenPolynomial({0.0, -1.0}));    // negative leading coefficient
  CHECK_THROWS(EvenPolynomial({0.0, 1.0, 0.0, -2.0}));
  CHECK(EvenPolynomial({0.0, 1.0, 0.0}).degree() == 2);  // trailing zero trimmed
}

TEST_CASE("qes potential formula") {
  CHECK(qes_potential(0, 0, 2.0) == EvenPolynomial({0.0, 1.0, 4.0, 1.0}));
  CHECK(qes_potential(1, 0, 0.0) == EvenPolynomial({0.0, -7.0, 0.0, 1.0}));
  CHECK(qes_potential(0, 1, 0.0) == EvenPolynomial({0.0, -5.0, 0.0, 1.0}));
  CHECK(qes_potential(0, 0, 0.0).degree() == 6);
  CHECK_THROWS(qes_potential(0, 2, 0.0));
  CHECK_THROWS(qes_potential(-1, 0, 0.0));
}

TEST_CASE("stokes rays") {
  const double pi = std::numbers::pi;
  SUBCASE("d=4 has the classic six rays including the imaginary axis") {
    StokesGeometry g = stokes(4);
    REQUIRE(g.ray_angles.size() == 6);
    std::vector<double> got;
    for (const auto& r : g.ray_angles) got.push_back(r.radians());
    std::sort(got.begin(), got.end());
    std::vector<double> want = {pi / 6, pi / 2, 5 * pi / 6, 7 * pi / 6, 3 * pi / 2,
                                11 * pi / 6};
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]));
    int on_imag = 0;
    for (const auto& r : g.ray_angles) on_imag += r.on_imaginary_axis();
    CHECK(on_imag == 2);
  }
  SUBCASE("d=6 avoids both axes") {
    for (const auto& r : stokes(6).ray_angles) {
      CHECK(!r.on_real_axis());
      CHECK(!r.on_imaginary_axis());
    }
  }
  SUBCASE("d=2 rays") {
    StokesGeometry g = stokes(2);
    std::vector<double> got;
    for (const auto& r : g.ray_angles) got.push_back(r.radians());
    std::sort(got.begin(), got.end());
    std::vector<double> want = {pi / 4, 3 * pi / 4, 5 * pi / 4, 7 * pi / 4};
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]));
  }
  SUBCASE("angles pairwise distinct, sector 0 bisected by the real axis") {
    for (int d : {2, 4, 6, 8, 10}) {
      StokesGeometry g = stokes(d);
      for (std::size_t i = 0; i < g.ray_angles.size(); ++i)
        for (std::size_t j = i + 1; j < g.ray_angles.size(); ++j)
          CHECK(!(g.ray_angles[i] == g.ray_angles[j]));
      CHECK(g.sector_bisectors[0].radians() == 0.0);
    }
  }
  CHECK_THROWS(stokes(3));
  CHECK_THROWS(stokes(0));
}

TEST_CASE("potential parser") {
  CHECK(parse_potential("z^6-7z^2") == EvenPolynomial({0.0, -7.0, 0.0, 1.0}));
  CHECK(parse_potential("z^4 + z^2") == EvenPolynomial({0.0, 1.0, 1.0}));
  CHECK(parse_potential("2.5z^2 + 1") == EvenPolynomial({1.0, 2.5}));
  CHECK_THROWS(parse_potential("z^3"));
  CHECK_THROWS(parse_potential(""));
}

TEST_CASE("json round trip") {
  EvenPolynomial P({0.0, -7.0, 0.0, 1.0});
  std::string js = P.to_json();
  CHECK(js == "{\"even_coeffs\":[0,-7,0,1],\"degree\":6}");
  CHECK(EvenPolynomial::from_json(js) == P);
}
